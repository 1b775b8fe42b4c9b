#pragma once

// Published census tables: (d, r, fixed-sign count, all-sign count) per row,
// in the row order produced by build_table.

#include <tuple>
#include <vector>

namespace tables {

using Cell = std::tuple<int, int, long, long>;

inline const std::vector<Cell> kMassless4{
    {1, 2, 6, 12}, {2, 2, 12, 48}, {3, 2, 7, 56}, {3, 3, 4, 16}, {4, 3, 6, 48}, {5, 3, 1, 8}, {6, 4, 1, 8}};

inline const std::vector<Cell> kMassless5{
    {1, 2, 10, 20}, {2, 2, 30, 120}, {3, 2, 35, 280}, {3, 3, 10, 40}, {4, 2, 15, 240}, {4, 3, 30, 240},
    {5, 3, 30, 440}, {6, 3, 10, 160}, {6, 4, 5, 40},  {7, 3, 1, 16},   {7, 4, 10, 160}, {9, 4, 1, 16},
    {10, 5, 1, 16}};

inline const std::vector<Cell> kConserving4{{1, 2, 2, 6}, {2, 3, 1, 3}};

inline const std::vector<Cell> kConserving5{
    {1, 2, 6, 30}, {2, 2, 6, 60}, {2, 3, 3, 15}, {3, 3, 9, 90}, {4, 3, 1, 10}, {5, 4, 1, 10}};

}  // namespace tables
