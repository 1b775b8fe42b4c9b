#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "strata/classify.hpp"
#include "strata/exactmat.hpp"

namespace strata {

/// Two-parameter family of 4x4 momentum-conserving matrices
/// [[0, x, -x-y, y], [x, 0, y, -x-y], [-x-y, y, 0, x], [y, -x-y, x, 0]].
SymmetricMatrix mmc4_matrix(const mpq_class& x, const mpq_class& y);

struct Mmc4Point {
  enum class Status { Inside, Outside, Origin };
  Status status = Status::Outside;
  /// Common value of all 3x3 principal minors, -2xy(x+y).
  mpq_class minor;
  std::optional<StratumLabel> label;
};

Mmc4Point mmc4_classify(const mpq_class& x, const mpq_class& y);

/// Coordinates (a, b, c, d, e) of the five-point family.
using Mmc5Point = std::array<mpq_class, 5>;

/// Columns s12, s13, s14, s15, s23, s24, s25, s34, s35, s45 (0-based pairs).
inline constexpr std::array<std::pair<int, int>, 10> kPairColumns{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Coefficients of s_ij as a linear form in (a, b, c, d, e), in kPairColumns order.
const std::array<std::array<int, 5>, 10>& mmc5_forms();

SymmetricMatrix mmc5_matrix(const Mmc5Point& p);
/// Quartic whose sign decides membership; every 4x4 principal minor of
/// mmc5_matrix equals it.
mpq_class igusa_quartic(const Mmc5Point& p);

struct SignRegion {
  std::array<int, 10> entry_signs{};  // in kPairColumns order
  std::array<int, 5> sigma{};         // representative with at most two minus signs
  Mmc5Point witness{};                // rational point with these strict signs
};

struct ArrangementCensus {
  /// Strict sign vectors realised by an open cell of the hyperplane arrangement.
  int region_count = 0;
  /// Cells whose signs are consistent on every triple, ordered by sigma
  /// ('-' before '+').
  std::vector<SignRegion> consistent;
};

/// Decides each of the 2^10 strict sign vectors with an exact LP.
ArrangementCensus arrangement_census();

/// Exact rational bisection of a polynomial sign change along a segment:
/// returns the parameter t in [0, 1] with f(start + t (end - start)) = 0 when
/// the bisection hits it exactly, otherwise nullopt after max_steps.
std::optional<mpq_class> bisect_zero(const Mmc5Point& start, const Mmc5Point& end, int max_steps = 64);

/// Rational five-point momentum-conserving configuration in R^{1,rank-1}
/// (rank 3 or 4) with sigma = (-,-,+,+,+), read back as family coordinates.
Mmc5Point rational_mmc5_point(int rank, std::uint64_t seed);

/// A rational segment [start, end] through a rational rank-3 point whose
/// quartic changes sign, placed so that exact bisection lands on it.
struct BoundarySegment {
  Mmc5Point start{};
  Mmc5Point end{};
  Mmc5Point boundary{};
};
BoundarySegment boundary_segment(std::uint64_t seed);

}  // namespace strata
