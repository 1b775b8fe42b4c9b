#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "strata/classify.hpp"

namespace strata {

/// Largest ground set accepted by export_poset.
inline constexpr int kMaxPosetSize = 7;

struct PosetQuery {
  int n = 0;
  int r = 2;
  Region region = Region::Mandelstam;
  /// Restrict to the order ideal below this signed matroid.
  std::optional<SignedMatroid> below;
};

struct Poset {
  std::vector<StratumLabel> vertices;          // enumeration order
  std::vector<std::pair<int, int>> covers;     // (lower, upper) indices into vertices
};

/// Hasse diagram of signed_leq on the nonempty (or momentum-conserving)
/// strata of one rank. Lorentzian keeps only all-plus sign vectors.
Poset export_poset(const PosetQuery& q);

}  // namespace strata
