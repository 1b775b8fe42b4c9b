#pragma once

#include "strata/census.hpp"
#include "strata/exactmat.hpp"
#include "strata/matroid.hpp"

namespace strata {

/// Stratum index (P, sigma, r) within a region. The Lorentzian kind always
/// carries the all-plus sign vector.
struct StratumLabel {
  SignedMatroid signed_matroid;
  int rank = 0;
  Region kind = Region::Mandelstam;

  /// Stratum dimension; uses the momentum-conserving count for MMC.
  int dimension() const;

  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

/// Default kind for a signed matroid outside the MMC region.
Region massless_kind(const SignedMatroid& sm);

struct Classification {
  StratumLabel label;
  /// Smallest |s_ij| treated as nonzero; small values mean the input sits
  /// close to a stratum boundary under float tolerances.
  double margin = 0.0;
};

/// Reads the stratum of a massless Mandelstam matrix: zero rows are loops,
/// zero entries define parallel classes, entry signs give sigma. Zero row sums
/// put the label in the MMC region.
Classification classify_massless(const SymmetricMatrix& s);

/// Every off-diagonal block between two parts of P has rank <= 1.
bool check_rank_one_blocks(const SymmetricMatrix& s, const RankTwoMatroid& p);

}  // namespace strata
