#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

#include "strata/matroid.hpp"

namespace strata {

/// Kinematic region. Mandelstam is the massless Mandelstam region, Lorentzian
/// its non-negative part, MMC the massless momentum-conserving region.
enum class Region { Mandelstam, Lorentzian, MMC };

std::string_view to_string(Region region);
Region region_from_string(std::string_view text);

/// The massless stratum of P at rank r is nonempty iff 3 <= r <= m or r = m = 2.
bool nonempty_massless(const RankTwoMatroid& p, int r);
/// m(r-2) + n - l - C(r,2). Throws EmptyStratum when the stratum is empty.
int dim_massless(const RankTwoMatroid& p, int r);

/// Closed-form number of massless strata of dimension d at rank r, for one
/// fixed sign vector or summed over all sign vectors.
mpz_class count_massless(int n, int r, int d, bool all_sigma);
/// Rank-two closed forms: (2^d - 1) C(n, d+1) Lorentzian strata and
/// (2^{2d} - 2^d) C(n, d+1) Mandelstam strata. `region` must not be MMC.
mpz_class count_rank2(int n, int d, Region region);

/// r-momentum-conservation criterion. Requires a nonempty massless stratum.
bool mmc_admissible(const SignedMatroid& sm, int r);
/// Nonempty massless stratum and admissible; never throws.
bool mmc_nonempty(const SignedMatroid& sm, int r);
/// (m-1)(r-1) - C(r,2) + (n-l-m) - 1. Throws Inadmissible when not admissible.
int dim_mmc(const SignedMatroid& sm, int r);

/// Number of r-momentum-conserving signed loopless matroids on n elements
/// with m parts.
mpz_class mmc_loopless_count(int n, int m, int r);
mpz_class count_mmc(int n, int r, int d);
/// 2^{n-1} - n - 1 full-dimensional MMC strata (0 for n < 4).
mpz_class mmc_top_count(int n);
/// (m-1)!/2 cyclic arrangements of m points on a circle (1 for m < 3).
mpz_class components_r3(int m);

struct CensusRow {
  int n = 0;
  int r = 0;
  int d = 0;
  mpz_class count_fixed;
  mpz_class count_all;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusQuery {
  int n = 0;
  Region region = Region::Mandelstam;
  std::optional<int> r;
  std::optional<int> d;
};

/// Reference sign vector for fixed-sigma counts: all plus for the massless
/// regions; minus on the first floor(n/2) elements for MMC.
std::vector<int> reference_sigma(int n, Region region);

/// Ranges of the census tables: ranks 2..max_rank, dimensions 1..max_dimension.
int table_max_rank(int n, Region region);
int table_max_dimension(int n, Region region);

/// Rows ordered by (d, r); cells where both counts vanish are omitted.
/// MMC fixed-sigma counts come from enumeration (no closed form).
std::vector<CensusRow> build_table(const CensusQuery& q);
/// Same table, every cell derived by enumerating (signed) matroids.
std::vector<CensusRow> brute_force_table(const CensusQuery& q);

}  // namespace strata
