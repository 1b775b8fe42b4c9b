#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "strata/classify.hpp"
#include "strata/exactmat.hpp"
#include "strata/matroid.hpp"

namespace strata {

/// Seed used when the caller passes none; STRATA_SEED overrides it in the CLI.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// n massless momenta p_i = lambda_i (1, x_i) in R^{1,r-1}, x_i on the unit
/// sphere S^{r-2}. Loops carry lambda = 0; their point is ignored.
struct MomentumConfig {
  int n = 0;
  int r = 0;
  std::uint64_t seed = 0;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> points;  // each of length r - 1

  Eigen::VectorXd momentum(int i) const;
  /// Sum of all momenta.
  Eigen::VectorXd total_momentum() const;
};

/// s_ij = p_i . p_j = lambda_i lambda_j (1 - <x_i, x_j>) with signature (+,-,...,-).
SymmetricMatrix gram(const MomentumConfig& c);

/// Random point of the massless stratum (P, sigma, r): one generic point per
/// part, multipliers log-uniform in [1/2, 2] with signs sigma.
MomentumConfig sample_stratum(const SignedMatroid& sm, int r, std::uint64_t seed = kDefaultSeed);

/// Random point of the momentum-conserving stratum; sum of momenta below
/// 1e-10 in max norm.
MomentumConfig sample_mmc(const SignedMatroid& sm, int r, std::uint64_t seed = kDefaultSeed);

struct DimensionEstimate {
  int rank = 0;            // numerical rank of the local parametrisation
  int expected = 0;        // formula dimension
  int parameters = 0;      // number of free parameters perturbed
  double cutoff = 0.0;     // absolute singular-value cutoff used
  std::vector<double> singular_values;
};

/// Numerical rank of the Jacobian of (points, multipliers) -> Gram entries
/// at a sampled point; for MMC the Jacobian is restricted to the tangent
/// space of the conservation constraint.
DimensionEstimate estimate_dimension(const SignedMatroid& sm, int r, bool mmc,
                                     std::uint64_t seed = kDefaultSeed);

/// Circular order of the parts of a rank-3 stratum point: part indices
/// (0-based, parts numbered by minimum element) starting with part 0, the
/// direction fixed so the second entry is smaller than the last.
std::vector<int> cyclic_order(const SymmetricMatrix& s);

struct Refinement {
  MomentumConfig config;
  /// Exact Gram matrix of the rational configuration behind `config`; its
  /// exact classification certifies the target stratum. When the source
  /// already lies in the target this is gram(c) and config is c.
  SymmetricMatrix exact_gram;
  /// Max-entry distance between gram(config) and the source Gram.
  double distance = 0.0;
};

/// Moves a configuration into the stratum `target` at rank `rank` (greater
/// or equal to the source rank) while staying within eps of the source Gram.
/// Throws Incomparable unless the source label lies below the target.
Refinement perturb_to_refinement(const MomentumConfig& c, const SignedMatroid& target, int rank, double eps,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace strata
