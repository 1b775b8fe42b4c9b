#include "strata/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace strata {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kMaxAttempts = 100;
constexpr int kNewtonIterations = 200;
constexpr double kConservationTol = 1e-10;
constexpr double kFiniteStep = 1e-6;

std::mt19937_64 make_rng(std::uint64_t seed, int attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt)};
  return std::mt19937_64(seq);
}

double log_uniform(std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> unit(std::log(lo), std::log(hi));
  return std::exp(unit(rng));
}

VectorXd random_unit(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  VectorXd v(dim);
  do {
    for (int k = 0; k < dim; ++k) v[k] = gauss(rng);
  } while (v.norm() < 1e-3);
  return v / v.norm();
}

// One point per part on S^{r-2}, pairwise separated, with the lifted
// vectors (1, x) spanning R^min(m, r) comfortably.
std::vector<VectorXd> generic_points(int m, int r, std::mt19937_64& rng) {
  if (r == 2) {
    VectorXd plus(1), minus(1);
    plus << 1.0;
    minus << -1.0;
    return {plus, minus};
  }
  for (int tries = 0; tries < 1000; ++tries) {
    std::vector<VectorXd> pts;
    for (int k = 0; k < m; ++k) pts.push_back(random_unit(r - 1, rng));
    double closest = 2.0;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) closest = std::min(closest, (pts[a] - pts[b]).norm());
    }
    if (closest < 0.05) continue;
    MatrixXd lifted(m, r);
    for (int a = 0; a < m; ++a) {
      lifted(a, 0) = 1.0;
      lifted.row(a).tail(r - 1) = pts[a].transpose();
    }
    Eigen::JacobiSVD<MatrixXd> svd(lifted);
    const auto& sv = svd.singularValues();
    const int span = std::min(m, r);
    if (sv[span - 1] < 1e-3 * sv[0]) continue;
    return pts;
  }
  throw Error(ErrorCode::SamplingFailed, "could not draw generic points");
}

MomentumConfig assemble(const SignedMatroid& sm, int r, std::uint64_t seed, const std::vector<VectorXd>& part_points,
                        const std::vector<double>& lambdas) {
  const RankTwoMatroid& p = sm.matroid();
  MomentumConfig c;
  c.n = p.ground_size();
  c.r = r;
  c.seed = seed;
  c.lambdas = lambdas;
  c.points.assign(static_cast<std::size_t>(c.n), std::vector<double>(static_cast<std::size_t>(r - 1), 0.0));
  for (int i = 0; i < c.n; ++i) {
    if (p.is_loop(i)) {
      c.points[i][0] = 1.0;
      continue;
    }
    const VectorXd& x = part_points[p.part_of(i)];
    for (int k = 0; k < r - 1; ++k) c.points[i][k] = x[k];
  }
  return c;
}

bool lands_in(const MomentumConfig& c, const SignedMatroid& sm, int r, bool mmc) {
  try {
    const Classification cls = classify_massless(gram(c));
    if (cls.label.signed_matroid != sm || cls.label.rank != r) return false;
    return (cls.label.kind == Region::MMC) == mmc;
  } catch (const Error&) {
    return false;
  }
}

// Free parameters of a stratum point: an unnormalised direction y per part
// and a log-multiplier rho per non-loop, lambda_i = sigma_i exp(rho_i).
class Parametrisation {
 public:
  Parametrisation(const SignedMatroid& sm, int r) : sm_(sm), r_(r), dim_(r - 1) {
    const RankTwoMatroid& p = sm.matroid();
    parts_ = p.num_parts();
    nonloops_ = p.nonloops();
  }

  int size() const { return parts_ * dim_ + static_cast<int>(nonloops_.size()); }

  VectorXd from_config(const MomentumConfig& c) const {
    VectorXd theta(size());
    const RankTwoMatroid& p = sm_.matroid();
    for (int i : nonloops_) {
      for (int k = 0; k < dim_; ++k) theta[p.part_of(i) * dim_ + k] = c.points[i][k];
    }
    for (std::size_t a = 0; a < nonloops_.size(); ++a) theta[rho_index(a)] = std::log(std::abs(c.lambdas[nonloops_[a]]));
    return theta;
  }

  VectorXd from_parts(const std::vector<VectorXd>& part_points, const std::vector<double>& lambdas) const {
    VectorXd theta(size());
    for (int mu = 0; mu < parts_; ++mu) theta.segment(mu * dim_, dim_) = part_points[mu];
    for (std::size_t a = 0; a < nonloops_.size(); ++a) theta[rho_index(a)] = std::log(std::abs(lambdas[nonloops_[a]]));
    return theta;
  }

  MomentumConfig to_config(const VectorXd& theta, std::uint64_t seed) const {
    std::vector<VectorXd> pts;
    for (int mu = 0; mu < parts_; ++mu) pts.push_back(direction(theta, mu));
    std::vector<double> lambdas(static_cast<std::size_t>(sm_.ground_size()), 0.0);
    for (std::size_t a = 0; a < nonloops_.size(); ++a) lambdas[nonloops_[a]] = lambda(theta, a);
    return assemble(sm_, r_, seed, pts, lambdas);
  }

  VectorXd total_momentum(const VectorXd& theta) const {
    VectorXd sum = VectorXd::Zero(r_);
    const RankTwoMatroid& p = sm_.matroid();
    for (std::size_t a = 0; a < nonloops_.size(); ++a) {
      const double lam = lambda(theta, a);
      sum[0] += lam;
      sum.tail(dim_) += lam * direction(theta, p.part_of(nonloops_[a]));
    }
    return sum;
  }

  MatrixXd momentum_jacobian(const VectorXd& theta) const {
    MatrixXd jac = MatrixXd::Zero(r_, size());
    const RankTwoMatroid& p = sm_.matroid();
    std::vector<double> part_mass(static_cast<std::size_t>(parts_), 0.0);
    for (std::size_t a = 0; a < nonloops_.size(); ++a) {
      const int mu = p.part_of(nonloops_[a]);
      const double lam = lambda(theta, a);
      part_mass[mu] += lam;
      jac(0, rho_index(a)) = lam;
      jac.col(rho_index(a)).tail(dim_) = lam * direction(theta, mu);
    }
    for (int mu = 0; mu < parts_; ++mu) {
      const VectorXd y = theta.segment(mu * dim_, dim_);
      const double norm = y.norm();
      const VectorXd x = y / norm;
      const MatrixXd proj = (MatrixXd::Identity(dim_, dim_) - x * x.transpose()) / norm;
      jac.block(1, mu * dim_, dim_, dim_) = part_mass[mu] * proj;
    }
    return jac;
  }

  VectorXd gram_entries(const VectorXd& theta) const {
    const MomentumConfig c = to_config(theta, 0);
    const SymmetricMatrix s = gram(c);
    const int n = c.n;
    VectorXd out(n * (n - 1) / 2);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out[k++] = s(i, j).real();
    }
    return out;
  }

 private:
  int rho_index(std::size_t a) const { return parts_ * dim_ + static_cast<int>(a); }
  double lambda(const VectorXd& theta, std::size_t a) const {
    return sm_.sigma()[nonloops_[a]] * std::exp(theta[rho_index(a)]);
  }
  VectorXd direction(const VectorXd& theta, int mu) const {
    const VectorXd y = theta.segment(mu * dim_, dim_);
    return y / y.norm();
  }

  const SignedMatroid& sm_;
  int r_;
  int dim_;
  int parts_ = 0;
  std::vector<int> nonloops_;
};

// Damped Gauss-Newton on the conservation residual.
bool solve_conservation(const Parametrisation& param, VectorXd& theta) {
  double residual = param.total_momentum(theta).norm();
  for (int iter = 0; iter < kNewtonIterations; ++iter) {
    if (residual <= 1e-14) return true;
    const MatrixXd jac = param.momentum_jacobian(theta);
    Eigen::JacobiSVD<MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const VectorXd step = -svd.solve(param.total_momentum(theta));
    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving, scale /= 2) {
      const VectorXd trial = theta + scale * step;
      const double next = param.total_momentum(trial).norm();
      if (std::isfinite(next) && next < residual) {
        theta = trial;
        residual = next;
        improved = true;
        break;
      }
    }
    if (!improved) return residual <= 1e-14;
  }
  return residual <= 1e-14;
}

struct Quadruple {
  int i, j, k, l;
  bool crossed;
};

std::vector<Quadruple> admissibility_witnesses(const SignedMatroid& sm) {
  const RankTwoMatroid& p = sm.matroid();
  std::vector<int> plus, minus;
  for (int i : p.nonloops()) (sm.sigma()[i] > 0 ? plus : minus).push_back(i);
  std::vector<Quadruple> out;
  for (std::size_t a = 0; a < plus.size(); ++a) {
    for (std::size_t b = a + 1; b < plus.size(); ++b) {
      for (std::size_t c = 0; c < minus.size(); ++c) {
        for (std::size_t e = c + 1; e < minus.size(); ++e) {
          const int i = plus[a], j = plus[b], k = minus[c], l = minus[e];
          if (p.parallel(i, j) || p.parallel(k, l)) continue;
          const int pi = p.part_of(i), pj = p.part_of(j), pk = p.part_of(k), pl = p.part_of(l);
          if (pk != pi && pk != pj && pl != pi && pl != pj) out.push_back({i, j, k, l, false});
          if (pi == pk && pj == pl) out.push_back({i, j, k, l, true});
          if (pi == pl && pj == pk) out.push_back({i, j, l, k, true});
        }
      }
    }
  }
  return out;
}

std::vector<double> column_norms_sorted(const MatrixXd& m) {
  Eigen::JacobiSVD<MatrixXd> svd(m);
  const VectorXd sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int numerical_rank(const std::vector<double>& sv, double& cutoff) {
  const double top = sv.empty() ? 0.0 : sv.front();
  cutoff = tolerance::kRank * top;
  return static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double v) { return v > cutoff; }));
}

}  // namespace

Eigen::VectorXd MomentumConfig::momentum(int i) const {
  VectorXd p(r);
  p[0] = lambdas.at(i);
  for (int k = 0; k < r - 1; ++k) p[k + 1] = lambdas[i] * points.at(i).at(k);
  return p;
}

Eigen::VectorXd MomentumConfig::total_momentum() const {
  VectorXd sum = VectorXd::Zero(r);
  for (int i = 0; i < n; ++i) sum += momentum(i);
  return sum;
}

SymmetricMatrix gram(const MomentumConfig& c) {
  if (c.r < 2) throw Error(ErrorCode::InvalidArgument, "configuration rank must be at least 2");
  if (static_cast<int>(c.lambdas.size()) != c.n || static_cast<int>(c.points.size()) != c.n) {
    throw Error(ErrorCode::InvalidArgument, "configuration needs n multipliers and n points");
  }
  SymmetricMatrix s(c.n, Mode::Float);
  for (int i = 0; i < c.n; ++i) {
    if (static_cast<int>(c.points[i].size()) != c.r - 1) {
      throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(i + 1) + " has the wrong dimension", {i});
    }
  }
  for (int i = 0; i < c.n; ++i) {
    for (int j = i + 1; j < c.n; ++j) {
      double dot = 0.0;
      for (int k = 0; k < c.r - 1; ++k) dot += c.points[i][k] * c.points[j][k];
      s.set(i, j, c.lambdas[i] * c.lambdas[j] * (1.0 - dot));
    }
  }
  return s;
}

MomentumConfig sample_stratum(const SignedMatroid& sm, int r, std::uint64_t seed) {
  const RankTwoMatroid& p = sm.matroid();
  if (!nonempty_massless(p, r)) {
    throw Error(ErrorCode::EmptyStratum, "massless stratum is empty at rank " + std::to_string(r));
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto rng = make_rng(seed, attempt);
    const auto pts = generic_points(p.num_parts(), r, rng);
    std::vector<double> lambdas(static_cast<std::size_t>(p.ground_size()), 0.0);
    for (int i : p.nonloops()) lambdas[i] = sm.sigma()[i] * log_uniform(rng);
    MomentumConfig c = assemble(sm, r, seed, pts, lambdas);
    if (lands_in(c, sm, r, false)) return c;
  }
  throw Error(ErrorCode::SamplingFailed, "no sample landed in the requested stratum");
}

MomentumConfig sample_mmc(const SignedMatroid& sm, int r, std::uint64_t seed) {
  const RankTwoMatroid& p = sm.matroid();
  if (!mmc_admissible(sm, r)) {
    throw Error(ErrorCode::Inadmissible, "signed matroid is not momentum-conserving at rank " + std::to_string(r));
  }
  const int m = p.num_parts();
  const Parametrisation param(sm, r);
  const auto witnesses = r < m ? admissibility_witnesses(sm) : std::vector<Quadruple>{};
  bool converged_once = false;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto rng = make_rng(seed, attempt);
    auto pts = generic_points(m, r, rng);
    std::vector<double> lambdas(static_cast<std::size_t>(p.ground_size()), 0.0);

    if (r == m) {
      // Cancel the multipliers inside each part.
      for (const auto& part : p.parts()) {
        double pos = 0.0, neg = 0.0;
        for (int i : part) {
          lambdas[i] = log_uniform(rng);
          (sm.sigma()[i] > 0 ? pos : neg) += lambdas[i];
        }
        for (int i : part) lambdas[i] *= sm.sigma()[i] > 0 ? 1.0 : -pos / neg;
      }
      MomentumConfig c = assemble(sm, r, seed, pts, lambdas);
      if (c.total_momentum().lpNorm<Eigen::Infinity>() <= kConservationTol && lands_in(c, sm, r, true)) return c;
      continue;
    }

    // Anchor a balanced quadruple, keep every other momentum small, then
    // let Gauss-Newton restore conservation.
    std::uniform_int_distribution<std::size_t> pick(0, witnesses.size() - 1);
    const Quadruple& q = witnesses[pick(rng)];
    for (int i : p.nonloops()) lambdas[i] = sm.sigma()[i] * 0.1 * log_uniform(rng);
    lambdas[q.i] = lambdas[q.j] = 1.0;
    lambdas[q.k] = lambdas[q.l] = -1.0;
    if (!q.crossed) {
      const VectorXd a = random_unit(r - 1, rng);
      VectorXd b = random_unit(r - 1, rng);
      while (std::abs(a.dot(b)) > 0.9) b = random_unit(r - 1, rng);
      pts[p.part_of(q.i)] = a;
      pts[p.part_of(q.j)] = -a;
      pts[p.part_of(q.k)] = b;
      pts[p.part_of(q.l)] = -b;
    }
    VectorXd theta = param.from_parts(pts, lambdas);
    if (!solve_conservation(param, theta)) continue;
    converged_once = true;
    MomentumConfig c = param.to_config(theta, seed);
    if (c.total_momentum().lpNorm<Eigen::Infinity>() <= kConservationTol && lands_in(c, sm, r, true)) return c;
  }
  if (r < m && !converged_once) throw Error(ErrorCode::NotConverged, "conservation solve did not converge");
  throw Error(ErrorCode::SamplingFailed, "no sample landed in the requested stratum");
}

DimensionEstimate estimate_dimension(const SignedMatroid& sm, int r, bool mmc, std::uint64_t seed) {
  const MomentumConfig c = mmc ? sample_mmc(sm, r, seed) : sample_stratum(sm, r, seed);
  const Parametrisation param(sm, r);
  const VectorXd theta = param.from_config(c);
  const int count = param.size();

  const int entries = c.n * (c.n - 1) / 2;
  MatrixXd jac(entries, count);
  for (int k = 0; k < count; ++k) {
    VectorXd up = theta, down = theta;
    up[k] += kFiniteStep;
    down[k] -= kFiniteStep;
    jac.col(k) = (param.gram_entries(up) - param.gram_entries(down)) / (2 * kFiniteStep);
  }

  DimensionEstimate out;
  out.parameters = count;
  out.expected = mmc ? dim_mmc(sm, r) : dim_massless(sm.matroid(), r);
  MatrixXd restricted = jac;
  if (mmc) {
    const MatrixXd constraint = param.momentum_jacobian(theta);
    Eigen::JacobiSVD<MatrixXd> svd(constraint, Eigen::ComputeFullV);
    double cutoff = 0.0;
    const auto sv = column_norms_sorted(constraint);
    const int constraint_rank = numerical_rank(sv, cutoff);
    restricted = jac * svd.matrixV().rightCols(count - constraint_rank);
  }
  out.singular_values = column_norms_sorted(restricted);
  out.rank = numerical_rank(out.singular_values, out.cutoff);
  return out;
}

std::vector<int> cyclic_order(const SymmetricMatrix& s) {
  const Classification cls = classify_massless(s);
  if (cls.label.rank != 3) {
    throw Error(ErrorCode::RankOutOfRange, "circular order needs a rank-3 point, got rank " +
                                               std::to_string(cls.label.rank));
  }
  const auto parts = cls.label.signed_matroid.matroid().parts();
  const int m = static_cast<int>(parts.size());
  MatrixXd t(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t(a, b) = std::abs(s(parts[a].front(), parts[b].front()).to_double());
  }
  // |T| = M diag(1, -1, -1) M^T; the rows of M are the part momenta.
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(t);
  const VectorXd& values = eig.eigenvalues();
  const MatrixXd& vectors = eig.eigenvectors();
  if (values[m - 1] <= 0 || values[0] >= 0 || values[1] >= 0) {
    throw Error(ErrorCode::InconsistentAngles, "part Gram matrix does not have signature (1, 2)");
  }
  VectorXd time = std::sqrt(values[m - 1]) * vectors.col(m - 1);
  const VectorXd first = std::sqrt(-values[0]) * vectors.col(0);
  const VectorXd second = std::sqrt(-values[1]) * vectors.col(1);
  if (time.sum() < 0) time = -time;

  std::vector<double> angle(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    if (time[a] <= 0) throw Error(ErrorCode::InconsistentAngles, "part momenta are not future-directed", parts[a]);
    const double x = first[a] / time[a], y = second[a] / time[a];
    if (std::abs(std::hypot(x, y) - 1.0) > 1e-7) {
      throw Error(ErrorCode::InconsistentAngles, "part momentum is off the light cone", parts[a]);
    }
    angle[a] = std::atan2(y, x);
  }
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return angle[a] < angle[b]; });
  std::rotate(order.begin(), std::find(order.begin(), order.end(), 0), order.end());
  if (m >= 3 && order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  return order;
}

namespace {

constexpr double kRationalScale = 1099511627776.0;  // 2^40

mpq_class to_rational(double x, double scale = kRationalScale) {
  mpq_class q(std::round(x * scale));
  q /= mpq_class(scale);
  q.canonicalize();
  return q;
}

// Rational points on S^{dim-1} by inverse stereographic projection from the
// pole pole_sign * e_axis.
struct Stereographic {
  int dim;
  int axis;
  int pole_sign;

  std::vector<double> chart(const VectorXd& x) const {
    std::vector<double> u;
    const double denom = 1.0 - pole_sign * x[axis];
    for (int k = 0; k < dim; ++k) {
      if (k != axis) u.push_back(x[k] / denom);
    }
    return u;
  }

  std::vector<mpq_class> point(const std::vector<mpq_class>& u) const {
    mpq_class norm2 = 0;
    for (const auto& v : u) norm2 += v * v;
    const mpq_class denom = norm2 + 1;
    std::vector<mpq_class> x(static_cast<std::size_t>(dim));
    std::size_t idx = 0;
    for (int k = 0; k < dim; ++k) {
      if (k == axis) {
        x[k] = pole_sign * (norm2 - 1) / denom;
      } else {
        x[k] = 2 * u[idx++] / denom;
      }
    }
    return x;
  }
};

}  // namespace

Refinement perturb_to_refinement(const MomentumConfig& c, const SignedMatroid& target, int rank, double eps,
                                 std::uint64_t seed) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const SymmetricMatrix source = gram(c);
  const StratumLabel from = classify_massless(source).label;
  const RankTwoMatroid& tp = target.matroid();
  if (tp.ground_size() != c.n) throw Error(ErrorCode::InvalidArgument, "target has the wrong ground set");
  if (!nonempty_massless(tp, rank)) {
    throw Error(ErrorCode::EmptyStratum, "target stratum is empty at rank " + std::to_string(rank));
  }
  if (rank < from.rank || !signed_leq(from.signed_matroid, target)) {
    throw Error(ErrorCode::Incomparable, "source stratum does not lie below the target");
  }

  if (from.signed_matroid == target && from.rank == rank) return Refinement{c, source, 0.0};

  const RankTwoMatroid& sp = from.signed_matroid.matroid();
  const int dim = rank - 1;
  const int first = sp.nonloops().front();
  const int flip = (c.lambdas[first] > 0 ? 1 : -1) * target.sigma()[first];

  // Source points lifted to R^{rank-1}, one per element.
  std::vector<VectorXd> lifted(static_cast<std::size_t>(c.n), VectorXd::Zero(dim));
  for (int i : sp.nonloops()) {
    for (int k = 0; k < c.r - 1; ++k) lifted[i][k] = c.points[i][k];
  }

  Stereographic chart{dim, 0, 1};
  if (dim >= 2) {
    double best = -1.0;
    for (int axis = 0; axis < dim; ++axis) {
      for (int sgn : {1, -1}) {
        double closest = 4.0;
        for (int i : sp.nonloops()) closest = std::min(closest, 1.0 - sgn * lifted[i][axis]);
        if (closest > best) {
          best = closest;
          chart = Stereographic{dim, axis, sgn};
        }
      }
    }
  }

  auto rng = make_rng(seed, 0);
  std::normal_distribution<double> gauss;
  const auto target_parts = tp.parts();
  const int m = static_cast<int>(target_parts.size());
  std::vector<int> anchor(static_cast<std::size_t>(m), -1);  // a source non-loop inside each target part
  for (int q = 0; q < m; ++q) {
    for (int i : target_parts[q]) {
      if (!sp.is_loop(i)) {
        anchor[q] = i;
        break;
      }
    }
  }

  mpq_class delta(eps);
  for (int round = 0; round < 400; ++round) {
    std::vector<std::vector<mpq_class>> part_point(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q) {
      if (dim == 1) {
        const double side = anchor[q] >= 0 ? lifted[anchor[q]][0] : (q == 0 ? 1.0 : -1.0);
        part_point[q] = {mpq_class(side > 0 ? 1 : -1)};
        continue;
      }
      std::vector<mpq_class> u;
      if (anchor[q] >= 0) {
        for (double v : chart.chart(lifted[anchor[q]])) u.push_back(to_rational(v) + delta * to_rational(gauss(rng), 1024));
      } else {
        for (int k = 0; k < dim - 1; ++k) u.push_back(to_rational(gauss(rng), 1024));
      }
      part_point[q] = chart.point(u);
    }

    std::vector<mpq_class> lambda(static_cast<std::size_t>(c.n), 0);
    for (int i = 0; i < c.n; ++i) {
      if (tp.is_loop(i)) continue;
      if (!sp.is_loop(i)) {
        lambda[i] = to_rational(c.lambdas[i]);
      } else {
        lambda[i] = flip * target.sigma()[i] * delta * to_rational(log_uniform(rng), 1024);
      }
    }

    std::vector<std::vector<mpq_class>> rows(static_cast<std::size_t>(c.n), std::vector<mpq_class>(c.n));
    for (int i = 0; i < c.n; ++i) {
      for (int j = i + 1; j < c.n; ++j) {
        if (tp.is_loop(i) || tp.is_loop(j)) continue;
        const auto& xi = part_point[tp.part_of(i)];
        const auto& xj = part_point[tp.part_of(j)];
        mpq_class dot = 0;
        for (int k = 0; k < dim; ++k) dot += xi[k] * xj[k];
        rows[i][j] = rows[j][i] = lambda[i] * lambda[j] * (1 - dot);
      }
    }
    const SymmetricMatrix exact = SymmetricMatrix::from_rows(rows);

    bool inside = false;
    try {
      const StratumLabel got = classify_massless(exact).label;
      inside = got.signed_matroid == target && got.rank == rank;
    } catch (const Error&) {
      inside = false;
    }
    if (!inside) continue;

    Refinement out{MomentumConfig{}, exact, 0.0};
    out.config.n = c.n;
    out.config.r = rank;
    out.config.seed = seed;
    out.config.lambdas.resize(static_cast<std::size_t>(c.n));
    out.config.points.assign(static_cast<std::size_t>(c.n), std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    for (int i = 0; i < c.n; ++i) {
      out.config.lambdas[i] = lambda[i].get_d();
      if (tp.is_loop(i)) {
        out.config.points[i][0] = 1.0;
        continue;
      }
      for (int k = 0; k < dim; ++k) out.config.points[i][k] = part_point[tp.part_of(i)][k].get_d();
    }
    const SymmetricMatrix moved = gram(out.config);
    for (int i = 0; i < c.n; ++i) {
      for (int j = i + 1; j < c.n; ++j) {
        out.distance = std::max(out.distance, std::abs(moved(i, j).real() - source(i, j).real()));
      }
    }
    if (out.distance <= eps) return out;
    delta /= 2;
  }
  throw Error(ErrorCode::SamplingFailed, "could not reach the target stratum within eps");
}

}  // namespace strata
