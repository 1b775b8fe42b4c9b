#include "strata/regioncheck.hpp"

#include <algorithm>
#include <random>

#include "strata/simplex.hpp"

namespace strata {

SymmetricMatrix mmc4_matrix(const mpq_class& x, const mpq_class& y) {
  const mpq_class z = -x - y;
  return SymmetricMatrix::from_rows(std::vector<std::vector<mpq_class>>{
      {0, x, z, y}, {x, 0, y, z}, {z, y, 0, x}, {y, z, x, 0}});
}

Mmc4Point mmc4_classify(const mpq_class& x, const mpq_class& y) {
  Mmc4Point out;
  out.minor = -2 * x * y * (x + y);
  if (sgn(x) == 0 && sgn(y) == 0) {
    out.status = Mmc4Point::Status::Origin;
    return out;
  }
  if (sgn(out.minor) < 0) {
    out.status = Mmc4Point::Status::Outside;
    return out;
  }
  out.status = Mmc4Point::Status::Inside;
  out.label = classify_massless(mmc4_matrix(x, y)).label;
  return out;
}

const std::array<std::array<int, 5>, 10>& mmc5_forms() {
  static const std::array<std::array<int, 5>, 10> forms{{
      {1, 0, 0, 0, 0},    // s12 = a
      {-1, -1, 0, 1, 0},  // s13 = -a - b + d
      {0, 1, 0, -1, -1},  // s14 = b - d - e
      {0, 0, 0, 0, 1},    // s15 = e
      {0, 1, 0, 0, 0},    // s23 = b
      {0, -1, -1, 0, 1},  // s24 = -b - c + e
      {-1, 0, 1, 0, -1},  // s25 = -a + c - e
      {0, 0, 1, 0, 0},    // s34 = c
      {1, 0, -1, -1, 0},  // s35 = a - c - d
      {0, 0, 0, 1, 0},    // s45 = d
  }};
  return forms;
}

namespace {

mpq_class evaluate_form(const std::array<int, 5>& form, const Mmc5Point& p) {
  mpq_class v = 0;
  for (int k = 0; k < 5; ++k) v += form[k] * p[k];
  return v;
}

}  // namespace

SymmetricMatrix mmc5_matrix(const Mmc5Point& p) {
  std::vector<std::vector<mpq_class>> rows(5, std::vector<mpq_class>(5));
  for (std::size_t k = 0; k < kPairColumns.size(); ++k) {
    const auto [i, j] = kPairColumns[k];
    rows[i][j] = rows[j][i] = evaluate_form(mmc5_forms()[k], p);
  }
  return SymmetricMatrix::from_rows(rows);
}

mpq_class igusa_quartic(const Mmc5Point& p) {
  const mpq_class &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
  mpq_class q = a * a * b * b + b * b * c * c + c * c * d * d + d * d * e * e + a * a * e * e;
  q += 2 * (a * b * c * d + a * b * c * e + a * b * d * e + a * c * d * e + b * c * d * e);
  q -= 2 * (a * b * b * c + b * c * c * d + c * d * d * e + a * d * e * e + a * a * b * e);
  return q;
}

ArrangementCensus arrangement_census() {
  const auto& forms = mmc5_forms();
  // Variables: v+ (5), v- (5), t+, t-. Maximise t subject to
  // t <= eps_k * form_k(v) for all k and t <= 1.
  constexpr int kVars = 12;
  ArrangementCensus out;
  for (int mask = 0; mask < (1 << 10); ++mask) {
    std::array<int, 10> signs{};
    for (int k = 0; k < 10; ++k) signs[k] = (mask >> (9 - k)) & 1 ? -1 : 1;

    std::vector<std::vector<mpq_class>> a(11, std::vector<mpq_class>(kVars));
    std::vector<mpq_class> b(11, 0);
    for (int k = 0; k < 10; ++k) {
      for (int v = 0; v < 5; ++v) {
        a[k][v] = -signs[k] * forms[k][v];
        a[k][v + 5] = signs[k] * forms[k][v];
      }
      a[k][10] = 1;
      a[k][11] = -1;
    }
    a[10][10] = 1;
    a[10][11] = -1;
    b[10] = 1;
    std::vector<mpq_class> objective(kVars, 0);
    objective[10] = 1;
    objective[11] = -1;

    const LpResult lp = maximize(a, b, objective);
    if (lp.status != LpResult::Status::Optimal) throw Error(ErrorCode::LpFailure, "arrangement LP is unbounded");
    if (sgn(lp.value) <= 0) continue;
    ++out.region_count;

    bool consistent = true;
    auto sign_of = [&](int i, int j) {
      for (int k = 0; k < 10; ++k) {
        if (kPairColumns[k] == std::pair<int, int>{std::min(i, j), std::max(i, j)}) return signs[k];
      }
      return 0;
    };
    for (int i = 0; i < 5 && consistent; ++i) {
      for (int j = i + 1; j < 5 && consistent; ++j) {
        for (int k = j + 1; k < 5; ++k) {
          if (sign_of(i, j) * sign_of(i, k) * sign_of(j, k) < 0) {
            consistent = false;
            break;
          }
        }
      }
    }
    if (!consistent) continue;

    SignRegion region;
    region.entry_signs = signs;
    region.sigma[0] = 1;
    for (int j = 1; j < 5; ++j) region.sigma[j] = sign_of(0, j);
    if (std::count(region.sigma.begin(), region.sigma.end(), -1) > 2) {
      for (int& s : region.sigma) s = -s;
    }
    for (int v = 0; v < 5; ++v) region.witness[v] = lp.x[v] - lp.x[v + 5];
    out.consistent.push_back(region);
  }
  std::sort(out.consistent.begin(), out.consistent.end(),
            [](const SignRegion& x, const SignRegion& y) { return x.sigma < y.sigma; });
  return out;
}

namespace {

Mmc5Point along(const Mmc5Point& start, const Mmc5Point& end, const mpq_class& t) {
  Mmc5Point p;
  for (int k = 0; k < 5; ++k) p[k] = start[k] + t * (end[k] - start[k]);
  return p;
}

mpq_class small_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Rational point of S^{dim-1} by inverse stereographic projection.
std::vector<mpq_class> sphere_point(int dim, std::mt19937_64& rng) {
  std::vector<mpq_class> u(static_cast<std::size_t>(dim - 1));
  mpq_class norm2 = 0;
  for (auto& v : u) {
    v = small_rational(rng, -12, 12, 5);
    norm2 += v * v;
  }
  std::vector<mpq_class> x(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim - 1; ++k) x[k] = 2 * u[k] / (norm2 + 1);
  x[dim - 1] = (norm2 - 1) / (norm2 + 1);
  return x;
}

}  // namespace

std::optional<mpq_class> bisect_zero(const Mmc5Point& start, const Mmc5Point& end, int max_steps) {
  const int s0 = sgn(igusa_quartic(start));
  const int s1 = sgn(igusa_quartic(end));
  if (s0 == 0) return mpq_class(0);
  if (s1 == 0) return mpq_class(1);
  if (s0 == s1) return std::nullopt;
  mpq_class lo = 0, hi = 1;
  for (int step = 0; step < max_steps; ++step) {
    const mpq_class mid = (lo + hi) / 2;
    const int sm = sgn(igusa_quartic(along(start, end, mid)));
    if (sm == 0) return mid;
    (sm == s0 ? lo : hi) = mid;
  }
  return std::nullopt;
}

Mmc5Point rational_mmc5_point(int rank, std::uint64_t seed) {
  if (rank != 3 && rank != 4) throw Error(ErrorCode::InvalidArgument, "rank must be 3 or 4");
  const int dim = rank - 1;
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 1000; ++tries) {
    std::vector<std::vector<mpq_class>> x(5);
    std::vector<mpq_class> lambda(5);
    // Outgoing momenta 3, 4, 5 with positive multipliers.
    mpq_class energy = 0;
    std::vector<mpq_class> spatial(static_cast<std::size_t>(dim), 0);
    for (int i = 2; i < 5; ++i) {
      x[i] = sphere_point(dim, rng);
      lambda[i] = small_rational(rng, 1, 9, 4);
      energy += lambda[i];
      for (int k = 0; k < dim; ++k) spatial[k] += lambda[i] * x[i][k];
    }
    // Split the timelike total into two null vectors, the first along x_1.
    x[0] = sphere_point(dim, rng);
    mpq_class v_dot_x = 0, v_norm2 = 0;
    for (int k = 0; k < dim; ++k) {
      v_dot_x += spatial[k] * x[0][k];
      v_norm2 += spatial[k] * spatial[k];
    }
    if (sgn(energy - v_dot_x) <= 0) continue;
    const mpq_class mu1 = (energy * energy - v_norm2) / (2 * (energy - v_dot_x));
    const mpq_class mu2 = energy - mu1;
    if (sgn(mu1) <= 0 || sgn(mu2) <= 0) continue;
    x[1].resize(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) x[1][k] = (spatial[k] - mu1 * x[0][k]) / mu2;
    lambda[0] = -mu1;
    lambda[1] = -mu2;

    std::vector<std::vector<mpq_class>> rows(5, std::vector<mpq_class>(5));
    bool generic = true;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        mpq_class dot = 0;
        for (int k = 0; k < dim; ++k) dot += x[i][k] * x[j][k];
        rows[i][j] = rows[j][i] = lambda[i] * lambda[j] * (1 - dot);
        if (sgn(rows[i][j]) == 0) generic = false;
      }
    }
    if (!generic || exact_rank(rows) != rank) continue;
    const Mmc5Point p{rows[0][1], rows[1][2], rows[2][3], rows[3][4], rows[0][4]};
    if (!(mmc5_matrix(p) == SymmetricMatrix::from_rows(rows))) {
      throw Error(ErrorCode::InvalidArgument, "configuration left the five-point family");
    }
    return p;
  }
  throw Error(ErrorCode::SamplingFailed, "no generic rational configuration found");
}

BoundarySegment boundary_segment(std::uint64_t seed) {
  BoundarySegment seg;
  seg.boundary = rational_mmc5_point(3, seed);
  mpq_class scale = 0;
  for (const auto& v : seg.boundary) scale = std::max(scale, mpq_class(abs(v)));
  std::mt19937_64 rng(seed + 1);
  for (int tries = 0; tries < 1000; ++tries) {
    Mmc5Point step;
    for (auto& v : step) v = small_rational(rng, -1000, 1000, 1) * scale / 1000000;
    for (int k = 0; k < 5; ++k) {
      seg.start[k] = seg.boundary[k] - step[k];
      seg.end[k] = seg.boundary[k] + 3 * step[k];
    }
    if (sgn(igusa_quartic(seg.start)) * sgn(igusa_quartic(seg.end)) < 0) return seg;
  }
  throw Error(ErrorCode::SamplingFailed, "no sign change near the boundary point");
}

}  // namespace strata
