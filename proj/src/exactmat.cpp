#include "strata/exactmat.hpp"

#include <algorithm>
#include <cmath>

namespace strata {

SymmetricMatrix::SymmetricMatrix(int n, Mode mode) : n_(n), mode_(mode) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix size must be positive");
  entries_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, Scalar::zero(mode));
}

std::size_t SymmetricMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range", {i, j});
  if (i > j) std::swap(i, j);
  // Row i of the upper triangle starts after rows 0..i-1, of lengths n, n-1, ...
  return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

void SymmetricMatrix::set(int i, int j, Scalar value) {
  if (value.mode() != mode_) throw Error(ErrorCode::ModeMismatch, "entry mode differs from matrix mode");
  entries_[index(i, j)] = std::move(value);
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymmetricMatrix s(n, Mode::Exact);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    for (int j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric", {i, j});
      s.set(i, j, rows[i][j]);
    }
  }
  return s;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymmetricMatrix s(n, Mode::Float);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    for (int j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric", {i, j});
      s.set(i, j, rows[i][j]);
    }
  }
  return s;
}

SymmetricMatrix SymmetricMatrix::from_dense(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  const int n = static_cast<int>(m.rows());
  SymmetricMatrix s(n, Mode::Float);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s.set(i, j, m(i, j));
  return s;
}

Eigen::MatrixXd SymmetricMatrix::to_dense() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m(i, j) = m(j, i) = (*this)(i, j).to_double();
  return m;
}

std::vector<std::vector<mpq_class>> SymmetricMatrix::to_rational_rows() const {
  if (!is_exact()) throw Error(ErrorCode::ModeMismatch, "matrix is not exact");
  std::vector<std::vector<mpq_class>> rows(n_, std::vector<mpq_class>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) rows[i][j] = rows[j][i] = (*this)(i, j).rational();
  return rows;
}

SymmetricMatrix SymmetricMatrix::to_float() const {
  if (!is_exact()) return *this;
  SymmetricMatrix f(n_, Mode::Float);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) f.set(i, j, (*this)(i, j).to_double());
  return f;
}

double SymmetricMatrix::max_abs_entry() const {
  double best = 0.0;
  for (const auto& e : entries_) best = std::max(best, std::fabs(e.to_double()));
  return best;
}

bool SymmetricMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& e) { return e.is_zero(); });
}

bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return a.n_ == b.n_ && a.mode_ == b.mode_ && a.entries_ == b.entries_;
}

namespace {

// Bareiss elimination on an integer matrix; `a` is consumed.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>>& a) {
  const std::size_t n = a.size();
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

mpq_class exact_determinant(std::vector<std::vector<mpq_class>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  // Clear denominators row by row: det(S) = det(D S) / prod(D).
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (const auto& q : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class v = rows[i][j].get_num() * (l / rows[i][j].get_den());
      a[i][j] = std::move(v);
    }
    scale *= l;
  }
  mpq_class det(bareiss_determinant(a), scale);
  det.canonicalize();
  return det;
}

int exact_rank(std::vector<std::vector<mpq_class>> rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < n; ++c) {
    int p = rank;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(rows[rank], rows[p]);
    for (int i = rank + 1; i < n; ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[rank][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

void check_subset(const SymmetricMatrix& s, std::span<const int> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "principal minor of an empty index set");
  for (int i : subset)
    if (i < 0 || i >= s.size()) throw Error(ErrorCode::IndexOutOfRange, "subset index out of range", {i});
}

Scalar minor_exact(const std::vector<std::vector<mpq_class>>& full, std::span<const int> subset) {
  const std::size_t k = subset.size();
  std::vector<std::vector<mpq_class>> sub(k, std::vector<mpq_class>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) sub[a][b] = full[subset[a]][subset[b]];
  return Scalar(exact_determinant(std::move(sub)));
}

Scalar minor_float(const Eigen::MatrixXd& full, std::span<const int> subset) {
  const Eigen::Index k = static_cast<Eigen::Index>(subset.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = full(subset[a], subset[b]);
  return Scalar(sub.partialPivLu().determinant());
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order
// until visit returns true.
template <class Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(std::span<const int>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Scalar principal_minor(const SymmetricMatrix& s, std::span<const int> subset) {
  check_subset(s, subset);
  if (s.is_exact()) return minor_exact(s.to_rational_rows(), subset);
  return minor_float(s.to_dense(), subset);
}

std::optional<MinorViolation> find_minor_violation(const SymmetricMatrix& s) {
  const int n = s.size();
  if (n > kMaxMinorTestSize)
    throw Error(ErrorCode::TooLarge, "exhaustive minor test limited to n <= 20");
  std::optional<MinorViolation> found;
  if (s.is_exact()) {
    const auto rows = s.to_rational_rows();
    for (int k = 1; k <= n && !found; ++k) {
      const int want = (k % 2 == 1) ? 1 : -1;  // sign of (-1)^{k-1}
      for_each_combination(n, k, [&](std::span<const int> subset) {
        Scalar m = minor_exact(rows, subset);
        if (m.sign() != 0 && m.sign() != want) {
          found = MinorViolation{{subset.begin(), subset.end()}, std::move(m)};
          return true;
        }
        return false;
      });
    }
  } else {
    const Eigen::MatrixXd dense = s.to_dense();
    const double scale = s.max_abs_entry();
    for (int k = 1; k <= n && !found; ++k) {
      const double tau = tolerance::kMinor * std::pow(scale, k);
      const double want = (k % 2 == 1) ? 1.0 : -1.0;
      for_each_combination(n, k, [&](std::span<const int> subset) {
        Scalar m = minor_float(dense, subset);
        if (want * m.real() < -tau) {
          found = MinorViolation{{subset.begin(), subset.end()}, std::move(m)};
          return true;
        }
        return false;
      });
    }
  }
  return found;
}

bool minor_sign_test(const SymmetricMatrix& s) { return !find_minor_violation(s).has_value(); }

Signature eigen_signature(const SymmetricMatrix& s, double tol) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.to_dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::InvalidArgument, "eigenvalue solver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double sigma_max = ev.cwiseAbs().maxCoeff();
  Signature sig;
  if (sigma_max == 0.0) return sig;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > tol * sigma_max) ++sig.n_pos;
    else if (ev[i] < -tol * sigma_max) ++sig.n_neg;
  }
  return sig;
}

int matrix_rank(const SymmetricMatrix& s, double tol) {
  if (s.is_exact()) return exact_rank(s.to_rational_rows());
  return eigen_signature(s, tol).rank();
}

MandelstamVerdict is_mandelstam(const SymmetricMatrix& s) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroMatrix, "the zero matrix has rank 0 and no Mandelstam rank");
  MandelstamVerdict verdict;
  verdict.rank = matrix_rank(s);
  const double tau = tolerance::kMinor * s.max_abs_entry();
  for (int i = 0; i < s.size(); ++i) {
    const Scalar& d = s(i, i);
    const bool negative = s.is_exact() ? d.sign() < 0 : d.real() < -tau;
    if (negative) {
      verdict.negative_diagonal = i;
      verdict.violation = MinorViolation{{i}, d};
      return verdict;
    }
  }
  verdict.violation = find_minor_violation(s);
  if (verdict.violation) return verdict;
  verdict.mandelstam = true;
  return verdict;
}

SymmetricMatrix conjugate_by_signs(const SymmetricMatrix& s, std::span<const int> sigma) {
  const int n = s.size();
  if (static_cast<int>(sigma.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "sign vector length differs from matrix size");
  for (int i = 0; i < n; ++i)
    if (sigma[i] != 1 && sigma[i] != -1) throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1", {i});
  SymmetricMatrix out = s;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (sigma[i] * sigma[j] < 0) out.set(i, j, -s(i, j));
  return out;
}

std::vector<Scalar> row_sums(const SymmetricMatrix& s) {
  const int n = s.size();
  std::vector<Scalar> sums(n, Scalar::zero(s.mode()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sums[i] += s(i, j);
  return sums;
}

}  // namespace strata
