#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "strata/scalar.hpp"

namespace strata {

namespace tolerance {
/// Relative zero threshold for a float principal minor of size k:
/// |det| <= kMinor * (max |entry|)^k counts as zero.
inline constexpr double kMinor = 1e-9;
/// Eigenvalues (and singular values) below kRank * sigma_max are zero.
inline constexpr double kRank = 1e-8;
/// Entries with |s_ij| <= kEntry * max |entry| are zero during classification.
inline constexpr double kEntry = 1e-9;
/// Row sums with |sum| <= kRowSum * max |entry| count as conserved momentum.
inline constexpr double kRowSum = 1e-8;
}  // namespace tolerance

/// Largest n accepted by the exhaustive principal-minor test (2^n - 1 minors).
inline constexpr int kMaxMinorTestSize = 20;

/// Symmetric n x n matrix storing only its upper triangle, row-major with
/// the diagonal included. All entries share one Mode.
class SymmetricMatrix {
 public:
  SymmetricMatrix(int n, Mode mode);

  static SymmetricMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymmetricMatrix from_dense(const Eigen::MatrixXd& m);

  int size() const { return n_; }
  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }

  const Scalar& operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, Scalar value);
  void set(int i, int j, double value) { set(i, j, Scalar(value)); }
  void set(int i, int j, const mpq_class& value) { set(i, j, Scalar(value)); }

  const std::vector<Scalar>& upper() const { return entries_; }

  Eigen::MatrixXd to_dense() const;
  std::vector<std::vector<mpq_class>> to_rational_rows() const;
  /// Converts to float mode (lossy). A float matrix is returned unchanged.
  SymmetricMatrix to_float() const;

  double max_abs_entry() const;
  bool is_zero() const;

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b);

 private:
  std::size_t index(int i, int j) const;

  int n_;
  Mode mode_;
  std::vector<Scalar> entries_;
};

struct Signature {
  int n_pos = 0;
  int n_neg = 0;
  int rank() const { return n_pos + n_neg; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A principal minor violating (-1)^{|I|-1} det(S_I) >= 0.
struct MinorViolation {
  std::vector<int> subset;
  Scalar minor;
};

struct MandelstamVerdict {
  bool mandelstam = false;
  int rank = 0;
  /// Set when a principal minor has the wrong sign.
  std::optional<MinorViolation> violation;
  /// Set when a diagonal entry is negative.
  std::optional<int> negative_diagonal;
};

/// det(S_I). Exact mode runs fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix; float mode uses partial-pivot LU.
Scalar principal_minor(const SymmetricMatrix& s, std::span<const int> subset);

/// Determinant of a dense rational matrix by Bareiss elimination over Z.
mpq_class exact_determinant(std::vector<std::vector<mpq_class>> rows);
int exact_rank(std::vector<std::vector<mpq_class>> rows);

bool minor_sign_test(const SymmetricMatrix& s);
/// First violating subset in order of increasing size, then lexicographic.
std::optional<MinorViolation> find_minor_violation(const SymmetricMatrix& s);

Signature eigen_signature(const SymmetricMatrix& s, double tol = tolerance::kRank);

/// Rank: exact elimination in exact mode, eigenvalue cutoff in float mode.
int matrix_rank(const SymmetricMatrix& s, double tol = tolerance::kRank);

MandelstamVerdict is_mandelstam(const SymmetricMatrix& s);

/// Entry (i,j) becomes sigma_i sigma_j s_ij, i.e. S -> J S J with J = diag(sigma).
SymmetricMatrix conjugate_by_signs(const SymmetricMatrix& s, std::span<const int> sigma);

std::vector<Scalar> row_sums(const SymmetricMatrix& s);

}  // namespace strata
