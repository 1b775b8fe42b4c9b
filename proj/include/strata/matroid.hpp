#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "strata/error.hpp"

namespace strata {

/// Ground sets are limited to n <= 10 for enumeration.
inline constexpr int kMaxEnumerationSize = 10;

/// Rank-two matroid on {0..n-1}: a partition of the non-loops into m >= 2
/// parts of pairwise parallel elements. Parts are numbered by increasing
/// minimum element, which makes the representation canonical.
class RankTwoMatroid {
 public:
  static constexpr int kLoop = -1;

  static RankTwoMatroid from_parts(int n, const std::vector<std::vector<int>>& parts);
  /// `blocks[i]` is any part label for element i, or kLoop. Labels are renumbered.
  static RankTwoMatroid from_blocks(std::vector<int> blocks);
  static RankTwoMatroid uniform(int n);

  int ground_size() const { return static_cast<int>(blocks_.size()); }
  int num_parts() const { return num_parts_; }
  int num_loops() const;
  int num_nonloops() const { return ground_size() - num_loops(); }

  bool is_loop(int i) const { return blocks_.at(i) == kLoop; }
  int part_of(int i) const { return blocks_.at(i); }
  bool parallel(int i, int j) const { return !is_loop(i) && blocks_.at(i) == blocks_.at(j); }

  const std::vector<int>& blocks() const { return blocks_; }
  std::vector<std::vector<int>> parts() const;
  std::vector<int> loops() const;
  std::vector<int> nonloops() const;

  friend bool operator==(const RankTwoMatroid&, const RankTwoMatroid&) = default;
  /// Enumeration order: loop count, then the list of parts lexicographically.
  friend std::strong_ordering operator<=>(const RankTwoMatroid& a, const RankTwoMatroid& b);

 private:
  explicit RankTwoMatroid(std::vector<int> blocks);

  std::vector<int> blocks_;
  int num_parts_ = 0;
};

/// Signs in {+1, -1} on a support set, 0 elsewhere. Canonical form has +1 at
/// the smallest support element, identifying sigma with -sigma.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> signs);

  static SignVector all_plus(std::span<const int> support, int n);

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int i) const { return signs_.at(i); }
  const std::vector<int>& values() const { return signs_; }
  std::vector<int> support() const;

  SignVector canonical() const;
  SignVector negated() const;
  bool is_canonical() const { return *this == canonical(); }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  /// '+' sorts before '-' at the first difference.
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b);

 private:
  std::vector<int> signs_;
};

class SignedMatroid {
 public:
  /// Restricts `sigma` to the non-loops and canonicalises. Every non-loop
  /// needs a sign in sigma.
  SignedMatroid(RankTwoMatroid matroid, const SignVector& sigma);
  SignedMatroid(RankTwoMatroid matroid, std::span<const int> sigma);

  const RankTwoMatroid& matroid() const { return matroid_; }
  const SignVector& sigma() const { return sigma_; }
  int ground_size() const { return matroid_.ground_size(); }

  bool all_plus() const;

  friend bool operator==(const SignedMatroid&, const SignedMatroid&) = default;
  friend std::strong_ordering operator<=>(const SignedMatroid& a, const SignedMatroid& b);

 private:
  RankTwoMatroid matroid_;
  SignVector sigma_;
};

struct UnderlyingSimple {
  RankTwoMatroid uniform;            // U_m on {0..m-1}
  std::vector<int> representatives;  // minimum element of each part
};

mpz_class stirling2(int p, int k);
mpz_class binomial(int n, int k);
mpz_class factorial(int n);

/// Visits every rank-two matroid on n elements with at least max(2, min_parts)
/// parts, ordered by (loop count, parts).
void for_each_matroid(int n, int min_parts, const std::function<void(const RankTwoMatroid&)>& visit);
std::vector<RankTwoMatroid> enumerate_matroids(int n, int min_parts = 2);

/// Visits every signed matroid: each matroid with all 2^{n-l-1} canonical
/// sign vectors on its non-loops, ordered by (loop count, parts, signs).
void for_each_signed(int n, int min_parts, const std::function<void(const SignedMatroid&)>& visit);
std::vector<SignedMatroid> enumerate_signed(int n, int min_parts = 2);

/// Unsigned order: every loop of b is a loop of a and b's partition refines a's.
bool matroid_leq(const RankTwoMatroid& a, const RankTwoMatroid& b);
/// Signed order: matroid_leq and signs agree on a's non-loops up to a global sign.
bool signed_leq(const SignedMatroid& a, const SignedMatroid& b);

UnderlyingSimple underlying_simple(const RankTwoMatroid& p);

}  // namespace strata
