#include "strata/matroid.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace strata {

RankTwoMatroid::RankTwoMatroid(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  std::map<int, int> relabel;
  for (int& b : blocks_) {
    if (b < 0) {
      b = kLoop;
      continue;
    }
    auto [it, inserted] = relabel.try_emplace(b, static_cast<int>(relabel.size()));
    b = it->second;
  }
  num_parts_ = static_cast<int>(relabel.size());
  if (num_parts_ < 2)
    throw Error(ErrorCode::InvalidArgument, "a rank-two matroid needs at least two parts");
}

RankTwoMatroid RankTwoMatroid::from_blocks(std::vector<int> blocks) {
  return RankTwoMatroid(std::move(blocks));
}

RankTwoMatroid RankTwoMatroid::from_parts(int n, const std::vector<std::vector<int>>& parts) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "ground set must be nonempty");
  std::vector<int> blocks(n, kLoop);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw Error(ErrorCode::InvalidArgument, "parts must be nonempty");
    for (int i : parts[p]) {
      if (i < 0 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "part element out of range", {i});
      if (blocks[i] != kLoop) throw Error(ErrorCode::InvalidArgument, "parts are not disjoint", {i});
      blocks[i] = static_cast<int>(p);
    }
  }
  return RankTwoMatroid(std::move(blocks));
}

RankTwoMatroid RankTwoMatroid::uniform(int n) {
  std::vector<int> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = i;
  return RankTwoMatroid(std::move(blocks));
}

int RankTwoMatroid::num_loops() const {
  return static_cast<int>(std::count(blocks_.begin(), blocks_.end(), kLoop));
}

std::vector<std::vector<int>> RankTwoMatroid::parts() const {
  std::vector<std::vector<int>> out(num_parts_);
  for (int i = 0; i < ground_size(); ++i)
    if (blocks_[i] != kLoop) out[blocks_[i]].push_back(i);
  return out;
}

std::vector<int> RankTwoMatroid::loops() const {
  std::vector<int> out;
  for (int i = 0; i < ground_size(); ++i)
    if (blocks_[i] == kLoop) out.push_back(i);
  return out;
}

std::vector<int> RankTwoMatroid::nonloops() const {
  std::vector<int> out;
  for (int i = 0; i < ground_size(); ++i)
    if (blocks_[i] != kLoop) out.push_back(i);
  return out;
}

std::strong_ordering operator<=>(const RankTwoMatroid& a, const RankTwoMatroid& b) {
  if (auto c = a.ground_size() <=> b.ground_size(); c != 0) return c;
  if (auto c = a.num_loops() <=> b.num_loops(); c != 0) return c;
  const auto pa = a.parts();
  const auto pb = b.parts();
  if (pa < pb) return std::strong_ordering::less;
  if (pb < pa) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] < -1 || signs_[i] > 1)
      throw Error(ErrorCode::InvalidArgument, "sign entries must be -1, 0 or +1", {static_cast<int>(i)});
}

SignVector SignVector::all_plus(std::span<const int> support, int n) {
  std::vector<int> s(n, 0);
  for (int i : support) s.at(i) = 1;
  return SignVector(std::move(s));
}

std::vector<int> SignVector::support() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (signs_[i] != 0) out.push_back(i);
  return out;
}

SignVector SignVector::negated() const {
  std::vector<int> s = signs_;
  for (int& x : s) x = -x;
  return SignVector(std::move(s));
}

SignVector SignVector::canonical() const {
  for (int x : signs_)
    if (x != 0) return x > 0 ? *this : negated();
  return *this;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
  auto key = [](int s) { return s == 0 ? 0 : (s > 0 ? 1 : 2); };
  const std::size_t n = std::min(a.signs_.size(), b.signs_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = key(a.signs_[i]) <=> key(b.signs_[i]); c != 0) return c;
  return a.signs_.size() <=> b.signs_.size();
}

SignedMatroid::SignedMatroid(RankTwoMatroid matroid, const SignVector& sigma)
    : SignedMatroid(std::move(matroid), std::span<const int>(sigma.values())) {}

SignedMatroid::SignedMatroid(RankTwoMatroid matroid, std::span<const int> sigma)
    : matroid_(std::move(matroid)) {
  const int n = matroid_.ground_size();
  if (static_cast<int>(sigma.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "sign vector length differs from ground set size");
  std::vector<int> s(n, 0);
  for (int i = 0; i < n; ++i) {
    if (matroid_.is_loop(i)) continue;
    if (sigma[i] != 1 && sigma[i] != -1)
      throw Error(ErrorCode::InvalidArgument, "every non-loop needs a sign", {i});
    s[i] = sigma[i];
  }
  sigma_ = SignVector(std::move(s)).canonical();
}

bool SignedMatroid::all_plus() const {
  return std::none_of(sigma_.values().begin(), sigma_.values().end(), [](int s) { return s < 0; });
}

std::strong_ordering operator<=>(const SignedMatroid& a, const SignedMatroid& b) {
  if (auto c = a.matroid_ <=> b.matroid_; c != 0) return c;
  return a.sigma_ <=> b.sigma_;
}

mpz_class stirling2(int p, int k) {
  if (p < 0 || k < 0) return 0;
  if (k > p) return 0;
  if (p == 0) return 1;  // k == 0 here
  // S(i, j) = j S(i-1, j) + S(i-1, j-1), one row at a time.
  std::vector<mpz_class> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= p; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

mpz_class binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(int n) {
  if (n < 0) return 0;
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

namespace {

void check_enumeration_size(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "ground set must be nonempty");
  if (n > kMaxEnumerationSize)
    throw Error(ErrorCode::TooLarge, "enumeration limited to n <= 10");
}

// Restricted growth strings over `elements`, writing labels into `blocks`.
void set_partitions(const std::vector<int>& elements, std::size_t pos, int used, int min_parts,
                    std::vector<int>& blocks, std::vector<std::vector<int>>& out) {
  const int remaining = static_cast<int>(elements.size() - pos);
  if (used + remaining < min_parts) return;
  if (pos == elements.size()) {
    out.push_back(blocks);
    return;
  }
  for (int label = 0; label <= used; ++label) {
    blocks[elements[pos]] = label;
    set_partitions(elements, pos + 1, std::max(used, label + 1), min_parts, blocks, out);
  }
  blocks[elements[pos]] = RankTwoMatroid::kLoop;
}

}  // namespace

void for_each_matroid(int n, int min_parts, const std::function<void(const RankTwoMatroid&)>& visit) {
  check_enumeration_size(n);
  min_parts = std::max(min_parts, 2);
  for (int l = 0; l + min_parts <= n; ++l) {
    std::vector<std::pair<std::vector<std::vector<int>>, RankTwoMatroid>> level;
    std::vector<bool> is_loop(n, false);
    std::fill(is_loop.begin(), is_loop.begin() + l, true);
    // prev_permutation over a sorted-descending mask walks the l-subsets lexicographically.
    do {
      std::vector<int> nonloops;
      for (int i = 0; i < n; ++i)
        if (!is_loop[i]) nonloops.push_back(i);
      std::vector<int> blocks(n, RankTwoMatroid::kLoop);
      std::vector<std::vector<int>> found;
      set_partitions(nonloops, 0, 0, min_parts, blocks, found);
      for (auto& b : found) {
        RankTwoMatroid m = RankTwoMatroid::from_blocks(std::move(b));
        auto parts = m.parts();
        level.emplace_back(std::move(parts), std::move(m));
      }
    } while (std::prev_permutation(is_loop.begin(), is_loop.end()));
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& entry : level) visit(entry.second);
  }
}

std::vector<RankTwoMatroid> enumerate_matroids(int n, int min_parts) {
  std::vector<RankTwoMatroid> out;
  for_each_matroid(n, min_parts, [&](const RankTwoMatroid& m) { out.push_back(m); });
  return out;
}

void for_each_signed(int n, int min_parts, const std::function<void(const SignedMatroid&)>& visit) {
  for_each_matroid(n, min_parts, [&](const RankTwoMatroid& m) {
    const std::vector<int> support = m.nonloops();
    const int k = static_cast<int>(support.size());
    std::vector<int> sigma(n, 0);
    sigma[support[0]] = 1;
    const unsigned long count = 1UL << (k - 1);
    for (unsigned long mask = 0; mask < count; ++mask) {
      // The highest bit drives the earliest free element, so '+' < '-' order is lexicographic.
      for (int t = 1; t < k; ++t) sigma[support[t]] = (mask >> (k - 1 - t)) & 1UL ? -1 : 1;
      visit(SignedMatroid(m, std::span<const int>(sigma)));
    }
  });
}

std::vector<SignedMatroid> enumerate_signed(int n, int min_parts) {
  std::vector<SignedMatroid> out;
  for_each_signed(n, min_parts, [&](const SignedMatroid& s) { out.push_back(s); });
  return out;
}

bool matroid_leq(const RankTwoMatroid& a, const RankTwoMatroid& b) {
  const int n = a.ground_size();
  if (b.ground_size() != n) throw Error(ErrorCode::InvalidArgument, "ground set sizes differ");
  for (int i = 0; i < n; ++i)
    if (b.is_loop(i) && !a.is_loop(i)) return false;
  const std::vector<int> keep = a.nonloops();
  for (std::size_t x = 0; x < keep.size(); ++x)
    for (std::size_t y = x + 1; y < keep.size(); ++y)
      if (b.parallel(keep[x], keep[y]) && !a.parallel(keep[x], keep[y])) return false;
  return true;
}

bool signed_leq(const SignedMatroid& a, const SignedMatroid& b) {
  if (!matroid_leq(a.matroid(), b.matroid())) return false;
  int global = 0;
  for (int i : a.matroid().nonloops()) {
    const int rel = a.sigma()[i] * b.sigma()[i];
    if (global == 0) global = rel;
    else if (rel != global) return false;
  }
  return true;
}

UnderlyingSimple underlying_simple(const RankTwoMatroid& p) {
  UnderlyingSimple out{RankTwoMatroid::uniform(p.num_parts()), {}};
  for (const auto& part : p.parts()) out.representatives.push_back(part.front());
  return out;
}

}  // namespace strata
