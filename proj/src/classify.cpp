#include "strata/classify.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace strata {

int StratumLabel::dimension() const {
  if (kind == Region::MMC) return dim_mmc(signed_matroid, rank);
  return dim_massless(signed_matroid.matroid(), rank);
}

Region massless_kind(const SignedMatroid& sm) {
  return sm.all_plus() ? Region::Lorentzian : Region::Mandelstam;
}

namespace {

// Zero and sign tests shared by the classification passes. Float entries are
// compared against a threshold relative to the largest entry.
class EntryTest {
 public:
  explicit EntryTest(const SymmetricMatrix& s)
      : s_(s), threshold_(s.is_exact() ? 0.0 : tolerance::kEntry * s.max_abs_entry()) {}

  int sign(int i, int j) const {
    const Scalar& v = s_(i, j);
    if (v.is_exact()) return v.sign();
    const double x = v.real();
    if (std::abs(x) <= threshold_) return 0;
    return x > 0 ? 1 : -1;
  }
  bool zero(int i, int j) const { return sign(i, j) == 0; }

 private:
  const SymmetricMatrix& s_;
  double threshold_;
};

std::vector<int> find_odd_triple(const EntryTest& test, const std::vector<int>& nonloops) {
  const std::size_t k = nonloops.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        const int i = nonloops[a], j = nonloops[b], l = nonloops[c];
        if (test.sign(i, j) * test.sign(i, l) * test.sign(j, l) < 0) return {i, j, l};
      }
    }
  }
  return {};
}

}  // namespace

Classification classify_massless(const SymmetricMatrix& s) {
  const int n = s.size();
  if (s.is_zero()) throw Error(ErrorCode::ZeroMatrix, "the zero matrix lies in no stratum");
  const EntryTest test(s);

  for (int i = 0; i < n; ++i) {
    if (!test.zero(i, i)) {
      throw Error(ErrorCode::NonzeroDiagonal, "diagonal entry " + std::to_string(i + 1) + " is nonzero", {i});
    }
  }

  std::vector<int> blocks(static_cast<std::size_t>(n), RankTwoMatroid::kLoop);
  std::vector<int> nonloops;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!test.zero(i, j)) {
        nonloops.push_back(i);
        break;
      }
    }
  }

  // Zero entries among non-loops must form an equivalence relation.
  for (int i : nonloops) {
    for (int j : nonloops) {
      if (j == i || !test.zero(i, j)) continue;
      for (int k : nonloops) {
        if (k == i || k == j) continue;
        if (test.zero(j, k) && !test.zero(i, k)) {
          throw Error(ErrorCode::IntransitiveZeros, "zero entries are not transitive", {i, j, k});
        }
      }
    }
  }
  int num_parts = 0;
  for (int i : nonloops) {
    if (blocks[i] != RankTwoMatroid::kLoop) continue;
    for (int j : nonloops) {
      if (j == i || test.zero(i, j)) blocks[j] = num_parts;
    }
    ++num_parts;
  }

  // Two-colour the non-loops so that sign(s_ij) = sigma_i sigma_j.
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  sigma[nonloops.front()] = 1;
  std::deque<int> queue{nonloops.front()};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : nonloops) {
      const int sg = test.sign(u, v);
      if (sg == 0) continue;
      if (sigma[v] == 0) {
        sigma[v] = sigma[u] * sg;
        queue.push_back(v);
      } else if (sigma[v] != sigma[u] * sg) {
        std::vector<int> witness = find_odd_triple(test, nonloops);
        if (witness.empty()) witness = {std::min(u, v), std::max(u, v)};
        throw Error(ErrorCode::InconsistentSigns, "entry signs admit no sign vector", witness);
      }
    }
  }

  const MandelstamVerdict verdict = is_mandelstam(s);
  if (!verdict.mandelstam) {
    std::vector<int> witness;
    if (verdict.violation) witness = verdict.violation->subset;
    throw Error(ErrorCode::NotMandelstam, "matrix is not a Mandelstam matrix", witness);
  }

  const RankTwoMatroid matroid = RankTwoMatroid::from_blocks(blocks);
  const SignedMatroid sm(matroid, SignVector(sigma));
  const int rank = verdict.rank;
  if (!nonempty_massless(matroid, rank)) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + std::to_string(rank) + " is outside the range allowed by " +
                    std::to_string(num_parts) + " parts");
  }

  bool conserving = true;
  const double row_tol = tolerance::kRowSum * s.max_abs_entry();
  for (const Scalar& sum : row_sums(s)) {
    if (sum.is_exact() ? !sum.is_zero() : std::abs(sum.real()) > row_tol) {
      conserving = false;
      break;
    }
  }

  Classification out{StratumLabel{sm, rank, massless_kind(sm)}, std::numeric_limits<double>::infinity()};
  if (conserving) {
    if (!mmc_admissible(sm, rank)) {
      throw Error(ErrorCode::Inadmissible, "row sums vanish but the signed matroid is not momentum-conserving");
    }
    out.label.kind = Region::MMC;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (test.zero(i, j)) continue;
      out.margin = std::min(out.margin, std::abs(s(i, j).to_double()));
    }
  }
  return out;
}

bool check_rank_one_blocks(const SymmetricMatrix& s, const RankTwoMatroid& p) {
  if (s.size() != p.ground_size()) throw Error(ErrorCode::InvalidArgument, "matrix and matroid sizes differ");
  const auto parts = p.parts();
  const double scale = s.max_abs_entry();
  const double tol = tolerance::kMinor * scale * scale;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (int i : parts[a]) {
        for (int j : parts[a]) {
          if (j <= i) continue;
          for (int k : parts[b]) {
            for (int l : parts[b]) {
              if (l <= k) continue;
              const Scalar minor = s(i, k) * s(j, l) - s(i, l) * s(j, k);
              if (minor.is_exact() ? !minor.is_zero() : std::abs(minor.real()) > tol) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

}  // namespace strata
