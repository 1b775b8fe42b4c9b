#include "strata/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace strata {

namespace {

bool member(const SignedMatroid& sm, const PosetQuery& q) {
  if (q.below && !signed_leq(sm, *q.below)) return false;
  if (q.region == Region::Lorentzian && !sm.all_plus()) return false;
  if (q.region == Region::MMC) return mmc_nonempty(sm, q.r);
  return nonempty_massless(sm.matroid(), q.r);
}

SignedMatroid rebuild(std::vector<int> blocks, std::vector<int> sigma) {
  return SignedMatroid(RankTwoMatroid::from_blocks(std::move(blocks)), SignVector(std::move(sigma)));
}

// Signed matroids covering sm in the full order: un-loop one element (into
// an existing part or a new one, either sign) or split one part in two.
std::vector<SignedMatroid> up_moves(const SignedMatroid& sm, bool plus_only) {
  const RankTwoMatroid& p = sm.matroid();
  const int n = p.ground_size();
  const int m = p.num_parts();
  std::vector<SignedMatroid> out;
  for (int i : p.loops()) {
    for (int sign : {1, -1}) {
      if (plus_only && sign < 0) continue;
      std::vector<int> sigma = sm.sigma().values();
      sigma[i] = sign;
      for (int target = 0; target <= m; ++target) {
        std::vector<int> blocks = p.blocks();
        blocks[i] = target;
        out.push_back(rebuild(blocks, sigma));
      }
    }
  }
  for (const auto& part : p.parts()) {
    const int size = static_cast<int>(part.size());
    // Subsets containing part.front() stay; the complement moves to a new part.
    for (int mask = 0; mask < (1 << (size - 1)) - 1; ++mask) {
      std::vector<int> blocks = p.blocks();
      for (int k = 1; k < size; ++k) {
        if (!((mask >> (k - 1)) & 1)) blocks[part[k]] = n;
      }
      out.push_back(rebuild(blocks, sm.sigma().values()));
    }
  }
  return out;
}

}  // namespace

Poset export_poset(const PosetQuery& q) {
  if (q.n > kMaxPosetSize) throw Error(ErrorCode::TooLarge, "poset export needs n <= 7");
  if (q.n < 2) throw Error(ErrorCode::InvalidArgument, "poset export needs n >= 2");
  if (q.below && q.below->ground_size() != q.n) {
    throw Error(ErrorCode::InvalidArgument, "ideal generator has the wrong ground set");
  }
  Poset out;
  std::map<SignedMatroid, int> index;
  for_each_signed(q.n, 2, [&](const SignedMatroid& sm) {
    if (!member(sm, q)) return;
    const Region kind = q.region == Region::MMC ? Region::MMC : massless_kind(sm);
    index.emplace(sm, static_cast<int>(out.vertices.size()));
    out.vertices.push_back(StratumLabel{sm, q.r, kind});
  });

  const bool plus_only = q.region == Region::Lorentzian;
  for (std::size_t v = 0; v < out.vertices.size(); ++v) {
    const SignedMatroid& start = out.vertices[v].signed_matroid;
    std::set<SignedMatroid> seen{start};
    std::deque<SignedMatroid> queue{start};
    std::vector<int> reached;
    while (!queue.empty()) {
      const SignedMatroid cur = queue.front();
      queue.pop_front();
      for (const SignedMatroid& next : up_moves(cur, plus_only)) {
        if (!seen.insert(next).second) continue;
        if (q.below && !signed_leq(next, *q.below)) continue;
        const auto it = index.find(next);
        if (it != index.end()) {
          reached.push_back(it->second);
        } else {
          queue.push_back(next);
        }
      }
    }
    // Keep the minimal members reached; the rest are not covers.
    for (int up : reached) {
      const SignedMatroid& cand = out.vertices[up].signed_matroid;
      const bool minimal = std::none_of(reached.begin(), reached.end(), [&](int other) {
        return other != up && signed_leq(out.vertices[other].signed_matroid, cand);
      });
      if (minimal) out.covers.emplace_back(static_cast<int>(v), up);
    }
  }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

}  // namespace strata
