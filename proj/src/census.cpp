#include "strata/census.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace strata {

namespace {

int choose2(int r) { return r * (r - 1) / 2; }

mpz_class pow2(int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

// Floor division for a non-negative numerator and positive denominator.
int floor_div(int num, int den) { return num >= 0 ? num / den : -((-num + den - 1) / den); }

void require_n(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "ground set needs n >= 2");
}

}  // namespace

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Mandelstam: return "mandelstam";
    case Region::Lorentzian: return "lorentzian";
    case Region::MMC: return "mmc";
  }
  return "?";
}

Region region_from_string(std::string_view text) {
  if (text == "mandelstam" || text == "massless") return Region::Mandelstam;
  if (text == "lorentzian") return Region::Lorentzian;
  if (text == "mmc") return Region::MMC;
  throw Error(ErrorCode::Parse, "unknown region '" + std::string(text) + "'");
}

bool nonempty_massless(const RankTwoMatroid& p, int r) {
  const int m = p.num_parts();
  return (3 <= r && r <= m) || (r == 2 && m == 2);
}

int dim_massless(const RankTwoMatroid& p, int r) {
  if (!nonempty_massless(p, r)) {
    throw Error(ErrorCode::EmptyStratum, "massless stratum is empty at rank " + std::to_string(r));
  }
  const int m = p.num_parts();
  return m * (r - 2) + p.ground_size() - p.num_loops() - choose2(r);
}

mpz_class count_massless(int n, int r, int d, bool all_sigma) {
  require_n(n);
  if (r < 2 || r > n || d < 1) return 0;
  const int top = r == 2 ? 2 : floor_div(d + choose2(r), r - 1);
  const int bottom = r == 2 ? 2 : r;
  mpz_class total = 0;
  for (int m = bottom; m <= top; ++m) {
    const int loops = m * (r - 2) + n - choose2(r) - d;
    if (loops < 0 || loops > n - m) continue;
    mpz_class term = binomial(n, loops) * stirling2(n - loops, m);
    if (all_sigma) term *= pow2(n - loops - 1);
    total += term;
  }
  return total;
}

mpz_class count_rank2(int n, int d, Region region) {
  require_n(n);
  if (region == Region::MMC) throw Error(ErrorCode::InvalidArgument, "rank-two closed form is massless only");
  if (d < 1 || d > n - 1) return 0;
  const mpz_class lorentzian = (pow2(d) - 1) * binomial(n, d + 1);
  if (region == Region::Lorentzian) return lorentzian;
  return pow2(d) * lorentzian;
}

bool mmc_admissible(const SignedMatroid& sm, int r) {
  const RankTwoMatroid& p = sm.matroid();
  if (!nonempty_massless(p, r)) {
    throw Error(ErrorCode::EmptyStratum, "massless stratum is empty at rank " + std::to_string(r));
  }
  const int m = p.num_parts();
  const SignVector& sigma = sm.sigma();
  if (r == m) {
    std::vector<int> seen(static_cast<std::size_t>(m), 0);  // bit 1: plus, bit 2: minus
    for (int i : p.nonloops()) seen[p.part_of(i)] |= sigma[i] > 0 ? 1 : 2;
    return std::all_of(seen.begin(), seen.end(), [](int bits) { return bits == 3; });
  }
  std::vector<int> plus, minus;
  for (int i : p.nonloops()) (sigma[i] > 0 ? plus : minus).push_back(i);
  for (std::size_t a = 0; a < plus.size(); ++a) {
    for (std::size_t b = a + 1; b < plus.size(); ++b) {
      const int i = plus[a], j = plus[b];
      if (p.parallel(i, j)) continue;
      for (std::size_t c = 0; c < minus.size(); ++c) {
        for (std::size_t e = c + 1; e < minus.size(); ++e) {
          const int k = minus[c], l = minus[e];
          if (p.parallel(k, l)) continue;
          const int pi = p.part_of(i), pj = p.part_of(j), pk = p.part_of(k), pl = p.part_of(l);
          const bool uniform = pk != pi && pk != pj && pl != pi && pl != pj;
          const bool crossed = (pi == pk && pj == pl) || (pi == pl && pj == pk);
          if (uniform || crossed) return true;
        }
      }
    }
  }
  return false;
}

bool mmc_nonempty(const SignedMatroid& sm, int r) {
  return nonempty_massless(sm.matroid(), r) && mmc_admissible(sm, r);
}

int dim_mmc(const SignedMatroid& sm, int r) {
  if (!mmc_admissible(sm, r)) {
    throw Error(ErrorCode::Inadmissible, "signed matroid is not momentum-conserving at rank " + std::to_string(r));
  }
  const RankTwoMatroid& p = sm.matroid();
  const int m = p.num_parts();
  const int nonloops = p.num_nonloops();
  return (m - 1) * (r - 1) - choose2(r) + (nonloops - m) - 1;
}

mpz_class mmc_loopless_count(int n, int m, int r) {
  if (r < 2 || m < r || m > n) return 0;
  if (r == 2 && m != 2) return 0;
  mpz_class total = 0;
  for (int plus = 2; plus <= n - 2; ++plus) {
    const mpz_class ways = binomial(n, plus);
    if (r == m) {
      // Both signs in every part: each sign class is spread over all m parts.
      total += ways * stirling2(plus, m) * stirling2(n - plus, m) * factorial(m);
      continue;
    }
    for (int a = 2; a <= m; ++a) {
      for (int b = 2; b <= m; ++b) {
        if (a + b < m) continue;
        // a parts hold plus elements, b hold minus elements, a + b - m hold both.
        mpz_class term = ways * stirling2(plus, a) * stirling2(n - plus, b) * factorial(a) * factorial(b);
        term /= factorial(m - a) * factorial(m - b) * factorial(a + b - m);
        total += term;
      }
    }
  }
  return total / 2;
}

mpz_class count_mmc(int n, int r, int d) {
  require_n(n);
  if (r < 2 || r > n || d < 1) return 0;
  const int top = r == 2 ? 2 : floor_div(d + r + choose2(r), r - 1);
  const int bottom = r == 2 ? 2 : r;
  mpz_class total = 0;
  for (int m = bottom; m <= top; ++m) {
    const int loops = (m - 1) * (r - 1) - choose2(r) + (n - d - m) - 1;
    if (loops < 0 || loops > n - m) continue;
    total += binomial(n, loops) * mmc_loopless_count(n - loops, m, r);
  }
  return total;
}

mpz_class mmc_top_count(int n) {
  if (n < 4) return 0;
  return pow2(n - 1) - n - 1;
}

mpz_class components_r3(int m) {
  if (m < 3) return 1;
  return factorial(m - 1) / 2;
}

std::vector<int> reference_sigma(int n, Region region) {
  std::vector<int> sigma(static_cast<std::size_t>(n), 1);
  if (region == Region::MMC) {
    for (int i = 0; i < n / 2; ++i) sigma[i] = -1;
  }
  return sigma;
}

int table_max_rank(int n, Region region) { return region == Region::MMC ? n - 1 : n; }

int table_max_dimension(int n, Region region) {
  return region == Region::MMC ? n * (n - 3) / 2 : n * (n - 1) / 2;
}

namespace {

using CellMap = std::map<std::pair<int, int>, std::pair<mpz_class, mpz_class>>;  // (d, r) -> (fixed, all)

bool keep(const CensusQuery& q, int r, int d) {
  if (r < 2 || r > table_max_rank(q.n, q.region)) return false;
  if (d < 1 || d > table_max_dimension(q.n, q.region)) return false;
  return (!q.r || *q.r == r) && (!q.d || *q.d == d);
}

std::vector<CensusRow> to_rows(const CensusQuery& q, const CellMap& cells) {
  std::vector<CensusRow> rows;
  for (const auto& [key, counts] : cells) {
    const auto [d, r] = key;
    if (!keep(q, r, d)) continue;
    if (counts.first == 0 && counts.second == 0) continue;
    rows.push_back(CensusRow{q.n, r, d, counts.first, counts.second});
  }
  return rows;
}

void check_query(const CensusQuery& q) {
  require_n(q.n);
  if (q.region == Region::MMC && q.n < 4) {
    throw Error(ErrorCode::InvalidArgument, "momentum-conserving census needs n >= 4");
  }
}

// Fixed-sigma MMC counts: visit every matroid once with sigma restricted
// from the reference sign vector.
CellMap mmc_fixed_cells(int n) {
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::TooLarge, "fixed-sign MMC counts enumerate matroids; n <= 10 required");
  }
  const std::vector<int> sigma = reference_sigma(n, Region::MMC);
  CellMap cells;
  for_each_matroid(n, 2, [&](const RankTwoMatroid& p) {
    const SignedMatroid sm(p, sigma);
    for (int r = 2; r <= std::min(p.num_parts(), n - 1); ++r) {
      if (!mmc_nonempty(sm, r)) continue;
      cells[{dim_mmc(sm, r), r}].first += 1;
    }
  });
  return cells;
}

}  // namespace

std::vector<CensusRow> build_table(const CensusQuery& q) {
  check_query(q);
  CellMap cells;
  const int max_r = table_max_rank(q.n, q.region);
  const int max_d = table_max_dimension(q.n, q.region);
  if (q.region == Region::MMC) {
    cells = mmc_fixed_cells(q.n);
    for (int r = 2; r <= max_r; ++r) {
      for (int d = 1; d <= max_d; ++d) {
        if (!keep(q, r, d)) continue;
        cells[{d, r}].second = count_mmc(q.n, r, d);
      }
    }
    return to_rows(q, cells);
  }
  const bool lorentzian = q.region == Region::Lorentzian;
  for (int r = 2; r <= max_r; ++r) {
    for (int d = 1; d <= max_d; ++d) {
      if (!keep(q, r, d)) continue;
      const mpz_class fixed = count_massless(q.n, r, d, false);
      cells[{d, r}] = {fixed, lorentzian ? fixed : count_massless(q.n, r, d, true)};
    }
  }
  return to_rows(q, cells);
}

std::vector<CensusRow> brute_force_table(const CensusQuery& q) {
  check_query(q);
  if (q.n > kMaxEnumerationSize) throw Error(ErrorCode::TooLarge, "enumeration needs n <= 10");
  const int max_r = table_max_rank(q.n, q.region);
  const SignVector reference(reference_sigma(q.n, q.region));
  CellMap cells;
  for_each_signed(q.n, 2, [&](const SignedMatroid& sm) {
    const RankTwoMatroid& p = sm.matroid();
    std::vector<int> restricted(static_cast<std::size_t>(q.n), 0);
    for (int i : p.nonloops()) restricted[i] = reference[i];
    const bool is_reference = SignVector(restricted).canonical() == sm.sigma();
    for (int r = 2; r <= std::min(p.num_parts(), max_r); ++r) {
      int d = 0;
      if (q.region == Region::MMC) {
        if (!mmc_nonempty(sm, r)) continue;
        d = dim_mmc(sm, r);
      } else {
        if (!nonempty_massless(p, r)) continue;
        d = dim_massless(p, r);
      }
      auto& cell = cells[{d, r}];
      if (is_reference) cell.first += 1;
      if (q.region != Region::Lorentzian || is_reference) cell.second += 1;
    }
  });
  return to_rows(q, cells);
}

}  // namespace strata
