#include "strata/simplex.hpp"

#include "strata/error.hpp"

namespace strata {

LpResult maximize(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b,
                  const std::vector<mpq_class>& c) {
  const std::size_t rows = a.size();
  const std::size_t vars = c.size();
  if (b.size() != rows) throw Error(ErrorCode::InvalidArgument, "lp: row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != vars) throw Error(ErrorCode::InvalidArgument, "lp: column count mismatch");
    if (sgn(b[i]) < 0) throw Error(ErrorCode::InvalidArgument, "lp: right-hand side must be non-negative");
  }

  // Tableau columns: structural variables, slacks, right-hand side.
  const std::size_t cols = vars + rows;
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = a[i][j];
    t[i][vars + i] = 1;
    t[i][cols] = b[i];
  }
  std::vector<mpq_class> reduced(cols + 1);  // reduced costs, objective value negated in the last slot
  for (std::size_t j = 0; j < vars; ++j) reduced[j] = c[j];
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(reduced[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = t[i][cols] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) return LpResult{LpResult::Status::Unbounded, 0, {}};

    const mpq_class pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const mpq_class factor = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    const mpq_class factor = reduced[enter];
    for (std::size_t j = 0; j <= cols; ++j) reduced[j] -= factor * t[leave][j];
    basis[leave] = enter;
  }

  LpResult out;
  out.value = -reduced[cols];
  out.x.assign(vars, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) out.x[basis[i]] = t[i][cols];
  }
  return out;
}

}  // namespace strata
