#pragma once

#include <gmpxx.h>

#include <vector>

namespace strata {

struct LpResult {
  enum class Status { Optimal, Unbounded };
  Status status = Status::Optimal;
  mpq_class value;
  std::vector<mpq_class> x;
};

/// Exact rational simplex: maximise c.x subject to A x <= b, x >= 0 with
/// b >= 0, so the slack basis is feasible. Bland's rule rules out cycling on
/// the degenerate vertices that homogeneous sign constraints produce.
LpResult maximize(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b,
                  const std::vector<mpq_class>& c);

}  // namespace strata
