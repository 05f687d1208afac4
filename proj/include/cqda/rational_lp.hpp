#pragma once

#include <vector>

#include <gmpxx.h>

namespace cqda {

/// max c.y subject to A y <= b, y >= 0, with b >= 0 so the origin is feasible.
/// Exact tableau simplex with Bland's rule. Throws Error when unbounded.
mpq_class lp_maximize(std::vector<std::vector<mpq_class>> const& a, std::vector<mpq_class> const& b,
                      std::vector<mpq_class> const& c);

}  // namespace cqda
