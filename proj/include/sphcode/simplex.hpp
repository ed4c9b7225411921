#pragma once

#include "sphcode/linalg.hpp"

namespace sphcode {

enum class LpStatus { optimal, unbounded, iteration_limit };

/// Result of max c.x subject to A x <= b, x >= 0 (all b_i >= 0, so the slack
/// basis is feasible and no phase-1 is needed).
struct LpSolution {
  LpStatus status = LpStatus::iteration_limit;
  double objective = 0.0;
  Vec x;     // primal values
  Vec dual;  // shadow price per constraint row
};

LpSolution simplex_max(const Matrix& a, const Vec& b, const Vec& c,
                       long max_pivots = 400000);

}  // namespace sphcode
