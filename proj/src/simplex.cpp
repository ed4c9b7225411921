#include "sphcode/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphcode {

// Dense tableau simplex. The tableau rows hold [A | I | b]; the last row holds
// the reduced costs z_j - c_j with the running objective in the rhs cell.
// Dantzig pricing, switching to Bland's rule after a pivot budget to rule out
// cycling on degenerate bases.
LpSolution simplex_max(const Matrix& a, const Vec& b, const Vec& c,
                       long max_pivots) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("simplex_max: rhs size mismatch");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("simplex_max: ragged constraint matrix");

  const int width = n + m + 1;
  Matrix t(m + 1, Vec(width, 0.0));
  for (int i = 0; i < m; ++i) {
    if (b[i] < -1e-9)
      throw std::invalid_argument("simplex_max: negative rhs not supported");
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][width - 1] = std::max(b[i], 0.0);
  }
  for (int j = 0; j < n; ++j) t[m][j] = -c[j];

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  const double tol = 1e-10;
  const long bland_after = 2000 + 20L * (m + n);

  LpSolution sol;
  long pivots = 0;
  while (true) {
    if (pivots >= max_pivots) {
      sol.status = LpStatus::iteration_limit;
      break;
    }
    int enter = -1;
    if (pivots < bland_after) {
      double best = -tol;
      for (int j = 0; j < n + m; ++j)
        if (t[m][j] < best) {
          best = t[m][j];
          enter = j;
        }
    } else {
      for (int j = 0; j < n + m; ++j)
        if (t[m][j] < -tol) {
          enter = j;
          break;
        }
    }
    if (enter < 0) {
      sol.status = LpStatus::optimal;
      break;
    }

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > 1e-11) {
        const double r = t[i][width - 1] / t[i][enter];
        if (leave < 0 || r < best_ratio - 1e-12 ||
            (r < best_ratio + 1e-12 && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = r;
        }
      }
    }
    if (leave < 0) {
      sol.status = LpStatus::unbounded;
      break;
    }

    const double piv = t[leave][enter];
    for (int j = 0; j < width; ++j) t[leave][j] /= piv;
    t[leave][enter] = 1.0;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
      t[i][enter] = 0.0;
    }
    basis[leave] = enter;
    ++pivots;
  }

  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = t[i][width - 1];
  sol.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) sol.dual[i] = t[m][n + i];
  sol.objective = t[m][width - 1];
  return sol;
}

}  // namespace sphcode
