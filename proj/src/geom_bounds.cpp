#include "sphcode/geom_bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphcode {

double delta_area(double phi) {
  const double upper = 2.0 * std::numbers::pi / 3.0;
  if (!(phi > 0.0) || phi > upper + 1e-12)
    throw std::domain_error("delta_area: side must lie in (0, 2*pi/3]");
  const double c = std::cos(phi);
  double ratio = c / (1.0 + c);
  if (ratio < -1.0) ratio = -1.0;  // roundoff at the 2*pi/3 endpoint
  return 3.0 * std::acos(ratio) - std::numbers::pi;
}

double fejes_toth_bound(double phi) {
  return 2.0 * std::numbers::pi / delta_area(phi) + 2.0;
}

double tammes_angle(int n_points) {
  if (n_points != 3 && n_points != 4 && n_points != 6 && n_points != 12)
    throw std::invalid_argument("tammes_angle: supported for 3, 4, 6 and 12 points");
  const double target = 2.0 * std::numbers::pi / (n_points - 2);
  double lo = 1e-9;
  double hi = 2.0 * std::numbers::pi / 3.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (delta_area(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

long long harborth(long long n) {
  if (n < 1) throw std::invalid_argument("harborth: need at least one circle");
  const long long m = 12 * n - 3;
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(m)));
  while (s * s > m) --s;
  while ((s + 1) * (s + 1) <= m) ++s;
  const long long ceil_sqrt = (s * s == m) ? s : s + 1;
  return 3 * n - ceil_sqrt;
}

double trivial_contact_bound(long long n, int dim) {
  if (n < 1) throw std::invalid_argument("trivial_contact_bound: need n >= 1");
  return 0.5 * static_cast<double>(kissing_numbers().at(dim)) *
         static_cast<double>(n);
}

const std::map<int, long long>& kissing_numbers() {
  static const std::map<int, long long> table{
      {1, 2}, {2, 6}, {3, 12}, {4, 24}, {8, 240}, {24, 196560}};
  return table;
}

}  // namespace sphcode
