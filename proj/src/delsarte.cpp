#include "sphcode/delsarte.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sphcode/simplex.hpp"

namespace sphcode {

namespace {

std::vector<double> chebyshev_points(double lo, double hi, int count) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::vector<double> pts(count);
  for (int i = 0; i < count; ++i)
    pts[i] = mid + half * std::cos(std::numbers::pi * i / (count - 1));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::fabs(a - b) < 1e-15; }),
            pts.end());
  return pts;
}

std::vector<long double> derivative_ld(const std::vector<long double>& mono) {
  if (mono.size() <= 1) return {0.0L};
  std::vector<long double> d(mono.size() - 1);
  for (std::size_t i = 1; i < mono.size(); ++i)
    d[i - 1] = static_cast<long double>(i) * mono[i];
  return d;
}

struct Scan {
  long double max_value = -std::numeric_limits<long double>::infinity();
  double argmax = 0.0;
  std::vector<std::pair<long double, double>> maxima;  // (value, location)
};

// Dense sampling of the monomial form on [lo, hi]; each interior local
// maximum is sharpened by 50 bisection steps on the derivative sign.
Scan scan_max(const std::vector<long double>& mono, double lo, double hi,
              int samples) {
  Scan scan;
  const std::vector<long double> dmono = derivative_ld(mono);
  auto value = [&](double t) { return detail::horner_ld(mono, t); };
  auto slope = [&](double t) { return detail::horner_ld(dmono, t); };
  auto record = [&](long double v, double t) {
    if (v > scan.max_value) {
      scan.max_value = v;
      scan.argmax = t;
    }
    scan.maxima.emplace_back(v, t);
  };

  if (hi - lo < 1e-14) {
    record(value(lo), lo);
    return scan;
  }

  const int s = std::max(samples, 16);
  std::vector<long double> vals(s);
  const double step = (hi - lo) / (s - 1);
  for (int i = 0; i < s; ++i) vals[i] = value(lo + i * step);

  record(vals[0], lo);
  record(vals[s - 1], hi);
  for (int i = 1; i + 1 < s; ++i) {
    if (vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1]) {
      double a = lo + (i - 1) * step;
      double b = lo + (i + 1) * step;
      if (slope(a) > 0.0L && slope(b) < 0.0L) {
        for (int it = 0; it < 50; ++it) {
          const double midp = 0.5 * (a + b);
          if (slope(midp) > 0.0L)
            a = midp;
          else
            b = midp;
        }
        const double t = 0.5 * (a + b);
        record(value(t), t);
      } else {
        record(vals[i], lo + i * step);
      }
    }
  }
  std::sort(scan.maxima.begin(), scan.maxima.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  return scan;
}

// Grid-restricted LP, solved through its dual so the slack basis starts
// feasible: max 1.y subject to -sum_i G_k(t_i) y_i <= 1 for k = 1..degree.
// The shadow prices of the dual rows are the primal coefficients f_k.
Vec solve_grid_lp(int dim, int degree, const std::vector<double>& cuts) {
  const int m = degree;
  const int n = static_cast<int>(cuts.size());
  Matrix a(m, Vec(n, 0.0));
  for (int i = 0; i < n; ++i) {
    const std::vector<double> g = gegenbauer_all(dim, degree, cuts[i]);
    for (int k = 1; k <= degree; ++k) a[k - 1][i] = -g[k];
  }
  const Vec b(m, 1.0);
  const Vec c(n, 1.0);
  const LpSolution sol = simplex_max(a, b, c);
  if (sol.status == LpStatus::unbounded)
    throw InfeasibleDegree("no feasible polynomial at degree " +
                           std::to_string(degree));
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("delsarte_bound: simplex pivot budget exhausted");
  Vec f(degree);
  for (int k = 0; k < degree; ++k) f[k] = sol.dual[k];
  return f;
}

std::vector<double> with_unit_head(const Vec& f) {
  std::vector<double> coeffs(f.size() + 1);
  coeffs[0] = 1.0;
  std::copy(f.begin(), f.end(), coeffs.begin() + 1);
  return coeffs;
}

}  // namespace

LPCertificate delsarte_bound(int dim, double phi, int degree, int grid_size) {
  if (dim < 2) throw std::domain_error("delsarte_bound: dimension must be >= 2");
  if (!(phi > 0.0) || phi > std::numbers::pi + 1e-12)
    throw std::domain_error("delsarte_bound: angle must lie in (0, pi]");
  if (degree < 1) throw std::invalid_argument("delsarte_bound: degree must be >= 1");
  if (grid_size < degree + 2)
    throw std::invalid_argument("delsarte_bound: grid must have at least degree + 2 points");

  const double cosphi = std::clamp(std::cos(std::min(phi, std::numbers::pi)), -1.0, 1.0);
  std::vector<double> cuts = chebyshev_points(-1.0, cosphi, grid_size);
  const int samples = std::max(10 * grid_size, 5000);

  Vec f;
  std::vector<long double> mono;
  long double violation = 0.0L;

  for (int round = 0; round < 200; ++round) {
    f = solve_grid_lp(dim, degree, cuts);
    for (double& v : f)
      if (v < 0.0 && v > -1e-12) v = 0.0;
    mono = detail::series_monomial_ld(dim, with_unit_head(f));
    const Scan scan = scan_max(mono, -1.0, cosphi, samples);
    violation = scan.max_value;
    if (violation <= 1e-12) break;

    int added = 0;
    for (const auto& [val, loc] : scan.maxima) {
      if (val <= 1e-13 || added >= 32) break;
      const auto it = std::lower_bound(cuts.begin(), cuts.end(), loc);
      const bool dup = (it != cuts.end() && std::fabs(*it - loc) < 1e-13) ||
                       (it != cuts.begin() && std::fabs(*(it - 1) - loc) < 1e-13);
      if (!dup) {
        cuts.insert(it, loc);
        ++added;
      }
    }
    if (added == 0) break;
  }

  bool coeffs_ok = true;
  for (double& v : f) {
    if (v < -1e-12)
      coeffs_ok = false;
    else if (v < 0.0)
      v = 0.0;
  }

  // A residual positive maximum v < 1 is absorbed by the exact rescaling
  // g = (f - v) / (1 - v), which keeps g_0 = 1, g_k >= 0 and g <= 0 where
  // f <= v. The bound grows slightly, staying a valid upper bound.
  if (coeffs_ok) {
    mono = detail::series_monomial_ld(dim, with_unit_head(f));
    violation = scan_max(mono, -1.0, cosphi, samples).max_value;
    if (violation > 0.0L && violation < 1e-6L) {
      const double denom = static_cast<double>(1.0L - violation);
      for (double& v : f) v /= denom;
      mono = detail::series_monomial_ld(dim, with_unit_head(f));
      violation = scan_max(mono, -1.0, cosphi, samples).max_value;
    }
  }

  LPCertificate cert{GegenbauerSeries(dim, with_unit_head(f)), phi, 0.0, false,
                     static_cast<double>(violation)};
  cert.bound = cert.series.at_one();
  cert.verified = coeffs_ok && cert.max_violation <= 1e-9;
  return cert;
}

CertCheck verify_certificate(const LPCertificate& cert, int samples) {
  if (samples < 1000)
    throw std::invalid_argument("verify_certificate: need at least 1000 samples");
  const double cosphi =
      std::clamp(std::cos(std::min(cert.angle, std::numbers::pi)), -1.0, 1.0);
  const std::vector<long double> mono =
      detail::series_monomial_ld(cert.series.dim(), cert.series.coeffs());
  const Scan scan = scan_max(mono, -1.0, cosphi, samples);

  bool coeffs_ok = true;
  const auto& coeffs = cert.series.coeffs();
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    if (coeffs[k] < -1e-12) coeffs_ok = false;

  CertCheck check;
  check.max_value = static_cast<double>(scan.max_value);
  check.argmax = scan.argmax;
  check.ok = coeffs_ok && check.max_value <= 1e-9;
  return check;
}

LPCertificate kissing_lp(int dim, int degree) {
  return delsarte_bound(dim, std::numbers::pi / 3.0, degree);
}

nlohmann::json certificate_json(const LPCertificate& cert) {
  return nlohmann::json{{"dim", cert.dim()},
                        {"angle_rad", cert.angle},
                        {"degree", cert.series.degree()},
                        {"coeffs", cert.series.coeffs()},
                        {"bound", cert.bound},
                        {"verified", cert.verified},
                        {"max_violation", cert.max_violation}};
}

}  // namespace sphcode
