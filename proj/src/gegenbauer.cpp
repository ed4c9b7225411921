#include "sphcode/gegenbauer.hpp"

#include <cmath>
#include <stdexcept>

namespace sphcode {

namespace {

double checked_t(double t) {
  if (std::isnan(t) || std::fabs(t) > 1.0 + 1e-12)
    throw std::domain_error("gegenbauer: t outside [-1, 1]");
  if (t > 1.0) return 1.0;
  if (t < -1.0) return -1.0;
  return t;
}

void check_dim(int dim) {
  if (dim < 2) throw std::domain_error("gegenbauer: dimension must be >= 2");
}

}  // namespace

double gegenbauer(int dim, int k, double t) {
  check_dim(dim);
  if (k < 0) throw std::domain_error("gegenbauer: negative index");
  t = checked_t(t);
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int i = 2; i <= k; ++i) {
    const double next =
        ((2 * i + dim - 4) * t * cur - (i - 1) * prev) / (i + dim - 3);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_all(int dim, int max_k, double t) {
  check_dim(dim);
  if (max_k < 0) throw std::domain_error("gegenbauer: negative index");
  t = checked_t(t);
  std::vector<double> g(max_k + 1);
  g[0] = 1.0;
  if (max_k >= 1) g[1] = t;
  for (int i = 2; i <= max_k; ++i)
    g[i] = ((2 * i + dim - 4) * t * g[i - 1] - (i - 1) * g[i - 2]) / (i + dim - 3);
  return g;
}

GegenbauerSeries::GegenbauerSeries(int dim, std::vector<double> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
  check_dim(dim_);
  if (coeffs_.empty())
    throw std::invalid_argument("GegenbauerSeries: empty coefficient list");
}

double GegenbauerSeries::eval(double t) const {
  t = checked_t(t);
  const std::vector<double> g = gegenbauer_all(dim_, degree(), t);
  double acc = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) acc += coeffs_[k] * g[k];
  return acc;
}

double GegenbauerSeries::at_one() const {
  double acc = 0.0;
  for (double c : coeffs_) acc += c;
  return acc;
}

std::vector<double> GegenbauerSeries::to_monomial() const {
  const std::vector<long double> mono = detail::series_monomial_ld(dim_, coeffs_);
  std::size_t len = mono.size();
  while (len > 1 && mono[len - 1] == 0.0L) --len;
  std::vector<double> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<double>(mono[i]);
  return out;
}

namespace detail {

std::vector<long double> series_monomial_ld(int dim, const std::vector<double>& coeffs) {
  check_dim(dim);
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<long double> acc(coeffs.size(), 0.0L);
  std::vector<long double> prev{1.0L};        // G_0
  std::vector<long double> cur{0.0L, 1.0L};   // G_1

  acc[0] += static_cast<long double>(coeffs[0]);
  if (d >= 1)
    for (std::size_t j = 0; j < cur.size(); ++j)
      acc[j] += static_cast<long double>(coeffs[1]) * cur[j];

  for (int k = 2; k <= d; ++k) {
    std::vector<long double> next(k + 1, 0.0L);
    const long double a = static_cast<long double>(2 * k + dim - 4);
    const long double b = static_cast<long double>(k - 1);
    const long double den = static_cast<long double>(k + dim - 3);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += a * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= b * prev[j];
    for (long double& v : next) v /= den;
    prev = std::move(cur);
    cur = std::move(next);
    const long double fk = static_cast<long double>(coeffs[k]);
    if (fk != 0.0L)
      for (std::size_t j = 0; j < cur.size(); ++j) acc[j] += fk * cur[j];
  }
  return acc;
}

long double horner_ld(const std::vector<long double>& mono, long double t) {
  long double acc = 0.0L;
  for (std::size_t i = mono.size(); i-- > 0;) acc = acc * t + mono[i];
  return acc;
}

}  // namespace detail

}  // namespace sphcode
