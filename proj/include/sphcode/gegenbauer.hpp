#pragma once

#include <vector>

namespace sphcode {

/// Gegenbauer polynomial G_k for the unit sphere in dimension dim, normalized
/// so that G_k(1) = 1. Evaluated by the three-term recurrence
///   G_0 = 1,  G_1 = t,  G_k = ((2k+dim-4) t G_{k-1} - (k-1) G_{k-2}) / (k+dim-3),
/// which is stable on [-1, 1]. For dim = 3 this is the Legendre family and for
/// dim = 2 the Chebyshev family.
double gegenbauer(int dim, int k, double t);

/// All values G_0(t) .. G_{max_k}(t) in one recurrence pass.
std::vector<double> gegenbauer_all(int dim, int max_k, double t);

/// Polynomial written in the normalized Gegenbauer basis of a fixed dimension:
/// f(t) = sum_k coeffs[k] G_k(t). Evaluation at t = 1 equals the coefficient sum.
class GegenbauerSeries {
 public:
  GegenbauerSeries(int dim, std::vector<double> coeffs);

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double eval(double t) const;
  double at_one() const;

  /// Monomial coefficients (index = power) of the same polynomial.
  /// Trailing exact zeros are trimmed.
  std::vector<double> to_monomial() const;

 private:
  int dim_;
  std::vector<double> coeffs_;
};

namespace detail {

/// Monomial coefficients in extended precision, used by certificate checks.
std::vector<long double> series_monomial_ld(int dim, const std::vector<double>& coeffs);
long double horner_ld(const std::vector<long double>& mono, long double t);

}  // namespace detail

}  // namespace sphcode
