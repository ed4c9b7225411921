#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sphcode/gegenbauer.hpp"

namespace sphcode {

/// Feasible polynomial for the linear-programming bound on A(dim, angle):
/// f = 1 + sum_{k>=1} f_k G_k with f_k >= 0 and f <= 0 on [-1, cos(angle)].
/// f(1) = bound is then an upper bound on the size of any angle-code.
struct LPCertificate {
  GegenbauerSeries series;
  double angle = 0.0;          // radians
  double bound = 0.0;          // series.at_one()
  bool verified = false;
  double max_violation = 0.0;  // max of f over [-1, cos(angle)]

  int dim() const { return series.dim(); }
};

struct CertCheck {
  bool ok = false;
  double max_value = 0.0;
  double argmax = 0.0;
};

/// No feasible polynomial exists at the requested degree.
class InfeasibleDegree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultLpGrid = 320;

/// Minimizes f(1) over feasible polynomials of the given degree by a
/// cutting-plane loop over grid points of [-1, cos(phi)], then verifies
/// nonpositivity on the whole interval. A certificate returned with
/// verified == false must not be reported as a valid bound.
LPCertificate delsarte_bound(int dim, double phi, int degree,
                             int grid_size = kDefaultLpGrid);

/// Locates the maximum of the certificate polynomial on [-1, cos(angle)]
/// by dense sampling plus derivative bisection on the monomial form.
/// ok iff the maximum is <= 1e-9 and all f_k >= -1e-12 for k >= 1.
CertCheck verify_certificate(const LPCertificate& cert, int samples);

/// delsarte_bound at phi = pi/3.
LPCertificate kissing_lp(int dim, int degree);

nlohmann::json certificate_json(const LPCertificate& cert);

}  // namespace sphcode
