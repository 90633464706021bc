#ifndef CARTAN_SPECIAL_HPP
#define CARTAN_SPECIAL_HPP

#include <stdexcept>

#include "cartan/catalog.hpp"

namespace cartan {

class special_error : public std::domain_error {
  using std::domain_error::domain_error;
};

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
/// Relative accuracy ~1e-14 on (0, 1e4].
double log_gamma(double x);

/// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double reg_inc_beta(double a, double b, double x);

/// ln of the Selberg integral
///   S_r(a0, b0, g0) = int_{[0,1]^r} prod x_j^{a0-1} (1-x_j)^{b0-1}
///                     prod_{j<k} |x_j - x_k|^{2 g0} dx
/// via the closed-form Gamma product.
/// Requires a0 > 0, b0 > 0, g0 >= 0.
double selberg_integral_log(int r, double alpha0, double beta0, double gamma0);

/// Log of the weighted-volume normalization constant
///   c_lambda = pi^{-n} prod_j Gamma(lambda - (j-1)a/2)
///                      / Gamma(lambda - n/r - (j-1)a/2),
/// the constant that makes the h(z,z)^{lambda-p} measure a probability
/// measure.  Finite only for lambda > p - 1.
struct GammaProductConstant {
  double value_log;
  double lambda;
  CartanDomain domain_ref;
};

GammaProductConstant weighted_volume_constant(const CartanDomain& d, double lambda);

}  // namespace cartan

#endif
