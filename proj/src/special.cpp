#include "cartan/special.hpp"

#include <cmath>
#include <sstream>

namespace cartan {

namespace {

// Lanczos g = 7, 9 terms (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw special_error("log_gamma requires x > 0");
  // shift small arguments into the well-conditioned range
  if (x < 0.5) return log_gamma_lanczos(x + 1.0) - std::log(x);
  return log_gamma_lanczos(x);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw special_error("log_beta requires a, b > 0");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double inc_beta_cf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw special_error("reg_inc_beta requires a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * inc_beta_cf(a, b, x) / a;
  return 1.0 - front * inc_beta_cf(b, a, 1.0 - x) / b;
}

double selberg_integral_log(int r, double alpha0, double beta0, double gamma0) {
  if (r < 1) throw special_error("selberg_integral_log requires r >= 1");
  if (!(alpha0 > 0.0) || !(beta0 > 0.0))
    throw special_error("selberg_integral_log requires alpha0, beta0 > 0");
  if (!(gamma0 >= 0.0)) throw special_error("selberg_integral_log requires gamma0 >= 0");
  if (!(alpha0 + beta0 + (r - 1) * gamma0 > 0.0))
    throw special_error("selberg_integral_log parameter domain violated");
  const double lg1pg = log_gamma(1.0 + gamma0);
  double sum = 0.0;
  for (int j = 0; j < r; ++j) {
    sum += log_gamma(alpha0 + j * gamma0) + log_gamma(beta0 + j * gamma0) +
           log_gamma(1.0 + (j + 1) * gamma0) -
           log_gamma(alpha0 + beta0 + (r + j - 1) * gamma0) - lg1pg;
  }
  return sum;
}

GammaProductConstant weighted_volume_constant(const CartanDomain& d, double lambda) {
  if (!(lambda > d.p - 1)) {
    std::ostringstream os;
    os << "weighted volume constant requires lambda > p - 1 = " << (d.p - 1)
       << " (got " << lambda << ")";
    throw special_error(os.str());
  }
  const double n_over_r = static_cast<double>(d.n) / d.r;
  double log_c = -static_cast<double>(d.n) * std::log(M_PI);
  for (int j = 1; j <= d.r; ++j) {
    const double shift = (j - 1) * d.a / 2.0;
    log_c += log_gamma(lambda - shift) - log_gamma(lambda - n_over_r - shift);
  }
  return {log_c, lambda, d};
}

}  // namespace cartan
