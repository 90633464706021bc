#ifndef CARTAN_VERIFY_HPP
#define CARTAN_VERIFY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cartan/symbol.hpp"

namespace cartan {

class verify_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Diagonal Toeplitz matrix elements on the weighted Bergman space of the
/// unit disk, computed by direct integration with a composite
/// Gauss-Legendre rule (the weight stays in the integrand, panels graded
/// geometrically toward the endpoints).  Entry k is
///   int_0^1 rho^k (1-rho)^{lambda-2} psi(rho) drho / B(k+1, lambda-1).
/// Independent of the Gauss-Jacobi path used by the spectrum layer.
std::vector<double> disk_diag(double lambda, const RadialSymbol& psi, int k_max,
                              int points_per_panel = 16);

/// One degree block of the Toeplitz operator on the 2-ball, via direct
/// quadrature over the simplex {u_1 + u_2 < 1, u_j > 0} in the squared
/// coordinates u_j = |z_j|^2.  Cross-monomial entries vanish identically
/// by angular integration and are reported as exact zeros.
struct OperatorBlockReport {
  double lambda = 0.0;
  int degree = 0;
  std::vector<std::vector<double>> entries;  // normalized ratios on the diagonal
  double max_offdiag = 0.0;
  double diag_spread = 0.0;      // max relative deviation among diagonal ratios
  double formula_value = 0.0;    // spectrum eigenvalue on TypeI(1,2), alpha=(degree)
  double diag_vs_formula = 0.0;  // max relative deviation diag vs formula_value

  std::string to_json() const;
};

/// psi is a rank-1 symbol evaluated at u = u_1 + u_2 = |z|^2.
OperatorBlockReport ball2_block(double lambda, const RadialSymbol& psi, int degree,
                                int panels_per_axis = 64);

/// Monte Carlo estimate of one off-diagonal matrix element
/// <psi z^beta, z^beta'> over the 4-real-dimensional ball.
struct OffdiagEstimate {
  std::array<int, 2> beta;
  std::array<int, 2> beta_prime;
  double estimate_re = 0.0;
  double estimate_im = 0.0;
  double std_error = 0.0;
};

using MonomialPair = std::array<std::array<int, 2>, 2>;

std::vector<OffdiagEstimate> monte_carlo_offdiag_smoke(
    double lambda, const RadialSymbol& psi, const std::vector<MonomialPair>& pairs,
    std::int64_t samples, std::uint64_t seed);

}  // namespace cartan

#endif
