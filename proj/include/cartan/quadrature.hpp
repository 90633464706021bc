#ifndef CARTAN_QUADRATURE_HPP
#define CARTAN_QUADRATURE_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "cartan/catalog.hpp"
#include "cartan/symbol.hpp"

namespace cartan {

class quadrature_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Gauss-Jacobi rule on [0,1] for the weight x^kappa (1-x)^mu:
/// N strictly increasing nodes in (0,1), positive weights, exact on
/// polynomials of degree <= 2N-1.  Sum of weights equals
/// B(kappa+1, mu+1).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double kappa;
  double mu;
  int order;
};

/// Golub-Welsch construction from the shifted-Jacobi three-term
/// recurrence.  Requires N >= 1 and kappa, mu > -1.
QuadratureRule jacobi_rule(int N, double kappa, double mu);

/// Shared, mutex-protected cache keyed by (N, kappa, mu).
std::shared_ptr<const QuadratureRule> cached_jacobi_rule(int N, double kappa, double mu);

/// One Gauss-Jacobi rule per coordinate; axis j built for
/// kappa_j = alpha_j + b and mu = lambda - p when assembled for a
/// signature alpha.
struct TensorGrid {
  std::vector<std::shared_ptr<const QuadratureRule>> axes;
  int rank() const { return static_cast<int>(axes.size()); }
};

TensorGrid tensor_grid(const CartanDomain& d, double lambda,
                       const std::vector<int>& alpha, int N);

/// Integral of the radial density
///   psi(x) prod_j x_j^{alpha_j + b} prod_j (1-x_j)^{lambda-p}
///          prod_{j<k} |x_j - x_k|^a
/// over [0,1)^r.  The per-axis power factors live in the Jacobi weight;
/// only psi and the Vandermonde power are sampled at nodes, so a
/// lambda in (p-1, p) endpoint singularity is handled exactly.  For even
/// a and polynomial psi of total degree D the sampled factor is a
/// polynomial and the result is exact once
/// N >= ceil((D + a(r-1) + 1)/2).  For odd a the factor |x_j - x_k|^a
/// has a kink on the diagonal, so the rule only converges at an
/// algebraic rate in N; rectangular_denominator_check quantifies the
/// residual against the Selberg closed form.  Pass nullptr for psi for
/// the denominator (psi == 1).
double radial_density_integral(const CartanDomain& d, double lambda,
                               const std::vector<int>& alpha,
                               const RadialSymbol* psi, int N);

/// Node count sufficient for exactness with a polynomial symbol of total
/// degree D on domain d.
int exact_node_count(const CartanDomain& d, int poly_degree);

/// Composite Gauss-Legendre axis on [0,1] for integrands with algebraic
/// endpoint singularities: 16-point panels halving geometrically toward
/// both endpoints for k = 1..levels, closed by cap panels under the
/// substitution x = c s^4 (c = 2^-(levels+1)), which flattens a x^mu
/// endpoint factor into s^(4mu+3).  dist[i] holds 1 - points[i] computed
/// without cancellation; integrands must read (1-x) from it, because for
/// nodes within a few ulp of 1 recomputing 1 - points[i] loses most of
/// the significant digits.
struct GradedAxis {
  std::vector<double> points;
  std::vector<double> weights;
  std::vector<double> dist;
};

GradedAxis graded_axis(int levels);

/// Node count for integrating a unit jump at x = c against the Jacobi
/// weight x^kappa (1-x)^mu to absolute tolerance tol (relative to the
/// weight mass).  Gauss rules see a jump through the single straddling
/// interval, so the error decays like
///   (3/8) pi sqrt(c(1-c)) c^kappa (1-c)^mu / (mass N);
/// the returned N inverts this law with a 1.8x safety factor.
int jump_node_count(double kappa, double mu, double c, double tol);

}  // namespace cartan

#endif
