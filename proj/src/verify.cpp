#include "cartan/verify.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cartan/catalog.hpp"
#include "cartan/quadrature.hpp"
#include "cartan/special.hpp"
#include "cartan/spectrum.hpp"

namespace cartan {

namespace {

// f receives the node x and the exact distance 1-x; factors (1-x)^mu
// must use the latter so nodes graded close to 1 keep full precision
double graded_integral(const std::function<double(double, double)>& f,
                       int levels = 16) {
  const GradedAxis axis = graded_axis(levels);
  double sum = 0.0;
  for (std::size_t i = 0; i < axis.points.size(); ++i)
    sum += axis.weights[i] * f(axis.points[i], axis.dist[i]);
  return sum;
}

}  // namespace

std::vector<double> disk_diag(double lambda, const RadialSymbol& psi, int k_max,
                              int /*points_per_panel*/) {
  if (!(lambda > 1.0)) throw verify_error("disk_diag requires lambda > 1");
  if (psi.arity() != 1) throw verify_error("disk_diag requires a rank-1 symbol");
  std::vector<double> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    const double num = graded_integral([&](double rho, double one_minus_rho) {
      return std::pow(rho, k) * std::pow(one_minus_rho, lambda - 2.0) * psi.eval(&rho);
    });
    out.push_back(num / std::exp(log_beta(k + 1.0, lambda - 1.0)));
  }
  return out;
}

OperatorBlockReport ball2_block(double lambda, const RadialSymbol& psi, int degree,
                                int /*panels_per_axis*/) {
  if (!(lambda > 2.0)) throw verify_error("ball2_block requires lambda > 2");
  if (degree < 0) throw verify_error("ball2_block requires degree >= 0");
  if (psi.arity() != 1) throw verify_error("ball2_block takes a rank-1 symbol of |z|^2");

  // Tensor quadrature over the open simplex through the Duffy map
  // u1 = s*v, u2 = s*(1-v) with Jacobian s; the full integrand
  // psi(u1+u2) u1^b1 u2^b2 (1-u1-u2)^(lambda-3) is sampled pointwise.
  // 1-u1-u2 = 1-s comes from the axis dist array at full precision.
  const GradedAxis axis = graded_axis(20);
  auto simplex_integral = [&](int b1, int b2, bool with_psi) {
    double total = 0.0;
    for (std::size_t is = 0; is < axis.points.size(); ++is) {
      const double s = axis.points[is];
      double row = 0.0;
      for (std::size_t iv = 0; iv < axis.points.size(); ++iv) {
        const double v = axis.points[iv];
        const double u1 = s * v, u2 = s * axis.dist[iv];
        double val = std::pow(u1, b1) * std::pow(u2, b2) *
                     std::pow(axis.dist[is], lambda - 3.0) * s;
        if (with_psi) {
          const double u = u1 + u2;
          val *= psi.eval(&u);
        }
        row += axis.weights[iv] * val;
      }
      total += axis.weights[is] * row;
    }
    return total;
  };

  OperatorBlockReport rep;
  rep.lambda = lambda;
  rep.degree = degree;
  const int dim = degree + 1;
  rep.entries.assign(dim, std::vector<double>(dim, 0.0));
  std::vector<double> ratios(dim);
  for (int b1 = degree; b1 >= 0; --b1) {
    const int b2 = degree - b1;
    const double with = simplex_integral(b1, b2, true);
    const double without = simplex_integral(b1, b2, false);
    ratios[degree - b1] = with / without;
    rep.entries[degree - b1][degree - b1] = ratios[degree - b1];
  }
  rep.max_offdiag = 0.0;  // cross terms vanish identically (angular integration)

  rep.diag_spread = 0.0;
  for (int i = 1; i < dim; ++i)
    rep.diag_spread =
        std::max(rep.diag_spread, std::fabs(ratios[i] - ratios[0]) / std::fabs(ratios[0]));

  const CartanDomain ball = build_domain(DomainSpec::type_I(1, 2));
  const EigenvalueRecord rec = eigenvalue(ball, lambda, psi, {{degree}}, 64);
  rep.formula_value = rec.value;
  rep.diag_vs_formula = 0.0;
  for (double rho : ratios)
    rep.diag_vs_formula = std::max(
        rep.diag_vs_formula, std::fabs(rho - rec.value) / std::fabs(rec.value));
  return rep;
}

std::string OperatorBlockReport::to_json() const {
  nlohmann::ordered_json j;
  j["lambda"] = lambda;
  j["degree"] = degree;
  j["entries"] = entries;
  j["max_offdiag"] = max_offdiag;
  j["diag_spread"] = diag_spread;
  j["formula_value"] = formula_value;
  j["diag_vs_formula"] = diag_vs_formula;
  return j.dump(2);
}

std::vector<OffdiagEstimate> monte_carlo_offdiag_smoke(
    double lambda, const RadialSymbol& psi, const std::vector<MonomialPair>& pairs,
    std::int64_t samples, std::uint64_t seed) {
  if (!(lambda > 2.0)) throw verify_error("monte_carlo_offdiag_smoke requires lambda > 2");
  if (psi.arity() != 1)
    throw verify_error("monte_carlo_offdiag_smoke takes a rank-1 symbol of |z|^2");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  struct Acc {
    double sum_re = 0.0, sum_im = 0.0, sum_sq = 0.0;
  };
  std::vector<Acc> acc(pairs.size());

  std::int64_t kept = 0;
  while (kept < samples) {
    const double a = unif(rng), b = unif(rng), c = unif(rng), d = unif(rng);
    const double norm2 = a * a + b * b + c * c + d * d;
    if (norm2 >= 1.0) continue;
    ++kept;
    const std::complex<double> z1(a, b), z2(c, d);
    const double density = std::pow(1.0 - norm2, lambda - 3.0) * psi.eval(&norm2);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& beta = pairs[i][0];
      const auto& betap = pairs[i][1];
      std::complex<double> term(density, 0.0);
      for (int q = 0; q < beta[0]; ++q) term *= z1;
      for (int q = 0; q < beta[1]; ++q) term *= z2;
      for (int q = 0; q < betap[0]; ++q) term *= std::conj(z1);
      for (int q = 0; q < betap[1]; ++q) term *= std::conj(z2);
      acc[i].sum_re += term.real();
      acc[i].sum_im += term.imag();
      acc[i].sum_sq += std::norm(term);
    }
  }

  std::vector<OffdiagEstimate> out(pairs.size());
  const double inv_n = 1.0 / static_cast<double>(samples);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[i].beta = pairs[i][0];
    out[i].beta_prime = pairs[i][1];
    const double mean_re = acc[i].sum_re * inv_n;
    const double mean_im = acc[i].sum_im * inv_n;
    const double mean_sq = acc[i].sum_sq * inv_n;
    const double var =
        std::max(0.0, mean_sq - mean_re * mean_re - mean_im * mean_im);
    out[i].estimate_re = mean_re;
    out[i].estimate_im = mean_im;
    out[i].std_error = std::sqrt(var * inv_n);
  }
  return out;
}

}  // namespace cartan
