#include "cartan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "cartan/special.hpp"

namespace cartan {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, rotating a single
// carried vector z (the first row of the eigenvector matrix).  d has the
// diagonal, e the subdiagonal in e[0..n-2].
void tridiag_eig_first_row(std::vector<double>& d, std::vector<double>& e,
                           std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e.resize(n, 0.0);
  const double prec = 2.22e-16;
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    scale = std::max(scale, std::fabs(d[i]) + 2.0 * std::fabs(e[i]));
  const double floor_tol = prec * scale;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double tol =
            prec * (std::fabs(d[m]) + std::fabs(d[m + 1])) + floor_tol;
        if (std::fabs(e[m]) <= tol) break;
      }
      if (m == l) break;
      if (++iter > 60)
        throw quadrature_error("tridiagonal eigen iteration failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

// Monic recurrence for the weight x^kappa (1-x)^mu on [0,1], obtained by
// shifting the classical Jacobi recurrence with A = mu, B = kappa:
// a[k] = diagonal, sb[k] = sqrt(beta_k) for k >= 1.
void shifted_jacobi_recurrence(int N, double kappa, double mu, std::vector<double>& a,
                               std::vector<double>& sb) {
  const double A = mu, B = kappa, ab = A + B;
  a.resize(N);
  sb.assign(N, 0.0);
  a[0] = 0.5 * (1.0 + (B - A) / (ab + 2.0));
  for (int k = 1; k < N; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    a[k] = 0.5 * (1.0 + (B * B - A * A) / den);
    double beta;
    if (k == 1) {
      beta = 4.0 * (A + 1.0) * (B + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      beta = 4.0 * k * (k + A) * (k + B) * (k + ab) /
             ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
              (2.0 * k + ab - 1.0));
    }
    sb[k] = 0.5 * std::sqrt(beta);
  }
}

QuadratureRule golub_welsch(int N, double kappa, double mu) {
  std::vector<double> a, sb;
  shifted_jacobi_recurrence(N, kappa, mu, a, sb);
  std::vector<double> off(N > 1 ? N - 1 : 0);
  for (int k = 1; k < N; ++k) off[k - 1] = sb[k];

  std::vector<double> z(N, 0.0);
  z[0] = 1.0;
  tridiag_eig_first_row(a, off, z);

  const double mass = std::exp(log_beta(kappa + 1.0, mu + 1.0));
  QuadratureRule rule;
  rule.kappa = kappa;
  rule.mu = mu;
  rule.order = N;
  std::vector<int> idx(N);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i] < a[j]; });
  rule.nodes.reserve(N);
  rule.weights.reserve(N);
  for (int i : idx) {
    rule.nodes.push_back(a[i]);
    rule.weights.push_back(mass * z[i] * z[i]);
  }
  return rule;
}

// Large-N path: Newton iteration on the orthonormal recurrence, all nodes
// advanced simultaneously (the k-loop is outermost so the per-node updates
// vectorize), seeded with Gatteschi-corrected Chebyshev-like angles.
// O(N^2) with a much smaller constant than the QL decomposition.
bool newton_rule(int N, double kappa, double mu, QuadratureRule& rule) {
  const double A = mu, B = kappa;
  std::vector<double> a, sb;
  shifted_jacobi_recurrence(N, kappa, mu, a, sb);
  const double mass = std::exp(log_beta(kappa + 1.0, mu + 1.0));
  const double p0 = 1.0 / std::sqrt(mass);

  // seeds, ascending in x
  std::vector<double> x(N);
  const double rho = N + 0.5 * (A + B + 1.0);
  for (int i = 0; i < N; ++i) {
    double phi = (2.0 * i + A + 1.5) * M_PI / (2.0 * rho);
    phi += ((0.25 - A * A) / std::tan(0.5 * phi) -
            (0.25 - B * B) * std::tan(0.5 * phi)) /
           (4.0 * rho * rho);
    if (!(phi > 0.0 && phi < M_PI)) return false;
    const double c = std::cos(0.5 * phi);
    x[N - 1 - i] = c * c;
  }

  std::vector<double> pm(N), pk(N), dm(N), dk(N), tmp(N);
  bool converged = false;
  for (int iter = 0; iter < 30 && !converged; ++iter) {
    // evaluate p_N and p_N' at every node via the orthonormal recurrence
    for (int i = 0; i < N; ++i) {
      pm[i] = 0.0;
      pk[i] = p0;
      dm[i] = 0.0;
      dk[i] = 0.0;
    }
    for (int k = 0; k < N; ++k) {
      const double ak = a[k];
      const double sbk = sb[k];
      const double inv_next = 1.0 / ((k + 1 < N) ? sb[k + 1] : 1.0);
      for (int i = 0; i < N; ++i) {
        const double pnew = ((x[i] - ak) * pk[i] - sbk * pm[i]) * inv_next;
        const double dnew = ((x[i] - ak) * dk[i] + pk[i] - sbk * dm[i]) * inv_next;
        pm[i] = pk[i];
        pk[i] = pnew;
        dm[i] = dk[i];
        dk[i] = dnew;
      }
    }
    double max_step = 0.0;
    for (int i = 0; i < N; ++i) {
      const double step = pk[i] / dk[i];
      x[i] -= step;
      max_step = std::max(max_step, std::fabs(step));
      if (!(x[i] > 0.0 && x[i] < 1.0)) return false;
    }
    if (max_step < 5e-16) converged = true;
  }
  if (!converged) return false;

  // weights from the Christoffel function: w_i = 1 / sum_k p_k(x_i)^2
  std::vector<double> s2(N, 0.0);
  for (int i = 0; i < N; ++i) {
    pm[i] = 0.0;
    pk[i] = p0;
  }
  for (int k = 0; k < N; ++k) {
    const double ak = a[k];
    const double sbk = sb[k];
    const double inv_next = 1.0 / ((k + 1 < N) ? sb[k + 1] : 1.0);
    for (int i = 0; i < N; ++i) {
      s2[i] += pk[i] * pk[i];
      const double pnew = ((x[i] - ak) * pk[i] - sbk * pm[i]) * inv_next;
      pm[i] = pk[i];
      pk[i] = pnew;
    }
  }

  rule.kappa = kappa;
  rule.mu = mu;
  rule.order = N;
  rule.nodes = std::move(x);
  rule.weights.resize(N);
  double total = 0.0;
  for (int i = 0; i < N; ++i) {
    rule.weights[i] = 1.0 / s2[i];
    total += rule.weights[i];
    if (!(rule.weights[i] > 0.0)) return false;
  }
  for (int i = 1; i < N; ++i)
    if (!(rule.nodes[i] > rule.nodes[i - 1])) return false;
  if (std::fabs(total - mass) > 1e-11 * mass) return false;
  return true;
}

}  // namespace

QuadratureRule jacobi_rule(int N, double kappa, double mu) {
  if (N < 1) throw quadrature_error("jacobi_rule requires N >= 1");
  if (!(kappa > -1.0) || !(mu > -1.0))
    throw quadrature_error("jacobi_rule requires kappa, mu > -1");
  if (N >= 1024) {
    QuadratureRule rule;
    if (newton_rule(N, kappa, mu, rule)) return rule;
    // fall through to the eigen decomposition if Newton did not validate
  }
  return golub_welsch(N, kappa, mu);
}

namespace {

std::mutex g_cache_mutex;
std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadratureRule>> g_cache;

}  // namespace

std::shared_ptr<const QuadratureRule> cached_jacobi_rule(int N, double kappa, double mu) {
  const auto key = std::make_tuple(N, kappa, mu);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(jacobi_rule(N, kappa, mu));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_cache.emplace(key, std::move(rule)).first->second;
}

TensorGrid tensor_grid(const CartanDomain& d, double lambda,
                       const std::vector<int>& alpha, int N) {
  if (static_cast<int>(alpha.size()) != d.r)
    throw quadrature_error("signature length must equal the domain rank");
  if (!(lambda > d.p - 1))
    throw quadrature_error("tensor_grid requires lambda > p - 1 = " +
                           std::to_string(d.p - 1));
  TensorGrid grid;
  grid.axes.reserve(d.r);
  const double mu = lambda - d.p;
  for (int j = 0; j < d.r; ++j)
    grid.axes.push_back(cached_jacobi_rule(N, static_cast<double>(alpha[j] + d.b), mu));
  return grid;
}

int exact_node_count(const CartanDomain& d, int poly_degree) {
  const int axis_degree = poly_degree + d.a * (d.r - 1);
  return (axis_degree + 2) / 2;  // ceil((deg + 1)/2)
}

GradedAxis graded_axis(int levels) {
  if (levels < 1) throw quadrature_error("graded_axis requires levels >= 1");
  // 16-point Gauss-Legendre panel rule on [0,1]; offsets from 1/2 and
  // weights for the symmetric half.
  static constexpr double off[8] = {
      0.04750625491881872, 0.14080177538962946, 0.22900838882861370,
      0.30893812220132190, 0.37770220417750150, 0.43281560119391590,
      0.47228751153661630, 0.49470046749582494};
  static constexpr double wt[8] = {
      0.09472530522753425, 0.09130170752246179, 0.08457825969750127,
      0.07479799440828837, 0.06231448562776694, 0.04757925584124639,
      0.03112676196932395, 0.01357622970587705};
  GradedAxis axis;
  // push x with weight w; near_one mirrors the node to 1 - x while
  // keeping the exact distance x in dist
  auto push = [&](double x, double w, bool near_one) {
    axis.points.push_back(near_one ? 1.0 - x : x);
    axis.weights.push_back(w);
    axis.dist.push_back(near_one ? x : 1.0 - x);
  };
  auto add_panel = [&](double lo, double hi, bool near_one) {
    const double h = hi - lo, mid = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
      push(mid - h * off[i], h * wt[i], near_one);
      push(mid + h * off[i], h * wt[i], near_one);
    }
  };
  for (int k = 1; k <= levels; ++k) {
    const double b = std::ldexp(1.0, -k);
    add_panel(0.5 * b, b, false);
    add_panel(0.5 * b, b, true);
  }
  const double cap = std::ldexp(1.0, -(levels + 1));
  for (bool near_one : {false, true})
    for (int i = 0; i < 8; ++i)
      for (double s : {0.5 - off[i], 0.5 + off[i]})
        push(cap * s * s * s * s, 4.0 * cap * s * s * s * wt[i], near_one);
  return axis;
}

int jump_node_count(double kappa, double mu, double c, double tol) {
  if (!(c > 0.0 && c < 1.0)) throw quadrature_error("jump_node_count requires c in (0,1)");
  if (!(tol > 0.0)) throw quadrature_error("jump_node_count requires tol > 0");
  const double mass = std::exp(log_beta(kappa + 1.0, mu + 1.0));
  const double envelope = 0.375 * M_PI * std::sqrt(c * (1.0 - c)) *
                          std::pow(c, kappa) * std::pow(1.0 - c, mu) / mass;
  const double n = std::ceil(1.8 * envelope / tol);
  return std::clamp(static_cast<int>(n), 512, 1 << 16);
}

double radial_density_integral(const CartanDomain& d, double lambda,
                               const std::vector<int>& alpha,
                               const RadialSymbol* psi, int N) {
  if (N < 1) throw quadrature_error("radial_density_integral requires N >= 1");
  for (int aj : alpha)
    if (aj < 0) throw quadrature_error("signature parts must be nonnegative");
  if (psi && psi->arity() != d.r)
    throw quadrature_error("symbol arity does not match the domain rank");
  if (d.r > 6)
    std::fprintf(stderr,
                 "warning: rank %d tensor quadrature evaluates %d^%d points\n",
                 d.r, N, d.r);

  const TensorGrid grid = tensor_grid(d, lambda, alpha, N);
  const int r = d.r;
  const int a = d.a;

  std::vector<int> index(r, 0);
  std::vector<double> x(r);
  double sum = 0.0;
  for (;;) {
    double w = 1.0;
    for (int j = 0; j < r; ++j) {
      x[j] = grid.axes[j]->nodes[index[j]];
      w *= grid.axes[j]->weights[index[j]];
    }
    double vdm = 1.0;
    for (int j = 0; j < r; ++j)
      for (int k = j + 1; k < r; ++k) {
        const double diff = std::fabs(x[j] - x[k]);
        for (int q = 0; q < a; ++q) vdm *= diff;
      }
    const double psi_val = psi ? psi->eval(x.data()) : 1.0;
    sum += w * vdm * psi_val;

    int j = r - 1;
    while (j >= 0 && ++index[j] == N) index[j--] = 0;
    if (j < 0) break;
  }
  return sum;
}

}  // namespace cartan
