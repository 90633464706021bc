#include "cartan/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

#include "cartan/quadrature.hpp"
#include "cartan/special.hpp"

namespace cartan {

int MultiIndex::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool MultiIndex::weakly_decreasing() const {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return false;
  return parts.empty() || parts.back() >= 0;
}

std::string MultiIndex::dashed() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(parts[i]);
  }
  return s;
}

namespace {

void gen_signatures(int r, int max_part, std::vector<int>& cur,
                    std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back({cur});
    return;
  }
  for (int v = max_part; v >= 0; --v) {
    cur.push_back(v);
    gen_signatures(r, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_signatures(int r, int alpha_max) {
  if (r < 1) throw spectrum_error("enumerate_signatures requires r >= 1");
  if (alpha_max < 0) throw spectrum_error("enumerate_signatures requires alpha_max >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  gen_signatures(r, alpha_max, cur, out);
  // graded lexicographic: by |alpha|, then lexicographically descending
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& x, const MultiIndex& y) {
    const int wx = x.weight(), wy = y.weight();
    if (wx != wy) return wx < wy;
    return x.parts > y.parts;
  });
  return out;
}

namespace {

double density_ratio(const CartanDomain& d, double lambda, const RadialSymbol& psi,
                     const std::vector<int>& alpha, int N, double* num = nullptr,
                     double* den = nullptr) {
  const double numerator = radial_density_integral(d, lambda, alpha, &psi, N);
  const double denominator = radial_density_integral(d, lambda, alpha, nullptr, N);
  if (num) *num = numerator;
  if (den) *den = denominator;
  return numerator / denominator;
}

int effective_nodes(const CartanDomain& d, const RadialSymbol& psi, int N) {
  if (auto deg = psi.degree()) return std::max(N, exact_node_count(d, *deg));
  // non-polynomial symbols (indicators) converge slowly; raise the floor
  return std::max(N, 96);
}

}  // namespace

EigenvalueRecord eigenvalue(const CartanDomain& d, double lambda,
                            const RadialSymbol& psi, const MultiIndex& alpha, int N) {
  if (alpha.rank() != d.r)
    throw spectrum_error("signature rank must equal the domain rank");
  if (!alpha.weakly_decreasing())
    throw spectrum_error("signature must be weakly decreasing");
  if (psi.arity() != d.r)
    throw spectrum_error("symbol arity must equal the domain rank");
  if (!check_symmetric(psi))
    throw spectrum_error("symbol '" + psi.name() + "' is not permutation symmetric");

  const int n_used = effective_nodes(d, psi, N);
  EigenvalueRecord rec;
  rec.domain = d;
  rec.lambda = lambda;
  rec.alpha = alpha;
  rec.nodes = n_used;
  rec.symbol_name = psi.name();
  rec.value = density_ratio(d, lambda, psi, alpha.parts, n_used, &rec.numerator,
                            &rec.denominator);
  const int n_ref = (3 * n_used + 1) / 2;
  const double refined = density_ratio(d, lambda, psi, alpha.parts, n_ref);
  rec.err_estimate = std::fabs(refined - rec.value);
  return rec;
}

std::vector<EigenvalueRecord> eigenvalue_table(const CartanDomain& d, double lambda,
                                               const RadialSymbol& psi, int alpha_max,
                                               int N, int threads) {
  const auto sigs = enumerate_signatures(d.r, alpha_max);
  // validate once up front so a bad configuration fails before any work
  if (!check_symmetric(psi))
    throw spectrum_error("symbol '" + psi.name() + "' is not permutation symmetric");

  std::vector<EigenvalueRecord> out(sigs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < sigs.size(); ++i)
      out[i] = eigenvalue(d, lambda, psi, sigs[i], N);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int n_threads = std::min<std::size_t>(threads, sigs.size());
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= sigs.size()) return;
        try {
          out[i] = eigenvalue(d, lambda, psi, sigs[i], N);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

namespace {

double int_pow(double x, int n) {
  double r = 1.0;
  while (n-- > 0) r *= x;
  return r;
}

// Rectangular density integral over the ordered region
//   r! * int_{1>x_1>...>x_r>0} prod x_j^kappa (1-x_j)^mu prod_{j<k} (x_j-x_k)^a
// for integer kappa >= 0 and r <= 3.  The innermost variable is integrated
// in closed form: binomial-expanding the difference factors reduces it to
// incomplete-beta moments, and the remaining r-1 variables use composite
// Gauss-Legendre panels graded toward the endpoints.  Unlike a tensor
// Gauss-Jacobi grid this stays accurate when a is odd, where |x_j-x_k|^a
// has a kink on the diagonal and is not a polynomial.
double ordered_rectangular_integral(int r, int a, int kappa, double mu) {
  constexpr int kLevels = 18;
  const GradedAxis axis = graded_axis(kLevels);
  const std::size_t P = axis.points.size();

  std::vector<double> binom(a + 1);
  binom[0] = 1.0;
  for (int i = 1; i <= a; ++i) binom[i] = binom[i - 1] * (a - i + 1) / i;
  std::vector<double> beta_full(2 * a + 1);
  for (int s = 0; s <= 2 * a; ++s)
    beta_full[s] = std::exp(log_beta(kappa + s + 1.0, mu + 1.0));
  auto axis_weight = [&](double x, double omx) {
    return int_pow(x, kappa) * std::pow(omx, mu);
  };
  // int_0^u x^(kappa+s) (1-x)^mu dx; the tail form keeps full precision
  // when u is within a few ulp of 1 (omx is the exact 1-u)
  auto lower_moment = [&](int s, double u, double omx) {
    if (u <= 0.5)
      return beta_full[s] * reg_inc_beta(kappa + s + 1.0, mu + 1.0, u);
    return beta_full[s] * (1.0 - reg_inc_beta(mu + 1.0, kappa + s + 1.0, omx));
  };

  double total = 0.0;
  if (r == 1) {
    total = beta_full[0];
  } else if (r == 2) {
    for (std::size_t i = 0; i < P; ++i) {
      const double u = axis.points[i];
      double inner = 0.0;
      for (int q = 0; q <= a; ++q) {
        const double sign = (q & 1) ? -1.0 : 1.0;
        inner += sign * binom[q] * int_pow(u, a - q) * lower_moment(q, u, axis.dist[i]);
      }
      total += axis.weights[i] * axis_weight(u, axis.dist[i]) * inner;
    }
    total *= 2.0;
  } else if (r == 3) {
    std::vector<double> moments(2 * a + 1);
    for (std::size_t i = 0; i < P; ++i) {
      const double x1 = axis.points[i];
      double row = 0.0;
      for (std::size_t j = 0; j < P; ++j) {
        const double x2 = axis.points[j] * x1;
        const double omx2 = axis.dist[j] * x1 + axis.dist[i];  // 1 - x2
        for (int s = 0; s <= 2 * a; ++s) moments[s] = lower_moment(s, x2, omx2);
        double inner = 0.0;
        for (int qi = 0; qi <= a; ++qi)
          for (int qj = 0; qj <= a; ++qj) {
            const double sign = ((qi + qj) & 1) ? -1.0 : 1.0;
            inner += sign * binom[qi] * binom[qj] * int_pow(x1, a - qi) *
                     int_pow(x2, a - qj) * moments[qi + qj];
          }
        row += axis.weights[j] * x1 * axis_weight(x2, omx2) *
               int_pow(x1 * axis.dist[j], a) * inner;
      }
      total += axis.weights[i] * axis_weight(x1, axis.dist[i]) * row;
    }
    total *= 6.0;
  } else {
    throw spectrum_error("ordered rectangular integral supports rank <= 3 only");
  }
  return total;
}

}  // namespace

double rectangular_denominator_check(const CartanDomain& d, double lambda, int m, int N) {
  std::vector<int> alpha(d.r, m);
  const double closed = std::exp(
      selberg_integral_log(d.r, m + d.b + 1.0, lambda - d.p + 1.0, d.a / 2.0));
  double quad;
  if (d.a % 2 == 1 && d.r <= 3) {
    // Odd a makes |x_j-x_k|^a non-polynomial, so the tensor Gauss-Jacobi
    // grid never becomes exact; use the ordered-region path instead.
    quad = ordered_rectangular_integral(d.r, d.a, m + d.b, lambda - d.p);
  } else {
    quad = radial_density_integral(d, lambda, alpha, nullptr, N);
  }
  return std::fabs(quad - closed) / closed;
}

namespace {

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string records_csv(const std::vector<EigenvalueRecord>& recs) {
  std::string out = "family,r,a,b,n,p,lambda,alpha,symbol,value,nodes,err_estimate\n";
  for (const auto& rec : recs) {
    out += csv_escape(rec.domain.family_name());
    out += ',';
    out += std::to_string(rec.domain.r) + ',' + std::to_string(rec.domain.a) + ',' +
           std::to_string(rec.domain.b) + ',' + std::to_string(rec.domain.n) + ',' +
           std::to_string(rec.domain.p) + ',';
    out += fmt_g17(rec.lambda);
    out += ',';
    out += rec.alpha.dashed();
    out += ',';
    out += csv_escape(rec.symbol_name);
    out += ',';
    out += fmt_g17(rec.value);
    out += ',';
    out += std::to_string(rec.nodes);
    out += ',';
    out += fmt_g17(rec.err_estimate);
    out += '\n';
  }
  return out;
}

std::string records_json(const std::vector<EigenvalueRecord>& recs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rec : recs) {
    nlohmann::ordered_json row;
    row["family"] = rec.domain.family_name();
    row["r"] = rec.domain.r;
    row["a"] = rec.domain.a;
    row["b"] = rec.domain.b;
    row["n"] = rec.domain.n;
    row["p"] = rec.domain.p;
    row["lambda"] = rec.lambda;
    row["alpha"] = rec.alpha.dashed();
    row["symbol"] = rec.symbol_name;
    row["value"] = rec.value;
    row["nodes"] = rec.nodes;
    row["err_estimate"] = rec.err_estimate;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace cartan
