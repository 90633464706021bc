// cartan-spectra: eigenvalue tables of radial Toeplitz operators on
// weighted Bergman spaces over bounded symmetric domains, plus the
// verification suites that cross-check them.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cartan/catalog.hpp"
#include "cartan/quadrature.hpp"
#include "cartan/special.hpp"
#include "cartan/spectrum.hpp"
#include "cartan/symbol.hpp"
#include "cartan/verify.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CARTAN_SPECTRA_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

cartan::RadialSymbol make_symbol(const std::string& expr, const std::string& builtin,
                                 int r) {
  if (!expr.empty() && !builtin.empty())
    throw cartan::symbol_error("--symbol and --builtin are mutually exclusive");
  if (!builtin.empty()) return cartan::parse_builtin(builtin, r);
  if (!expr.empty()) return cartan::parse_symbol(expr, r);
  return cartan::builtin_symbol(cartan::BuiltinKind::Const, 1.0, r);
}

int cmd_info(const std::string& domain_str) {
  const auto d = cartan::build_domain(cartan::parse_domain_spec(domain_str));
  std::printf("domain    %s%s\n", d.family_name().c_str(), d.formal ? "  (formal)" : "");
  std::printf("r         %d\n", d.r);
  std::printf("a         %d\n", d.a);
  std::printf("b         %d\n", d.b);
  std::printf("n         %lld\n", static_cast<long long>(d.n));
  std::printf("n_tube    %lld\n", static_cast<long long>(d.n_tube));
  std::printf("p         %d\n", d.p);
  std::printf("tube_type %s\n", d.tube_type() ? "yes" : "no");
  const std::string note = d.erratum();
  if (!note.empty()) std::printf("%s\n", note.c_str());
  return 0;
}

int cmd_eigs(const std::string& domain_str, double lambda, const std::string& expr,
             const std::string& builtin, int alpha_max, int nodes,
             const std::string& format, const std::string& out_path, int threads) {
  const auto d = cartan::build_domain(cartan::parse_domain_spec(domain_str));
  if (!(lambda > d.p - 1)) {
    std::fprintf(stderr, "error: lambda must exceed p - 1 = %d (got %g)\n", d.p - 1,
                 lambda);
    return kExitValidation;
  }
  const auto psi = make_symbol(expr, builtin, d.r);
  if (!cartan::check_symmetric(psi)) {
    std::fprintf(stderr, "error: symbol '%s' is not permutation symmetric\n",
                 psi.name().c_str());
    return kExitValidation;
  }
  const auto records =
      cartan::eigenvalue_table(d, lambda, psi, alpha_max, nodes, resolve_threads(threads));
  for (const auto& rec : records) {
    if (!std::isfinite(rec.value) || rec.denominator <= 0.0) {
      std::fprintf(stderr, "error: non-finite eigenvalue at alpha = %s\n",
                   rec.alpha.dashed().c_str());
      return kExitNumeric;
    }
  }
  const std::string text =
      format == "json" ? cartan::records_json(records) : cartan::records_csv(records);
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot open '%s'\n", out_path.c_str());
      return kExitValidation;
    }
    out << text;
  }
  return 0;
}

int cmd_selberg(int r, double alpha0, double beta0, double gamma0) {
  const double lg = cartan::selberg_integral_log(r, alpha0, beta0, gamma0);
  std::printf("log_selberg %.17g\n", lg);
  std::printf("selberg     %.17g\n", std::exp(lg));
  return 0;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

struct SuiteResult {
  int checks = 0;
  int failures = 0;

  void record(const std::string& label, double measured, double tol) {
    ++checks;
    const bool ok = measured <= tol;
    if (!ok) ++failures;
    std::printf("%-4s %-58s %10.3e (tol %.1e)\n", ok ? "ok" : "FAIL", label.c_str(),
                measured, tol);
  }
};

int suite_selberg() {
  SuiteResult res;
  const std::vector<std::string> domains = {"typeIII:2", "typeIII:3", "typeI:2,2",
                                            "typeI:2,4", "typeIV:5",  "typeV",
                                            "typeVI"};
  for (const auto& name : domains) {
    const auto d = cartan::build_domain(cartan::parse_domain_spec(name));
    const int N = d.spec.family == cartan::Family::TypeVI ? 40 : 32;
    for (int m : {0, 1, 2, 4}) {
      for (double lam : {d.p + 0.5, d.p + 3.0}) {
        const double err = cartan::rectangular_denominator_check(d, lam, m, N);
        char label[96];
        std::snprintf(label, sizeof(label), "selberg %s m=%d lambda=%g", name.c_str(), m,
                      lam);
        res.record(label, err, 1e-9);
      }
    }
  }
  return res.failures == 0 ? 0 : kExitNumeric;
}

int suite_disk(int k_max = 10) {
  SuiteResult res;
  const auto disk = cartan::build_domain(cartan::parse_domain_spec("typeI:1,1"));
  struct Case {
    const char* name;
    double tol;
  };
  const Case cases[] = {
      {"const:1", 1e-8},
      {"det_power:1", 1e-8},
      {"ball_indicator:0.5", 1e-4},
  };
  for (const auto& cs : cases) {
    const auto psi = cartan::parse_builtin(cs.name, 1);
    const bool jump = !psi.degree().has_value();
    for (double lam : {2.0, 3.5}) {
      const auto oracle = cartan::disk_diag(lam, psi, k_max);
      double worst = 0.0;
      for (int k = 0; k <= k_max; ++k) {
        double value;
        if (jump) {
          // schedule enough nodes for the discontinuity, then compare the
          // plain density ratio (the eigenvalue refinement pass would only
          // repeat the same slowly converging integral)
          const int n = cartan::jump_node_count(k, lam - 2.0, 0.5, cs.tol);
          value = cartan::radial_density_integral(disk, lam, {k}, &psi, n) /
                  cartan::radial_density_integral(disk, lam, {k}, nullptr, n);
        } else {
          value = cartan::eigenvalue(disk, lam, psi, {{k}}, 64).value;
        }
        worst = std::max(worst, std::fabs(value - oracle[k]));
      }
      char label[96];
      std::snprintf(label, sizeof(label), "disk %s lambda=%g", cs.name, lam);
      res.record(label, worst, cs.tol);
    }
  }
  return res.failures == 0 ? 0 : kExitNumeric;
}

int suite_ball2() {
  SuiteResult res;
  const char* symbols[] = {"1", "x1", "x1^2"};
  for (const char* sym : symbols) {
    const auto psi = cartan::parse_symbol(sym, 1);
    for (double lam : {3.5, 4.0, 6.0}) {
      for (int degree = 0; degree <= 4; ++degree) {
        const auto rep = cartan::ball2_block(lam, psi, degree);
        char label[96];
        std::snprintf(label, sizeof(label), "ball2 psi=%s lambda=%g deg=%d spread", sym,
                      lam, degree);
        res.record(label, rep.diag_spread, 1e-8);
        std::snprintf(label, sizeof(label), "ball2 psi=%s lambda=%g deg=%d formula", sym,
                      lam, degree);
        res.record(label, rep.diag_vs_formula, 1e-6);
      }
    }
  }
  return res.failures == 0 ? 0 : kExitNumeric;
}

int suite_mc(std::uint64_t seed) {
  SuiteResult res;
  const std::vector<cartan::MonomialPair> pairs = {
      {{{1, 0}, {0, 1}}},
      {{{2, 0}, {1, 1}}},
      {{{1, 0}, {0, 0}}},
      {{{2, 1}, {0, 2}}},
  };
  const char* symbols[] = {"const:1", "det_power:1", "ball_indicator:0.5"};
  const double lambda = 4.0;
  int idx = 0;
  for (const char* sym : symbols) {
    const auto psi = cartan::parse_builtin(sym, 1);
    const auto ests = cartan::monte_carlo_offdiag_smoke(lambda, psi, pairs, 1000000,
                                                        seed + idx++);
    for (const auto& est : ests) {
      char label[96];
      std::snprintf(label, sizeof(label), "mc %s beta=(%d,%d) beta'=(%d,%d)", sym,
                    est.beta[0], est.beta[1], est.beta_prime[0], est.beta_prime[1]);
      const double mag = std::hypot(est.estimate_re, est.estimate_im);
      res.record(label, mag, 3.0 * est.std_error);
    }
  }
  return res.failures == 0 ? 0 : kExitNumeric;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  if (suite == "selberg") return suite_selberg();
  if (suite == "disk") return suite_disk();
  if (suite == "ball2") return suite_ball2();
  if (suite == "mc") return suite_mc(seed);
  if (suite == "all") {
    int rc = 0;
    rc = std::max(rc, suite_selberg());
    rc = std::max(rc, suite_disk());
    rc = std::max(rc, suite_ball2());
    rc = std::max(rc, suite_mc(seed));
    return rc;
  }
  std::fprintf(stderr, "error: unknown suite '%s' (selberg|disk|ball2|mc|all)\n",
               suite.c_str());
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalues of radial Toeplitz operators on weighted Bergman spaces "
               "over bounded symmetric domains.\n"
               "Symbol expressions are functions of the squared radial coordinates "
               "x1..xr."};
  app.require_subcommand(1);

  std::string domain_str, symbol_expr, builtin_ref, format = "csv", out_path, suite;
  double lambda = 0.0;
  int alpha_max = 5, nodes = 48, threads = 0;
  std::uint64_t seed = 12345;
  int sel_r = 1;
  double sel_a = 1.0, sel_b = 1.0, sel_g = 0.0;

  auto* info = app.add_subcommand("info", "Print the numeric invariants of a domain");
  info->add_option("domain", domain_str, "typeI:m,n | typeII:m | typeIII:n | typeIV:n | typeV | typeVI | custom:r,a,b")
      ->required();

  auto* eigs = app.add_subcommand("eigs", "Tabulate eigenvalues c_alpha(T_psi)");
  eigs->add_option("--domain", domain_str)->required();
  eigs->add_option("--lambda", lambda, "weight parameter, must exceed p-1")->required();
  eigs->add_option("--symbol", symbol_expr, "expression in x1..xr");
  eigs->add_option("--builtin", builtin_ref,
                   "const:c | power_sum:m | elementary:k | det_power:s | ball_indicator:c");
  eigs->add_option("--alpha-max", alpha_max, "largest signature part (default 5)");
  eigs->add_option("--nodes", nodes, "quadrature nodes per axis (default 48)");
  eigs->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  eigs->add_option("--out", out_path, "output file (default stdout)");
  eigs->add_option("--seed", seed);
  eigs->add_option("--threads", threads, "0 = CARTAN_SPECTRA_THREADS or serial");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "selberg | disk | ball2 | mc | all")->required();
  verify->add_option("--seed", seed);

  auto* selberg = app.add_subcommand("selberg", "Evaluate the Selberg closed form");
  selberg->add_option("--rank", sel_r)->required();
  selberg->add_option("--alpha0", sel_a)->required();
  selberg->add_option("--beta0", sel_b)->required();
  selberg->add_option("--gamma0", sel_g)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(domain_str);
    if (eigs->parsed())
      return cmd_eigs(domain_str, lambda, symbol_expr, builtin_ref, alpha_max, nodes,
                      format, out_path, threads);
    if (verify->parsed()) return cmd_verify(suite, seed);
    if (selberg->parsed()) return cmd_selberg(sel_r, sel_a, sel_b, sel_g);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
  return 0;
}
