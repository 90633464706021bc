#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "cartan/special.hpp"
#include "cartan/symbol.hpp"
#include "cartan/verify.hpp"

using namespace cartan;
using doctest::Approx;

TEST_CASE("disk diagonal entries for the constant symbol") {
  const auto psi = builtin_symbol(BuiltinKind::Const, 1.0, 1);
  for (double lambda : {1.5, 2.0, 3.75}) {
    const auto diag = disk_diag(lambda, psi, 6);
    REQUIRE(diag.size() == 7);
    for (double v : diag) CHECK(v == Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("disk diagonal entries for psi = x1") {
  const auto psi = parse_symbol("x1", 1);
  for (double lambda : {2.0, 2.5, 5.0}) {
    const auto diag = disk_diag(lambda, psi, 8);
    for (int k = 0; k <= 8; ++k) {
      CAPTURE(lambda);
      CAPTURE(k);
      CHECK(diag[k] == Approx((k + 1.0) / (k + lambda)).epsilon(1e-10));
    }
  }
}

TEST_CASE("disk diagonal entries for the indicator match the incomplete beta") {
  // c = 1/2 sits on a panel boundary of the graded rule, so the composite
  // quadrature resolves the jump exactly
  const double lambda = 2.5, c = 0.5;
  const auto psi = builtin_symbol(BuiltinKind::BallIndicator, c, 1);
  const auto diag = disk_diag(lambda, psi, 6);
  for (int k = 0; k <= 6; ++k) {
    const double exact = reg_inc_beta(k + 1.0, lambda - 1.0, c);
    CAPTURE(k);
    CHECK(diag[k] == Approx(exact).epsilon(1e-10));
  }
}

TEST_CASE("disk diagonal input validation") {
  const auto psi = parse_symbol("x1", 1);
  CHECK_THROWS_AS(disk_diag(1.0, psi, 3), verify_error);
  CHECK_THROWS_AS(disk_diag(3.0, parse_symbol("x1 + x2", 2), 3), verify_error);
}

TEST_CASE("2-ball degree block agrees with the eigenvalue formula") {
  const auto psi = parse_symbol("x1", 1);
  for (double lambda : {3.5, 4.0}) {
    for (int degree : {0, 1, 3}) {
      const auto rep = ball2_block(lambda, psi, degree);
      CAPTURE(lambda);
      CAPTURE(degree);
      CHECK(rep.max_offdiag == 0.0);
      CHECK(rep.diag_spread < 1e-8);
      CHECK(rep.formula_value == Approx((degree + 2.0) / (degree + lambda)).epsilon(1e-12));
      CHECK(rep.diag_vs_formula < 1e-6);
    }
  }
}

TEST_CASE("2-ball block report serializes to json") {
  const auto psi = builtin_symbol(BuiltinKind::Const, 1.0, 1);
  const auto rep = ball2_block(4.0, psi, 1);
  const auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["degree"] == 1);
  CHECK(j["lambda"].get<double>() == Approx(4.0));
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0][0].get<double>() == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("2-ball block input validation") {
  const auto psi = parse_symbol("x1", 1);
  CHECK_THROWS_AS(ball2_block(2.0, psi, 1), verify_error);
  CHECK_THROWS_AS(ball2_block(4.0, psi, -1), verify_error);
  CHECK_THROWS_AS(ball2_block(4.0, parse_symbol("x1 + x2", 2), 1), verify_error);
}

TEST_CASE("monte carlo off-diagonal estimates are consistent with zero") {
  const auto psi = parse_symbol("x1", 1);
  const std::vector<MonomialPair> pairs = {
      MonomialPair{{{1, 0}, {0, 1}}},
      MonomialPair{{{2, 0}, {1, 1}}},
      MonomialPair{{{1, 1}, {2, 0}}},
  };
  const auto est = monte_carlo_offdiag_smoke(4.0, psi, pairs, 200000, 12345);
  REQUIRE(est.size() == pairs.size());
  for (const auto& e : est) {
    CHECK(e.std_error > 0.0);
    CHECK(std::fabs(e.estimate_re) <= 4.0 * e.std_error);
    CHECK(std::fabs(e.estimate_im) <= 4.0 * e.std_error);
  }
}

TEST_CASE("monte carlo runs are reproducible for a fixed seed") {
  const auto psi = builtin_symbol(BuiltinKind::Const, 1.0, 1);
  const std::vector<MonomialPair> pairs = {MonomialPair{{{1, 0}, {0, 1}}}};
  const auto a = monte_carlo_offdiag_smoke(3.5, psi, pairs, 50000, 777);
  const auto b = monte_carlo_offdiag_smoke(3.5, psi, pairs, 50000, 777);
  CHECK(a[0].estimate_re == b[0].estimate_re);
  CHECK(a[0].estimate_im == b[0].estimate_im);
  CHECK(a[0].std_error == b[0].std_error);
  const auto c = monte_carlo_offdiag_smoke(3.5, psi, pairs, 50000, 778);
  CHECK(a[0].estimate_re != c[0].estimate_re);
}

TEST_CASE("monte carlo input validation") {
  const auto psi = parse_symbol("x1", 1);
  CHECK_THROWS_AS(monte_carlo_offdiag_smoke(2.0, psi, {}, 10, 1), verify_error);
  CHECK_THROWS_AS(monte_carlo_offdiag_smoke(4.0, parse_symbol("x1 + x2", 2), {}, 10, 1),
                  verify_error);
}
