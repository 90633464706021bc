#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "cartan/special.hpp"
#include "cartan/spectrum.hpp"

using namespace cartan;
using doctest::Approx;

TEST_CASE("multi-index basics") {
  const MultiIndex a{{3, 1, 0}};
  CHECK(a.rank() == 3);
  CHECK(a.weight() == 4);
  CHECK(a.weakly_decreasing());
  CHECK(a.dashed() == "3-1-0");
  CHECK_FALSE(MultiIndex{{1, 2}}.weakly_decreasing());
}

TEST_CASE("signature enumeration count and order") {
  // count C(alpha_max + r, r)
  CHECK(enumerate_signatures(1, 5).size() == 6);
  CHECK(enumerate_signatures(2, 5).size() == 21);
  CHECK(enumerate_signatures(3, 5).size() == 56);
  CHECK(enumerate_signatures(3, 0).size() == 1);

  const auto sigs = enumerate_signatures(2, 2);
  REQUIRE(sigs.size() == 6);
  CHECK(sigs[0].parts == std::vector<int>{0, 0});
  CHECK(sigs[1].parts == std::vector<int>{1, 0});
  CHECK(sigs[2].parts == std::vector<int>{2, 0});
  CHECK(sigs[3].parts == std::vector<int>{1, 1});
  CHECK(sigs[4].parts == std::vector<int>{2, 1});
  CHECK(sigs[5].parts == std::vector<int>{2, 2});

  // graded order and no duplicates in a larger run
  const auto big = enumerate_signatures(3, 4);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < big.size(); ++i) {
    CHECK(big[i].weakly_decreasing());
    if (i) CHECK(big[i - 1].weight() <= big[i].weight());
    CHECK(seen.insert(big[i].parts).second);
  }
  CHECK_THROWS_AS(enumerate_signatures(0, 3), spectrum_error);
  CHECK_THROWS_AS(enumerate_signatures(2, -1), spectrum_error);
}

TEST_CASE("disk eigenvalues have the (k+1)/(k+lambda) closed form") {
  const auto disk = build_domain(DomainSpec::type_I(1, 1));
  const auto psi = parse_symbol("x1", 1);
  for (double lambda : {1.5, 2.0, 4.25}) {
    for (int k : {0, 1, 2, 5, 11}) {
      const auto rec = eigenvalue(disk, lambda, psi, MultiIndex{{k}}, 16);
      CAPTURE(lambda);
      CAPTURE(k);
      CHECK(rec.value == Approx((k + 1.0) / (k + lambda)).epsilon(1e-13));
      CHECK(rec.err_estimate < 1e-13);
    }
  }
}

TEST_CASE("n-ball eigenvalues have the (k+n)/(k+lambda) closed form") {
  for (int n : {2, 3, 5}) {
    const auto ball = build_domain(DomainSpec::type_I(1, n));
    const auto psi = parse_symbol("x1", 1);
    const double lambda = ball.p + 1.5;
    for (int k : {0, 1, 4}) {
      const auto rec = eigenvalue(ball, lambda, psi, MultiIndex{{k}}, 16);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(rec.value == Approx((k + n) / (k + lambda)).epsilon(1e-13));
    }
  }
}

TEST_CASE("constant symbol has unit eigenvalues everywhere") {
  const DomainSpec specs[] = {DomainSpec::type_I(2, 4), DomainSpec::type_III(3),
                              DomainSpec::type_V()};
  for (const auto& spec : specs) {
    const auto d = build_domain(spec);
    const auto psi = builtin_symbol(BuiltinKind::Const, 1.0, d.r);
    const auto sigs = enumerate_signatures(d.r, 2);
    for (const auto& alpha : sigs) {
      const auto rec = eigenvalue(d, d.p + 2.0, psi, alpha, 12);
      CHECK(rec.value == Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("det power shifts the signature in the density ratio") {
  // psi = prod x_j: c_alpha = D(alpha + 1)/D(alpha) with D the Selberg-type
  // denominator; check rectangular alpha against the closed form
  const auto d = build_domain(DomainSpec::type_I(2, 2));
  const double lambda = 6.5;
  const auto psi = builtin_symbol(BuiltinKind::DetPower, 1, 2);
  for (int m : {0, 1, 3}) {
    const auto rec = eigenvalue(d, lambda, psi, MultiIndex{{m, m}}, 16);
    const double num = selberg_integral_log(2, m + 2.0, lambda - d.p + 1.0, 1.0);
    const double den = selberg_integral_log(2, m + 1.0, lambda - d.p + 1.0, 1.0);
    CHECK(rec.value == Approx(std::exp(num - den)).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalues are linear in the symbol") {
  const auto d = build_domain(DomainSpec::type_II(5));
  const double lambda = d.p + 0.75;
  const auto p1 = parse_symbol("x1 + x2", 2);
  const auto p2 = parse_symbol("x1*x2", 2);
  const auto mix = parse_symbol("(x1 + x2) + 2*(x1*x2)", 2);
  const MultiIndex alpha{{2, 1}};
  const double c1 = eigenvalue(d, lambda, p1, alpha, 24).value;
  const double c2 = eigenvalue(d, lambda, p2, alpha, 24).value;
  const double cm = eigenvalue(d, lambda, mix, alpha, 24).value;
  CHECK(cm == Approx(c1 + 2.0 * c2).epsilon(1e-12));
}

TEST_CASE("bounded symbols give eigenvalues in [0,1]") {
  const auto d = build_domain(DomainSpec::type_I(2, 3));
  const auto psi = builtin_symbol(BuiltinKind::BallIndicator, 0.6, 2);
  for (const auto& alpha : enumerate_signatures(2, 3)) {
    const auto rec = eigenvalue(d, d.p + 1.0, psi, alpha, 128);
    CHECK(rec.value >= 0.0);
    CHECK(rec.value <= 1.0);
  }
}

TEST_CASE("disk indicator eigenvalues approach the incomplete beta form") {
  const auto disk = build_domain(DomainSpec::type_I(1, 1));
  const double lambda = 2.5, c = 0.5;
  const auto psi = builtin_symbol(BuiltinKind::BallIndicator, c, 1);
  for (int k : {0, 1, 3}) {
    const auto rec = eigenvalue(disk, lambda, psi, MultiIndex{{k}}, 4096);
    const double exact = reg_inc_beta(k + 1.0, lambda - 1.0, c);
    CAPTURE(k);
    CHECK(rec.value == Approx(exact).epsilon(5e-4));
  }
}

TEST_CASE("eigenvalue input validation") {
  const auto d = build_domain(DomainSpec::type_I(2, 2));
  const auto ok = builtin_symbol(BuiltinKind::PowerSum, 1, 2);
  CHECK_THROWS_AS(eigenvalue(d, 5.0, ok, MultiIndex{{1}}, 16), spectrum_error);
  CHECK_THROWS_AS(eigenvalue(d, 5.0, ok, MultiIndex{{1, 2}}, 16), spectrum_error);
  const auto bad_arity = builtin_symbol(BuiltinKind::PowerSum, 1, 3);
  CHECK_THROWS_AS(eigenvalue(d, 5.0, bad_arity, MultiIndex{{1, 0}}, 16), spectrum_error);
  const auto asym = parse_symbol("x1", 2);
  CHECK_THROWS_AS(eigenvalue(d, 5.0, asym, MultiIndex{{1, 0}}, 16), spectrum_error);
}

TEST_CASE("table is ordered, complete, and thread-count invariant") {
  const auto d = build_domain(DomainSpec::type_I(2, 3));
  const double lambda = d.p + 2.0;
  const auto psi = parse_symbol("x1 + x2", 2);
  const auto serial = eigenvalue_table(d, lambda, psi, 3, 16, 0);
  const auto sigs = enumerate_signatures(2, 3);
  REQUIRE(serial.size() == sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    CHECK(serial[i].alpha.parts == sigs[i].parts);

  const auto threaded = eigenvalue_table(d, lambda, psi, 3, 16, 4);
  REQUIRE(threaded.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(threaded[i].value == serial[i].value);
    CHECK(threaded[i].err_estimate == serial[i].err_estimate);
  }
}

TEST_CASE("rectangular denominator check is tiny") {
  // odd a goes through the ordered-region path (graded panels plus
  // incomplete-beta moments); even a is exact on the tensor grid
  const auto d = build_domain(DomainSpec::type_IV(5));
  CHECK(rectangular_denominator_check(d, d.p + 0.5, 2, 32) < 1e-10);
  const auto f = build_domain(DomainSpec::type_III(3));
  CHECK(rectangular_denominator_check(f, f.p + 0.5, 1, 32) < 1e-10);
  const auto e = build_domain(DomainSpec::type_VI());
  CHECK(rectangular_denominator_check(e, e.p + 1.0, 1, 32) < 1e-11);
}

TEST_CASE("csv serialization shape and escaping") {
  const auto d = build_domain(DomainSpec::type_I(1, 2));
  const auto psi = parse_symbol("x1", 1);
  const auto recs = eigenvalue_table(d, 4.0, psi, 2, 16, 0);
  const auto csv = records_csv(recs);
  CHECK(csv.rfind("family,r,a,b,n,p,lambda,alpha,symbol,value,nodes,err_estimate\n",
                  0) == 0);
  // typeI family names contain a comma and must be quoted
  CHECK(csv.find("\"typeI:1,2\"") != std::string::npos);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == static_cast<long>(recs.size()) + 1);
  // byte-identical regeneration
  CHECK(records_csv(eigenvalue_table(d, 4.0, psi, 2, 16, 0)) == csv);
}

TEST_CASE("json serialization round trips") {
  const auto d = build_domain(DomainSpec::type_III(2));
  const auto psi = builtin_symbol(BuiltinKind::PowerSum, 1, 2);
  const auto recs = eigenvalue_table(d, d.p + 1.0, psi, 1, 16, 0);
  const auto parsed = nlohmann::json::parse(records_json(recs));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == recs.size());
  CHECK(parsed[0]["family"] == "typeIII:2");
  CHECK(parsed[0]["alpha"] == "0-0");
  CHECK(parsed[0]["value"].get<double>() == Approx(recs[0].value).epsilon(1e-15));
  CHECK(parsed[0]["nodes"].get<int>() == recs[0].nodes);
}
