#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fuzzyd/coefficients.hpp"
#include "fuzzyd/convergence.hpp"
#include "fuzzyd/harmonics.hpp"

using namespace fuzzyd;

TEST_CASE("schedules") {
  CHECK(k_schedule("consistency", 4, 2) == 64.0);
  CHECK(k_schedule("strong-x", 4, 1) == doctest::Approx(93.75).epsilon(1e-15));
  CHECK(k_schedule("power:3", 3, 2) == doctest::Approx(std::pow(6.0, 3)).epsilon(1e-14));
  CHECK(k_schedule("power(2)", 4, 2) == doctest::Approx(64.0).epsilon(1e-14));
  // L^2 dim(2L)^3 ((2L)!)^D 2^{LD} ((2L+1)!!)^{2D} b(L) sqrt(dim L) at D = 3, L = 1
  double want = 1.0 * std::pow(9.0, 3) * std::pow(2.0, 3) * std::pow(2.0, 3) * std::pow(3.0, 6) * 2.0 * 2.0;
  CHECK(k_schedule("product", 3, 1) == doctest::Approx(want).epsilon(1e-12));
  CHECK(std::isfinite(log_k_schedule(parse_schedule("product"), 6, 8)));
  CHECK_THROWS_AS(parse_schedule("power:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_schedule("power:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_schedule("linear"), std::invalid_argument);
  CHECK(parse_schedule("power:2.5").name() == "power:2.5");
  for (const char* s : {"consistency", "strong-x", "product", "power:2.5"})
    for (int D = 3; D <= 6; ++D)
      for (int L = 1; L <= 6; ++L) {
        double k = k_schedule(s, D, L);
        CHECK(k_schedule(s, D, L + 1) > k);
        CHECK_NOTHROW(make_config(D, L, k * 1.0000001));
        CHECK(double(L) * (L + D - 2) <= 2 * std::sqrt(2 * k) + 1e-9);
      }
}

TEST_CASE("x diagnostic decreases and respects the bound") {
  auto rows = x_convergence_diagnostic(3, {1, 2, 3, 4, 5, 6}, parse_schedule("strong-x"));
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].deviation < rows[i - 1].deviation);
  CHECK(rows.back().deviation <= 0.05);
  for (const auto& r : rows) CHECK(r.deviation <= r.bound);
  auto cons = x_convergence_diagnostic(4, {1, 2, 3, 4}, parse_schedule("consistency"));
  for (std::size_t i = 1; i < cons.size(); ++i) CHECK(cons[i].deviation < cons[i - 1].deviation);
}

TEST_CASE("monotone in k at fixed Lambda, interior vanishes with k") {
  for (int D = 3; D <= 4; ++D) {
    double prev = 1e9, prev_int = 1e9;
    for (double k : {1e2, 1e3, 1e4}) {
      XDiagnosticRow r = x_diagnostic(make_config(D, 3, k));
      CHECK(r.deviation <= prev);
      CHECK(r.interior <= prev_int);
      prev = r.deviation;
      prev_int = r.interior;
    }
    CHECK(x_diagnostic(make_config(D, 3, 1e12)).interior <= 1e-10);
  }
}

TEST_CASE("boundary blocks carry the l = Lambda-1 <-> Lambda part") {
  XDiagnosticRow r = x_diagnostic(make_config(3, 1, 32));
  CHECK(r.interior == 0.0);
  CHECK(r.boundary == doctest::Approx(r.deviation).epsilon(1e-14));
}

TEST_CASE("product diagnostic") {
  HarmonicCoeffs t3 = coordinate_coeffs(3, 3);
  REQUIRE(t3.size() == 1);
  CHECK(std::abs(t3.at({1, 0}) - std::sqrt(4 * M_PI / 3)) <= 1e-14);
  auto rows = product_convergence_diagnostic(t3, t3, 3, {1, 2, 3, 4, 5, 6}, parse_schedule("strong-x"));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].product_residual < rows[i - 1].product_residual);
    CHECK(rows[i].f_residual < rows[i - 1].f_residual);
  }
  for (const auto& r : rows) CHECK(r.f_op_norm <= r.f_bound);
  // constants multiply exactly
  HarmonicCoeffs one{{{0, 0}, std::sqrt(sphere_volume(3))}};
  for (const auto& r : product_convergence_diagnostic(one, one, 3, {1, 2, 3}, parse_schedule("consistency"))) {
    CHECK(r.product_residual <= 1e-13);
    CHECK(r.f_residual <= 1e-13);
  }
}

TEST_CASE("CSV layout") {
  auto rows = x_convergence_diagnostic(3, {1, 2}, parse_schedule("consistency"));
  std::istringstream is(to_csv(rows));
  std::string line;
  std::getline(is, line);
  CHECK(line == "D,Lambda,k,metric,value");
  int n = 0;
  while (std::getline(is, line)) ++n;
  CHECK(n == 8);
}
