#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fuzzyd/coefficients.hpp"
#include "fuzzyd/harmonics.hpp"
#include "fuzzyd/operators.hpp"

using namespace fuzzyd;

namespace {

const cd I(0.0, 1.0);

// Monte-Carlo oracle for a sphere integral of a monomial
double mc_moment(const Exponent& a, int D, int n, unsigned seed) {
  double s = 0;
  for (const auto& x : sphere_points(D, n, seed)) {
    double m = 1;
    for (int i = 0; i < D; ++i) m *= std::pow(x[i], a[i]);
    s += m;
  }
  return s / n * sphere_volume(D);
}

}  // namespace

TEST_CASE("sphere integrals") {
  CHECK(sphere_integral({0, 0, 0}, 3) == doctest::Approx(4 * M_PI).epsilon(1e-14));
  CHECK(sphere_integral({2, 0, 0}, 3) == doctest::Approx(4 * M_PI / 3).epsilon(1e-14));
  CHECK(sphere_integral({1, 2, 0}, 3) == 0.0);
  CHECK(sphere_volume(4) == doctest::Approx(2 * M_PI * M_PI).epsilon(1e-14));
  for (const Exponent& a : std::vector<Exponent>{{2, 2, 0, 0}, {4, 0, 2, 0}, {2, 2, 2, 2}}) {
    CHECK(sphere_integral(a, 4) == doctest::Approx(mc_moment(a, 4, 400000, 11u)).epsilon(2e-2));
    CHECK(moment_ratio(a, 4) * sphere_volume(4) == doctest::Approx(sphere_integral(a, 4)).epsilon(1e-13));
    CHECK(moment_ratio_exact(a, 4).get_d() == doctest::Approx(moment_ratio(a, 4)).epsilon(1e-15));
  }
}

TEST_CASE("basis examples") {
  const auto& b0 = harmonic_basis(3, 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].poly.terms.size() == 1);
  CHECK(b0[0].poly.terms.begin()->second.real() == doctest::Approx(1 / std::sqrt(4 * M_PI)).epsilon(1e-15));
  const HarmonicPolynomial& y10 = harmonic({1, 0}, 3);
  CHECK(y10.poly.terms.size() == 1);
  CHECK(y10.poly.terms.at({0, 0, 1}).real() == doctest::Approx(std::sqrt(3 / (4 * M_PI))).epsilon(1e-15));
  for (int D = 3; D <= 6; ++D)
    for (int l = 0; l <= 3; ++l) CHECK((long long)harmonic_basis(D, l).size() == irrep_dim(D, l));
  // classical Y_1^{+1} is proportional to t_1 + i t_2
  const HarmonicPolynomial& y11 = harmonic({1, 1}, 3);
  CHECK(std::abs(y11.poly.terms.at({0, 1, 0}) - I * y11.poly.terms.at({1, 0, 0})) <= 1e-15);
  CHECK_THROWS_AS(harmonic({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(harmonic({1, 0, 0}, 3), std::invalid_argument);
}

TEST_CASE("harmonic suite D = 3..5") {
  for (auto [D, lm] : std::vector<std::pair<int, int>>{{3, 5}, {4, 4}, {5, 3}}) {
    VerificationReport r = verify_harmonics(D, lm);
    INFO(r.to_text());
    CHECK(r.all_pass());
  }
}

TEST_CASE("R_h by ladder vs quadrature, selection rules") {
  PositionElements pe = position_matrix_elements(3, 3, 2);
  CHECK(std::abs(pe.ladder.at({{0, 0}, {1, 0}}) - 1 / std::sqrt(3.0)) <= 1e-15);
  CHECK(std::abs(pe.quadrature.at({{0, 0}, {1, 0}}) - 1 / std::sqrt(3.0)) <= 1e-15);
  CHECK(coeff_F(0, 0, 2) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
  for (int h = 1; h <= 4; ++h) {
    PositionElements p4 = position_matrix_elements(4, h, 4);
    CHECK(p4.max_discrepancy <= 1e-10);
    for (const auto& [k, v] : p4.quadrature) CHECK(std::abs(k.first[0] - k.second[0]) == 1);
  }
}

TEST_CASE("product expansion") {
  // zero chain times Y_b
  auto g = multiply_harmonics({0, 0, 0}, {2, 1, -1}, 4);
  REQUIRE(g.size() == 1);
  CHECK(std::abs(g.at({2, 1, -1}) - 1 / std::sqrt(sphere_volume(4))) <= 1e-14);
  // parity selection
  for (const auto& [c, v] : multiply_harmonics({1, 0}, {1, 0}, 3)) CHECK((c[0] == 0 || c[0] == 2));
  // Parseval and pointwise reconstruction
  for (int D = 3; D <= 5; ++D) {
    std::vector<Chain> cs;
    for (int l = 0; l <= 2; ++l)
      for (const auto& c : chains_with_top(D, l)) cs.push_back(c);
    std::mt19937 rng(5);
    for (int t = 0; t < 25; ++t) {
      const Chain& a = cs[rng() % cs.size()];
      const Chain& b = cs[rng() % cs.size()];
      ProductCheck pc = check_product(a, b, D);
      CHECK(pc.parseval <= 1e-9);
      CHECK(pc.pointwise <= 1e-9);
      CHECK(pc.remainder <= 1e-12);
    }
  }
}

TEST_CASE("harmonic decomposition reproduces r^2 factors") {
  Polynomial t3 = Polynomial::coordinate(3, 3);
  Polynomial p = times_r2(t3);
  double rem = 1;
  auto parts = harmonic_decomposition(p, &rem);
  CHECK(rem == 0.0);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].terms.empty());
  CHECK((parts[1] - t3).max_abs() <= 1e-15);
}

TEST_CASE("fuzzy harmonics") {
  FuzzyConfig cfg = make_config(3, 2, 100);
  FuzzyHarmonics fh(cfg);
  const double vol = sphere_volume(3);
  SparseOperator Y0 = fh.harmonic({0, 0});
  CHECK(max_abs_diff(Y0, SparseOperator::identity(fh.dim()) * cd(1 / std::sqrt(vol))) <= 1e-15);
  CHECK(max_abs_diff(fh.harmonic({1, 0}), build_position(cfg, 3) * cd(std::sqrt(3 / (4 * M_PI)))) <= 1e-15);
  CHECK_THROWS_AS(fh.harmonic({5, 0}), std::invalid_argument);
  // f = 1 and f = t_3
  CHECK(max_abs_diff(approximate_function({{{0, 0}, std::sqrt(vol)}}, cfg), SparseOperator::identity(fh.dim())) <= 1e-14);
  CHECK(max_abs_diff(approximate_function({{{1, 0}, std::sqrt(4 * M_PI / 3)}}, cfg), build_position(cfg, 3)) <= 1e-14);
  // linearity
  std::map<Chain, cd> f{{{2, 1}, 0.3}}, g{{{1, -1}, cd(0, 2)}}, fg{{{2, 1}, 0.3}, {{1, -1}, cd(0, 2)}};
  CHECK(max_abs_diff(fh.function(f) + fh.function(g), fh.function(fg)) <= 1e-14);
  // symmetrization: x1 x2 -> (x1 x2 + x2 x1)/2
  Eigen::MatrixXcd x1 = build_position(cfg, 1).dense(), x2 = build_position(cfg, 2).dense();
  CHECK((fh.symmetrized({1, 1, 0}) - (x1 * x2 + x2 * x1) / 2.0).cwiseAbs().maxCoeff() <= 1e-15);
  // conjugate pairing: Y_{l,-l1} = s conj(Y_{l,l1}) with |s| = 1 gives hat Y_{l,-l1} = s hat Y_{l,l1}^dagger
  for (int l1 = 1; l1 <= 2; ++l1) {
    const auto& a = harmonic({2, l1}, 3);
    const auto& b = harmonic({2, -l1}, 3);
    cd s = sphere_inner(conj(a.poly), b.poly);
    CHECK(std::abs(std::abs(s) - 1.0) <= 1e-12);
    CHECK(max_abs_diff(fh.harmonic({2, -l1}), s * fh.harmonic({2, l1}).adjoint()) <= 1e-13);
  }
}
