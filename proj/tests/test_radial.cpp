#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fuzzyd/coefficients.hpp"
#include "fuzzyd/radial.hpp"

using namespace fuzzyd;

namespace {

std::vector<double> k_grid() { return {1e3, 1e4, 1e5, 1e6, 1e7}; }

}  // namespace

TEST_CASE("radial parameters") {
  for (int D = 3; D <= 6; ++D)
    for (double k : {100.0, 1e4}) {
      FuzzyConfig cfg = make_config(D, 2, k);
      CHECK(std::abs(radial_params(0, cfg).E0l) <= 1e-12 * std::sqrt(k));
      for (int l = 0; l <= 2; ++l) {
        RadialParams p = radial_params(l, cfg);
        CHECK(p.k_lD == doctest::Approx(3 * b_value(l, D) + 2 * k));
        CHECK(p.M == doctest::Approx(std::pow(p.k_lD, 0.125) / std::pow(M_PI, 0.25)));
        CHECK(p.r_tilde > 0);
      }
    }
}

TEST_CASE("E_{0,l} approaches l(l+D-2) like 1/sqrt k") {
  for (int D = 3; D <= 5; ++D)
    for (int l = 1; l <= 3; ++l) {
      double C = 0;
      std::vector<double> ks, errs;
      for (double k : {1e2, 1e3, 1e4, 1e5, 1e6, 1e7}) {
        FuzzyConfig cfg = make_config(D, 3, k);
        double e = std::abs(radial_params(l, cfg).E0l - l * (l + D - 2.0));
        C = std::max(C, e * std::sqrt(k));
        // slope fitted on the asymptotic range; k <= 1e3 is still pre-asymptotic
        if (k < 1e4) continue;
        ks.push_back(k);
        errs.push_back(e);
      }
      CHECK(C < 100.0);
      CHECK(loglog_slope(ks, errs) <= -0.45);
    }
}

TEST_CASE("wavefunction normalization and peak") {
  for (int D = 3; D <= 5; ++D)
    for (double k : {100.0, 1e4}) {
      FuzzyConfig cfg = make_config(D, 2, k);
      for (int l = 0; l <= 2; ++l) {
        // g is normalized on the whole line; the half-line misses the r < 0 tail
        RadialParams q = radial_params(l, cfg);
        double tail = 0.5 * std::erfc(q.r_tilde * std::pow(q.k_lD, 0.25));
        CHECK(std::abs(radial_norm(l, cfg) - (1.0 - tail)) <= 1e-12);
        // independent check on g directly
        auto g = radial_g(l, cfg);
        RadialParams p = radial_params(l, cfg);
        double w = 40.0 / std::pow(k, 0.25);
        double n = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double r) { return g(r) * g(r); }, p.r_tilde - w, p.r_tilde + w, 15, 1e-14);
        CHECK(std::abs(n - 1.0) <= 1e-8);
        CHECK(g(p.r_tilde) > g(p.r_tilde + 1e-3));
        CHECK(g(p.r_tilde) > g(p.r_tilde - 1e-3));
        auto f = radial_wavefunction(l, cfg);
        CHECK(f(1.1) == doctest::Approx(g(1.1) / std::pow(1.1, (D - 1) / 2.0)));
      }
    }
}

TEST_CASE("Gauss-Hermite rule integrates moments exactly") {
  const GaussHermite& gh = gauss_hermite(200);
  double m0 = 0, m2 = 0, m4 = 0;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    double x = gh.nodes[i];
    m0 += gh.weights[i];
    m2 += gh.weights[i] * x * x;
    m4 += gh.weights[i] * x * x * x * x;
  }
  CHECK(m0 == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));
  CHECK(m4 == doctest::Approx(3 * std::sqrt(M_PI) / 4).epsilon(1e-13));
}

TEST_CASE("overlaps agree with the truncated closed forms at O(k^{-3/2})") {
  for (int D = 3; D <= 5; ++D)
    for (int l = 0; l <= 2; ++l) {
      std::vector<double> ks = k_grid(), er, eu;
      for (double k : ks) {
        FuzzyConfig cfg = make_config(D, 3, k);
        er.push_back(radial_overlap(l, l + 1, cfg, RadialWeight::r) - radial_overlap_leading(l, l + 1, cfg, RadialWeight::r));
        eu.push_back(radial_overlap(l, l + 1, cfg, RadialWeight::unit) - 1.0);
        // oracle vs canonical c
        if (k >= 1e5) {
          double c = c_coeff(l + 1, cfg);
          CHECK(std::abs(radial_overlap(l, l + 1, cfg, RadialWeight::r) - c) / c <= 1e-3 / std::sqrt(k));
        }
      }
      CHECK(loglog_slope(ks, er) <= -1.45);
      CHECK(loglog_slope(ks, eu) <= -1.45);
    }
}

TEST_CASE("overlap preconditions and symmetry") {
  FuzzyConfig cfg = make_config(4, 2, 1e4);
  CHECK_THROWS_AS(radial_overlap(1, 1, cfg, RadialWeight::r), std::domain_error);
  CHECK_THROWS_AS(radial_overlap(0, 2, cfg, RadialWeight::r), std::domain_error);
  CHECK_THROWS_AS(radial_overlap(2, 3, cfg, RadialWeight::r), std::domain_error);
  CHECK(radial_overlap(1, 2, cfg, RadialWeight::r) == doctest::Approx(radial_overlap(2, 1, cfg, RadialWeight::r)).epsilon(1e-14));
  // 200 and 100 nodes agree: the rule has converged
  CHECK(std::abs(radial_overlap(1, 2, cfg, RadialWeight::r, 100) - radial_overlap(1, 2, cfg, RadialWeight::r)) <= 1e-13);
}

TEST_CASE("loglog slope") {
  std::vector<double> x{1, 10, 100}, y{1, 1e-3, 1e-6};
  CHECK(loglog_slope(x, y) == doctest::Approx(-3.0));
}
