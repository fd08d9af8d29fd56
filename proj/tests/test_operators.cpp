#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

#include "fuzzyd/coefficients.hpp"
#include "fuzzyd/harmonics.hpp"
#include "fuzzyd/operators.hpp"

using namespace fuzzyd;

namespace {

const cd I(0.0, 1.0);

using Action = std::map<Chain, cd>;

// D = 4 coordinate actions written out term by term
Action x4_fixture(int l, int l2, int l1, const FuzzyConfig& c) {
  Action a;
  a[{l - 1, l2, l1}] += c_coeff(l, c) * coeff_G(l, l2, 3);
  a[{l + 1, l2, l1}] += c_coeff(l + 1, c) * coeff_F(l, l2, 3);
  return a;
}

Action x3_fixture(int l, int l2, int l1, const FuzzyConfig& c) {
  Action a;
  double cl = c_coeff(l, c), cu = c_coeff(l + 1, c);
  a[{l - 1, l2 - 1, l1}] += cl * coeff_D(l, l2, 3) * coeff_G(l2, l1, 2);
  a[{l - 1, l2 + 1, l1}] += cl * coeff_B(l, l2, 3) * coeff_F(l2, l1, 2);
  a[{l + 1, l2 - 1, l1}] += cu * coeff_C(l, l2, 3) * coeff_G(l2, l1, 2);
  a[{l + 1, l2 + 1, l1}] += cu * coeff_A(l, l2, 3) * coeff_F(l2, l1, 2);
  return a;
}

Action xplus_fixture(int l, int l2, int l1, const FuzzyConfig& c) {
  Action a;
  double cl = c_coeff(l, c), cu = c_coeff(l + 1, c);
  a[{l - 1, l2 - 1, l1 + 1}] += cl * coeff_D(l, l2, 3) * coeff_B(l2, l1, 2);
  a[{l - 1, l2 + 1, l1 + 1}] += cl * coeff_B(l, l2, 3) * coeff_A(l2, l1, 2);
  a[{l + 1, l2 - 1, l1 + 1}] += cu * coeff_C(l, l2, 3) * coeff_B(l2, l1, 2);
  a[{l + 1, l2 + 1, l1 + 1}] += cu * coeff_A(l, l2, 3) * coeff_A(l2, l1, 2);
  return a;
}

Action xminus_fixture(int l, int l2, int l1, const FuzzyConfig& c) {
  Action a;
  double cl = c_coeff(l, c), cu = c_coeff(l + 1, c);
  a[{l - 1, l2 - 1, l1 - 1}] += cl * coeff_D(l, l2, 3) * coeff_D(l2, l1, 2);
  a[{l - 1, l2 + 1, l1 - 1}] += cl * coeff_B(l, l2, 3) * coeff_C(l2, l1, 2);
  a[{l + 1, l2 - 1, l1 - 1}] += cu * coeff_C(l, l2, 3) * coeff_D(l2, l1, 2);
  a[{l + 1, l2 + 1, l1 - 1}] += cu * coeff_A(l, l2, 3) * coeff_C(l2, l1, 2);
  return a;
}

// L_{2,4} - i L_{1,4}; the overall sign is the one fixed by the so(4) brackets
Action Lplus_fixture(int l, int l2, int l1) {
  Action a;
  a[{l, l2 - 1, l1 + 1}] += d_coeff(l, l2, 4) * coeff_B(l2, l1, 2);
  a[{l, l2 + 1, l1 + 1}] += -d_coeff(l, l2 + 1, 4) * coeff_A(l2, l1, 2);
  return a;
}

template <class F>
double fixture_deviation(const SparseOperator& op, const BasisMap& b, F f) {
  double dev = 0;
  for (std::size_t col = 0; col < b.size(); ++col) {
    const Chain& c = b.chain_at(col);
    Action want;
    for (auto& [t, v] : f(c[0], c[1], c[2]))
      if (b.contains(t) && v != 0.0) want[t] += v;
    for (std::size_t row = 0; row < b.size(); ++row) {
      auto it = want.find(b.chain_at(row));
      dev = std::max(dev, std::abs(op.at(row, col) - (it == want.end() ? cd(0) : it->second)));
    }
  }
  return dev;
}

}  // namespace

TEST_CASE("D = 4 coordinate actions") {
  FuzzyConfig cfg = make_config(4, 3, 400);
  BasisMap b(4, 3);
  CHECK(fixture_deviation(build_position(cfg, 4), b, [&](int l, int l2, int l1) { return x4_fixture(l, l2, l1, cfg); }) <= 1e-15);
  CHECK(fixture_deviation(build_position(cfg, 3), b, [&](int l, int l2, int l1) { return x3_fixture(l, l2, l1, cfg); }) <= 1e-15);
  CHECK(fixture_deviation(build_position_pm(cfg, +1), b, [&](int l, int l2, int l1) { return xplus_fixture(l, l2, l1, cfg); }) <= 1e-15);
  CHECK(fixture_deviation(build_position_pm(cfg, -1), b, [&](int l, int l2, int l1) { return xminus_fixture(l, l2, l1, cfg); }) <= 1e-15);
  CHECK(fixture_deviation(build_L_pm(cfg, 4, +1), b, [&](int l, int l2, int l1) { return Lplus_fixture(l, l2, l1); }) <= 1e-14);
  // <psi_{1,0,0}| x_4 |psi_{0,0,0}> = c_1 F(0,0,3) = c_1 / 2
  CHECK(build_position(cfg, 4).at(b.index_of({1, 0, 0}), 0).real() == doctest::Approx(c_coeff(1, cfg) / 2).epsilon(1e-15));
}

TEST_CASE("coordinates equal c times sphere integrals of t_h between harmonics") {
  for (int D : {3, 4, 5}) {
    const int La = 3;
    FuzzyConfig cfg = make_config(D, La, 1e3);
    BasisMap b(D, La);
    for (int h = 1; h <= D; ++h) {
      PositionElements pe = position_matrix_elements(D, h, La);
      SparseOperator x = build_position(cfg, h);
      double dev = 0;
      for (std::size_t col = 0; col < b.size(); ++col)
        for (std::size_t row = 0; row < b.size(); ++row) {
          const Chain &s = b.chain_at(col), &t = b.chain_at(row);
          auto it = pe.quadrature.find({s, t});
          cd q = it == pe.quadrature.end() ? cd(0) : it->second;
          double c = t[0] > s[0] ? c_coeff(t[0], cfg) : c_coeff(s[0], cfg);
          dev = std::max(dev, std::abs(x.at(row, col) - c * q));
        }
      CHECK(dev <= 1e-12);
    }
  }
}

TEST_CASE("angular momentum basics") {
  FuzzyConfig cfg = make_config(4, 2, 64);
  BasisMap b(4, 2);
  SparseOperator L12 = build_angular_momentum(cfg, 1, 2);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(L12.at(i, i) == cd(b.chain_at(i).back()));
  CHECK(max_abs_diff(build_angular_momentum(cfg, 4, 2), -1.0 * build_angular_momentum(cfg, 2, 4)) == 0.0);
  CHECK_THROWS_AS(build_angular_momentum(cfg, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_angular_momentum(cfg, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_position(cfg, 5), std::invalid_argument);
  // L^2 spectrum l(l+2) with multiplicities 1, 4, 9
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(build_casimir(cfg, 4).dense());
  std::map<long, int> mult;
  for (int i = 0; i < es.eigenvalues().size(); ++i) mult[std::lround(es.eigenvalues()(i))]++;
  CHECK(mult == std::map<long, int>{{0, 1}, {3, 4}, {8, 9}});
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Chain& c = b.chain_at(i);
    CHECK(build_casimir(cfg, 3).at(i, i).real() == doctest::Approx(c[1] * (c[1] + 1)));
    CHECK(build_casimir(cfg, 2).at(i, i).real() == doctest::Approx(c[2] * c[2]));
  }
}

TEST_CASE("projectors") {
  FuzzyConfig cfg = make_config(5, 3, 1e3);
  SparseOperator P = build_top_projector(cfg);
  CHECK(P * P == P);
  CHECK(std::abs(P.dense().trace() - double(irrep_dim(5, 3))) < 1e-12);
  for (int p = 2; p <= 5; ++p)
    for (int m = 0; m <= 3; ++m) {
      SparseOperator Q = build_casimir_projector(cfg, p, m);
      CHECK(max_abs_diff(Q * Q, Q) == 0.0);
      for (int j = 2; j <= 5; ++j)
        for (int h = 1; h < j; ++h)
          if (j <= p) CHECK(commutator(Q, build_angular_momentum(cfg, h, j)).max_abs() <= 1e-13);
      CHECK(max_abs_diff(build_casimir_projector_by_value(cfg, p, m * (m + p - 2.0)), Q) == 0.0);
    }
  CHECK_THROWS_AS(build_casimir_projector(cfg, 3, 4), std::invalid_argument);
}

TEST_CASE("full algebra verification") {
  for (auto [D, La] : std::vector<std::pair<int, int>>{{3, 4}, {4, 2}, {4, 3}, {5, 2}, {6, 2}, {3, 1}, {4, 0}}) {
    double k = std::max(1.0, std::pow(double(La) * (La + D - 2), 2));
    VerificationReport r = verify_algebra(make_config(D, La, k));
    INFO(r.to_text());
    CHECK(r.all_pass());
    // larger k as well
    CHECK(verify_algebra(make_config(D, La, 50 * k)).all_pass());
  }
}

TEST_CASE("x^2 expected values") {
  FuzzyConfig cfg = make_config(4, 2, 64);
  SparseOperator X2(dimension(4, 2));
  for (int h = 1; h <= 4; ++h) X2 += build_position(cfg, h) * build_position(cfg, h);
  BasisMap b(4, 2);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(std::abs(X2.at(i, i) - x2_expected(b.chain_at(i)[0], cfg)) <= 1e-12);
  double top = std::pow(c_coeff(2, cfg), 2) * 2 / (2 * 2 + 4 - 2.0);
  CHECK(x2_expected(2, cfg) == doctest::Approx(top).epsilon(1e-15));
}

TEST_CASE("nilpotency at Lambda = 1") {
  FuzzyConfig cfg = make_config(4, 1, 9);
  CHECK(power(build_position_pm(cfg, +1), 3).max_abs() <= 1e-12);
  CHECK(power(build_position_pm(cfg, -1), 3).max_abs() <= 1e-12);
  CHECK(power(build_position_pm(cfg, +1), 2).max_abs() > 0.1);
}

TEST_CASE("parity") {
  FuzzyConfig cfg = make_config(4, 3, 400);
  SparseOperator P = build_parity(cfg);
  for (int h = 1; h <= 4; ++h) CHECK(max_abs_diff(P * build_position(cfg, h) * P, -1.0 * build_position(cfg, h)) == 0.0);
  CHECK(max_abs_diff(P * build_angular_momentum(cfg, 2, 4) * P, build_angular_momentum(cfg, 2, 4)) == 0.0);
}

TEST_CASE("Lambda = 0 is the one-state algebra") {
  FuzzyConfig cfg = make_config(3, 0, 1);
  CHECK(dimension(3, 0) == 1);
  for (int h = 1; h <= 3; ++h) CHECK(build_position(cfg, h).nnz() == 0);
}
