#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>
#include <json.hpp>

#include "fuzzyd/basis.hpp"
#include "fuzzyd/polynomial.hpp"
#include "fuzzyd/report.hpp"
#include "fuzzyd/sparse.hpp"

namespace fuzzyd {

struct GaussRational {
  mpq_class re, im;
};
using ExactPolynomial = std::map<Exponent, GaussRational>;

struct HarmonicPolynomial {
  Chain chain;
  int D = 0;
  int degree = 0;
  Polynomial poly;          // unit norm on S^{D-1}
  ExactPolynomial exact;    // same harmonic up to a positive rational scale
  mpq_class norm_ratio;     // |exact|^2 = sphere_volume(D) * norm_ratio

  nlohmann::json to_json() const;
};

// One unit-norm harmonic per chain with l_d = l, in canonical chain order.
// Built by exact kernel refinement: sector L_12 = l_1, ker Laplacian, then
// eigenspaces of C_{D-1}, ..., C_3. Each sign is fixed so that the overlap
// with the parent chain (top block lowered by one) reached by t_{m+1},
// t_1 + i t_2 or t_1 - i t_2 has the sign of the ladder product (F A..A > 0,
// A..A > 0, C A..A < 0 respectively). Cached, thread safe.
const std::vector<HarmonicPolynomial>& harmonic_basis(int D, int l);
const HarmonicPolynomial& harmonic(const Chain& c, int D);

ExactPolynomial exact_laplacian(const ExactPolynomial& p, int D);

// exact sphere moment ratio, see moment_ratio
mpq_class moment_ratio_exact(const Exponent& a, int D);

// <Y_target, t_h Y_source> keyed by (source, target)
using ChainPairMap = std::map<std::pair<Chain, Chain>, cd>;

struct PositionElements {
  ChainPairMap ladder;      // recursion on chains
  ChainPairMap quadrature;  // polynomial product integrated exactly on the sphere
  double max_discrepancy = 0;
};

// sources with l_d <= l_max, targets up to l_max + 1
PositionElements position_matrix_elements(int D, int h, int l_max);

// Y_a Y_b = sum_c gamma_c Y_c
std::map<Chain, cd> multiply_harmonics(const Chain& a, const Chain& b, int D);

struct ProductCheck {
  double parseval = 0;    // |sum |gamma|^2 - int |Y_a Y_b|^2|
  double pointwise = 0;   // max over sample points
  double remainder = 0;   // leftover of the r^2 division
};
ProductCheck check_product(const Chain& a, const Chain& b, int D, int points = 200, unsigned seed = 20240611u);

// uniformly distributed points on S^{D-1}
std::vector<std::vector<double>> sphere_points(int D, int n, unsigned seed);

struct HarmonicTolerances {
  double gram = 1e-10;
  double csco = 1e-12;
  double position = 1e-10;
};

VerificationReport verify_harmonics(int D, int l_max, const HarmonicTolerances& tol = {});

// Symmetrized substitution t^alpha -> mean over distinct orderings of the
// word x^alpha, with the coordinates of one configuration. Caches words.
class FuzzyHarmonics {
 public:
  explicit FuzzyHarmonics(const FuzzyConfig& cfg);

  const FuzzyConfig& config() const { return cfg_; }
  std::size_t dim() const { return n_; }

  const Eigen::MatrixXcd& symmetrized(const Exponent& a);
  Eigen::MatrixXcd polynomial(const Polynomial& p);
  // throws std::invalid_argument when l_d > 2 Lambda
  SparseOperator harmonic(const Chain& c);
  SparseOperator function(const std::map<Chain, cd>& coeffs);

 private:
  const Eigen::MatrixXcd& word_sum(const Exponent& a);

  FuzzyConfig cfg_;
  std::size_t n_;
  std::vector<Eigen::MatrixXcd> x_;
  std::map<Exponent, Eigen::MatrixXcd> words_;
  std::map<Exponent, Eigen::MatrixXcd> sym_;
};

SparseOperator build_fuzzy_harmonic(const Chain& c, const FuzzyConfig& cfg);
SparseOperator approximate_function(const std::map<Chain, cd>& coeffs, const FuzzyConfig& cfg);

}  // namespace fuzzyd
