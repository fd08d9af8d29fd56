#pragma once

#include <functional>
#include <vector>

#include "fuzzyd/basis.hpp"
#include "fuzzyd/ladder.hpp"
#include "fuzzyd/report.hpp"
#include "fuzzyd/sparse.hpp"

namespace fuzzyd {

// Operator on basis from a per-chain action; column = source, row = target.
// Targets outside the basis are discarded.
SparseOperator operator_from_action(const BasisMap& basis,
                                    const std::function<std::vector<Transition>(const Chain&)>& action);

// L_{h,j}, 1 <= h, j <= D, h != j; L_{h,j} with h > j is -L_{j,h}
SparseOperator build_angular_momentum(const FuzzyConfig& cfg, int h, int j);

// projected coordinate x_h: l -> l+1 weighted by c_{l+1}, l -> l-1 by c_l
SparseOperator build_position(const FuzzyConfig& cfg, int h);

// multiplication by t_h compressed to levels <= Lambda (all c set to 1)
SparseOperator build_multiplication(const FuzzyConfig& cfg, int h);

// x_1 + sign i x_2, divided by sqrt 2 when requested
SparseOperator build_position_pm(const FuzzyConfig& cfg, int sign, bool sqrt2 = false);

// L_{2,nu} - sign i L_{1,nu}, divided by sqrt 2 when requested
SparseOperator build_L_pm(const FuzzyConfig& cfg, int nu, int sign, bool sqrt2 = false);

// C_p = sum_{h<j<=p} L_{h,j}^2, 2 <= p <= D; C_D is L^2
SparseOperator build_casimir(const FuzzyConfig& cfg, int p);

// P_Lambda: projector on the top level l = Lambda
SparseOperator build_top_projector(const FuzzyConfig& cfg);

// projector on the eigenspace of C_p with label l_{p-1} = m (for p = 2, |l_1| = m).
// throws std::invalid_argument when no chain carries that label
SparseOperator build_casimir_projector(const FuzzyConfig& cfg, int p, int m);
// same, selected by eigenvalue m(m+p-2)
SparseOperator build_casimir_projector_by_value(const FuzzyConfig& cfg, int p, double value);

// diag((-1)^l)
SparseOperator build_parity(const FuzzyConfig& cfg);

// all generators and coordinates of one build
struct Algebra {
  FuzzyConfig cfg;
  BasisMap basis;
  std::vector<std::vector<SparseOperator>> L;  // L[h][j], 1-based, antisymmetric, zero diagonal
  std::vector<SparseOperator> x;               // x[h], 1-based

  const SparseOperator& Lhj(int h, int j) const { return L.at(h).at(j); }
};

Algebra build_algebra(const FuzzyConfig& cfg);

struct AlgebraTolerances {
  double structure = 1e-12;
  double snyder_interior = 1e-13;
  double snyder = 1e-12;
  double covariance = 1e-12;
  double hermitian = 1e-13;
  double x2 = 1e-12;
  double casimir = 1e-12;
  double minimal_poly = 1e-10;
  double nilpotency = 1e-9;
};

// Commutator checks use the i-convention
//   [x_h, x_j] = i(-I/k + (1/k + c_Lambda^2/(2 Lambda+D-2)) P_Lambda) L_{h,j},
// and x_pm = x_1 +- i x_2 without 1/sqrt 2.
VerificationReport verify_algebra(const FuzzyConfig& cfg, const AlgebraTolerances& tol = {});
VerificationReport verify_algebra(const Algebra& alg, const AlgebraTolerances& tol = {});

// expected diagonal of sum_h x_h^2 on level l
double x2_expected(int l, const FuzzyConfig& cfg);

}  // namespace fuzzyd
