#pragma once

#include <vector>

#include "fuzzyd/basis.hpp"
#include "fuzzyd/report.hpp"
#include "fuzzyd/sparse.hpp"

namespace fuzzyd {

// lambda = (2 - D + sqrt((D-2)^2 + 4 L^2)) / 2, evaluated on the L^2 diagonal
SparseOperator lambda_operator(const FuzzyConfig& cfg);

// p(0..Lambda), p(0) = 1, p(l+1) = conj(i c_{l+1} / (d(Lambda, l+1, D+1) p(l))).
// The phase i (rather than 1/i) follows from the L_{h,j} sign convention of
// L_action; the modulus is convention independent.
struct PSequence {
  std::vector<cd> values;
  // max_l |conj(p(l-1)) p(l) + i c_l / d(Lambda, l, D+1)|: the lowering relation
  double consistency = 0;
};
PSequence p_sequence(const FuzzyConfig& cfg);

// diagonal with entry p(l) on level l
SparseOperator p_operator(const FuzzyConfig& cfg, const PSequence& p);

// L_{h,j}, 1 <= h < j <= D+1, of the so(D+1) irrep with top index Lambda,
// written in the basis of H_{Lambda,D} (the frozen Lambda is dropped)
SparseOperator ambient_angular_momentum(const FuzzyConfig& cfg, int h, int j);
// sum_{h<j<=D+1} L_{h,j}^2 of the ambient irrep
SparseOperator ambient_casimir(const FuzzyConfig& cfg);

// p*(lambda) L_{h,D+1} p(lambda); with conjugate_left = false, p L p
SparseOperator realize_position(const FuzzyConfig& cfg, int h, bool conjugate_left = true);

struct IsomorphismTolerances {
  double position = 1e-10;
  double adjoint = 1e-12;
  double p_consistency = 1e-13;
  double generators = 1e-14;
  double casimir = 1e-12;
};

VerificationReport verify_isomorphism(const FuzzyConfig& cfg, const IsomorphismTolerances& tol = {});

}  // namespace fuzzyd
