#include "fuzzyd/realization.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fuzzyd/coefficients.hpp"
#include "fuzzyd/ladder.hpp"
#include "fuzzyd/operators.hpp"

namespace fuzzyd {

namespace {

const cd I(0.0, 1.0);

}  // namespace

SparseOperator lambda_operator(const FuzzyConfig& cfg) {
  cfg.validate();
  const SparseOperator L2 = build_casimir(cfg, cfg.D);
  const double a = cfg.D - 2.0;
  std::vector<cd> diag(L2.dim());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = (2.0 - cfg.D + std::sqrt(a * a + 4.0 * L2.at(i, i).real())) / 2.0;
  return SparseOperator::diagonal(diag);
}

PSequence p_sequence(const FuzzyConfig& cfg) {
  cfg.validate();
  const int La = cfg.Lambda, D = cfg.D;
  PSequence ps;
  ps.values.assign(La + 1, cd(0));
  ps.values[0] = 1.0;
  for (int l = 0; l < La; ++l) {
    double w = c_coeff(l + 1, cfg) / d_coeff(La, l + 1, D + 1);
    ps.values[l + 1] = std::conj(I * w / ps.values[l]);
  }
  for (int l = 1; l <= La; ++l) {
    double w = c_coeff(l, cfg) / d_coeff(La, l, D + 1);
    ps.consistency = std::max(ps.consistency, std::abs(std::conj(ps.values[l - 1]) * ps.values[l] + I * w));
  }
  return ps;
}

SparseOperator p_operator(const FuzzyConfig& cfg, const PSequence& p) {
  BasisMap basis(cfg.D, cfg.Lambda);
  if ((int)p.values.size() != cfg.Lambda + 1) throw std::invalid_argument("p_operator: sequence length != Lambda+1");
  std::vector<cd> diag;
  for (const auto& c : basis.chains()) diag.push_back(p.values[c[0]]);
  return SparseOperator::diagonal(diag);
}

SparseOperator ambient_angular_momentum(const FuzzyConfig& cfg, int h, int j) {
  cfg.validate();
  if (h < 1 || h >= j || j > cfg.D + 1) throw std::invalid_argument("ambient_angular_momentum: need 1 <= h < j <= D+1");
  BasisMap basis(cfg.D, cfg.Lambda);
  const int La = cfg.Lambda;
  return operator_from_action(basis, [&](const Chain& c) {
    Chain big{La};
    big.insert(big.end(), c.begin(), c.end());
    std::vector<Transition> out;
    for (auto& [t, v] : L_action(big, h, j)) out.emplace_back(Chain(t.begin() + 1, t.end()), v);
    return out;
  });
}

SparseOperator ambient_casimir(const FuzzyConfig& cfg) {
  SparseOperator C(dimension(cfg.D, cfg.Lambda));
  for (int j = 2; j <= cfg.D + 1; ++j)
    for (int h = 1; h < j; ++h) {
      SparseOperator L = ambient_angular_momentum(cfg, h, j);
      C += L * L;
    }
  return C;
}

SparseOperator realize_position(const FuzzyConfig& cfg, int h, bool conjugate_left) {
  if (h < 1 || h > cfg.D) throw std::invalid_argument("realize_position: h out of range");
  const PSequence ps = p_sequence(cfg);
  const SparseOperator P = p_operator(cfg, ps);
  const SparseOperator L = ambient_angular_momentum(cfg, h, cfg.D + 1);
  return (conjugate_left ? P.adjoint() : P) * L * P;
}

VerificationReport verify_isomorphism(const FuzzyConfig& cfg, const IsomorphismTolerances& tol) {
  cfg.validate();
  VerificationReport rep;
  const int D = cfg.D, La = cfg.Lambda;
  const double inf = std::numeric_limits<double>::infinity();

  rep.add("dim H_{Lambda,D} = dim V_{Lambda,D+1}",
          std::abs(double(dimension(D, La)) - double(chains_with_top(D + 1, La).size())), 0.0);

  const PSequence ps = p_sequence(cfg);
  rep.add("p recursion forward/backward", ps.consistency, tol.p_consistency);

  const SparseOperator lam = lambda_operator(cfg);
  double lam_dev = 0;
  BasisMap basis(D, La);
  for (std::size_t i = 0; i < basis.size(); ++i) lam_dev = std::max(lam_dev, std::abs(lam.at(i, i) - double(basis.chain_at(i)[0])));
  rep.add("lambda = l on each level", lam_dev, 1e-12);

  const SparseOperator P = p_operator(cfg, ps);
  const SparseOperator par = build_parity(cfg);
  double pos = 0, pos_plain = 0, adj = 0, parity = 0, flip = 0;
  for (int h = 1; h <= D; ++h) {
    const SparseOperator x = build_position(cfg, h);
    const SparseOperator L = ambient_angular_momentum(cfg, h, D + 1);
    const SparseOperator phi = P.adjoint() * L * P;
    pos = std::max(pos, max_abs_diff(phi, x));
    pos_plain = std::max(pos_plain, max_abs_diff(P * L * P, x));
    adj = std::max(adj, max_abs_diff(phi.adjoint(), phi));
    flip = std::max(flip, max_abs_diff(P.adjoint() * (-1.0 * L) * P, -1.0 * x));
    parity = std::max(parity, max_abs_diff(par * phi * par, -1.0 * phi));
  }
  rep.add("p*(lambda) L_{h,D+1} p(lambda) = x_h", pos, tol.position);
  rep.add("p(lambda) L_{h,D+1} p(lambda) = x_h", pos_plain, inf, "unconjugated form, recorded only");
  rep.add("adjoint compatibility", adj, tol.adjoint);
  rep.add("negated L_{h,D+1} realizes -x_h", flip, tol.position);
  rep.add("parity conjugation flips realized x_h", parity, tol.adjoint);

  double gen = 0, gen_par = 0;
  for (int j = 2; j <= D; ++j)
    for (int h = 1; h < j; ++h) {
      const SparseOperator A = ambient_angular_momentum(cfg, h, j);
      const SparseOperator B = build_angular_momentum(cfg, h, j);
      gen = std::max(gen, max_abs_diff(A, B));
      gen_par = std::max(gen_par, max_abs_diff(par * A * par, A));
    }
  rep.add("L_{h,j} (j <= D) realized as themselves", gen, tol.generators);
  rep.add("parity fixes L_{h,j}", gen_par, tol.generators);

  const SparseOperator C = ambient_casimir(cfg);
  rep.add("C_{D+1} = Lambda(Lambda+D-1)",
          max_abs_diff(C, SparseOperator::identity(C.dim()) * cd(double(La) * (La + D - 1))), tol.casimir);
  return rep;
}

}  // namespace fuzzyd
