#include "fuzzyd/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fuzzyd/coefficients.hpp"

namespace fuzzyd {

namespace {

const cd I(0.0, 1.0);

void check_index(const FuzzyConfig& cfg, int h) {
  if (h < 1 || h > cfg.D) throw std::invalid_argument("operator index out of range 1..D");
}

SparseOperator coordinate(const FuzzyConfig& cfg, int h, bool unit_c) {
  cfg.validate();
  check_index(cfg, h);
  BasisMap basis(cfg.D, cfg.Lambda);
  return operator_from_action(basis, [&](const Chain& c) {
    std::vector<Transition> out;
    int l = c.front();
    for (auto& [t, R] : t_action(c, h)) {
      int lp = t.front();
      if (lp > cfg.Lambda) continue;
      double cc = unit_c ? 1.0 : c_coeff(lp > l ? lp : l, cfg);
      if (cc == 0.0) continue;
      out.emplace_back(t, cc * R);
    }
    return out;
  });
}

std::vector<bool> level_mask(const BasisMap& b, int lo, int hi) {
  std::vector<bool> m(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) m[i] = b.chain_at(i).front() >= lo && b.chain_at(i).front() <= hi;
  return m;
}

double casimir_eigen(int m, int p) { return double(m) * double(m + p - 2); }

int casimir_label(const Chain& c, int p) {
  int d = (int)c.size();
  int v = c[d - (p - 1)];
  return p == 2 ? std::abs(v) : v;
}

}  // namespace

SparseOperator operator_from_action(const BasisMap& basis,
                                    const std::function<std::vector<Transition>(const Chain&)>& action) {
  std::vector<SparseOperator::Entry> e;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (const auto& [t, v] : action(basis.chain_at(col))) {
      if (!basis.contains(t)) continue;
      e.push_back({basis.index_of(t), col, v});
    }
  }
  return SparseOperator::from_entries(basis.size(), e);
}

SparseOperator build_angular_momentum(const FuzzyConfig& cfg, int h, int j) {
  cfg.validate();
  check_index(cfg, h);
  check_index(cfg, j);
  if (h == j) throw std::invalid_argument("L_{h,h} is not a generator");
  if (h > j) return cd(-1.0) * build_angular_momentum(cfg, j, h);
  BasisMap basis(cfg.D, cfg.Lambda);
  return operator_from_action(basis, [&](const Chain& c) { return L_action(c, h, j); });
}

SparseOperator build_position(const FuzzyConfig& cfg, int h) { return coordinate(cfg, h, false); }

SparseOperator build_multiplication(const FuzzyConfig& cfg, int h) { return coordinate(cfg, h, true); }

SparseOperator build_position_pm(const FuzzyConfig& cfg, int sign, bool sqrt2) {
  SparseOperator r = build_position(cfg, 1) + (sign > 0 ? I : -I) * build_position(cfg, 2);
  if (sqrt2) r *= 1.0 / std::sqrt(2.0);
  return r;
}

SparseOperator build_L_pm(const FuzzyConfig& cfg, int nu, int sign, bool sqrt2) {
  if (nu < 3 || nu > cfg.D) throw std::invalid_argument("L_pm: need 3 <= nu <= D");
  SparseOperator r = build_angular_momentum(cfg, 2, nu) - (sign > 0 ? I : -I) * build_angular_momentum(cfg, 1, nu);
  if (sqrt2) r *= 1.0 / std::sqrt(2.0);
  return r;
}

SparseOperator build_casimir(const FuzzyConfig& cfg, int p) {
  cfg.validate();
  if (p < 2 || p > cfg.D) throw std::invalid_argument("casimir: need 2 <= p <= D");
  BasisMap basis(cfg.D, cfg.Lambda);
  SparseOperator C(basis.size());
  for (int j = 2; j <= p; ++j)
    for (int h = 1; h < j; ++h) {
      SparseOperator L = build_angular_momentum(cfg, h, j);
      C += L * L;
    }
  return C;
}

SparseOperator build_top_projector(const FuzzyConfig& cfg) {
  cfg.validate();
  BasisMap basis(cfg.D, cfg.Lambda);
  std::vector<cd> diag(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) diag[i] = basis.chain_at(i).front() == cfg.Lambda ? 1.0 : 0.0;
  return SparseOperator::diagonal(diag);
}

SparseOperator build_casimir_projector(const FuzzyConfig& cfg, int p, int m) {
  cfg.validate();
  if (p < 2 || p > cfg.D) throw std::invalid_argument("projector: need 2 <= p <= D");
  BasisMap basis(cfg.D, cfg.Lambda);
  std::vector<cd> diag(basis.size());
  bool any = false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool hit = casimir_label(basis.chain_at(i), p) == m;
    diag[i] = hit ? 1.0 : 0.0;
    any = any || hit;
  }
  if (!any) throw std::invalid_argument("projector: eigenvalue not in spectrum");
  return SparseOperator::diagonal(diag);
}

SparseOperator build_casimir_projector_by_value(const FuzzyConfig& cfg, int p, double value) {
  for (int m = 0; m <= cfg.Lambda; ++m)
    if (std::abs(casimir_eigen(m, p) - value) < 1e-9) return build_casimir_projector(cfg, p, m);
  throw std::invalid_argument("projector: eigenvalue not in spectrum");
}

SparseOperator build_parity(const FuzzyConfig& cfg) {
  BasisMap basis(cfg.D, cfg.Lambda);
  std::vector<cd> diag(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) diag[i] = (basis.chain_at(i).front() % 2) ? -1.0 : 1.0;
  return SparseOperator::diagonal(diag);
}

Algebra build_algebra(const FuzzyConfig& cfg) {
  cfg.validate();
  Algebra a;
  a.cfg = cfg;
  a.basis = BasisMap(cfg.D, cfg.Lambda);
  const std::size_t n = a.basis.size();
  a.L.assign(cfg.D + 1, std::vector<SparseOperator>(cfg.D + 1, SparseOperator(n)));
  for (int j = 2; j <= cfg.D; ++j)
    for (int h = 1; h < j; ++h) {
      a.L[h][j] = build_angular_momentum(cfg, h, j);
      a.L[j][h] = cd(-1.0) * a.L[h][j];
    }
  a.x.assign(cfg.D + 1, SparseOperator(n));
  for (int h = 1; h <= cfg.D; ++h) a.x[h] = build_position(cfg, h);
  return a;
}

double x2_expected(int l, const FuzzyConfig& cfg) {
  const int D = cfg.D;
  double den = 2.0 * l + D - 2;
  if (l == cfg.Lambda) {
    double c = c_coeff(cfg.Lambda, cfg);
    return l == 0 ? 0.0 : c * c * l / den;
  }
  double s = b_value(l, D) + b_value(l + 1, D) * (l + D - 2) / den + (l > 0 ? b_value(l - 1, D) * l / den : 0.0);
  return 1.0 + s / (2.0 * cfg.k);
}

VerificationReport verify_algebra(const FuzzyConfig& cfg, const AlgebraTolerances& tol) {
  return verify_algebra(build_algebra(cfg), tol);
}

VerificationReport verify_algebra(const Algebra& alg, const AlgebraTolerances& tol) {
  const FuzzyConfig& cfg = alg.cfg;
  const int D = cfg.D, Lam = cfg.Lambda;
  const std::size_t n = alg.basis.size();
  VerificationReport rep;

  double herm = 0;
  for (int j = 2; j <= D; ++j)
    for (int h = 1; h < j; ++h) herm = std::max(herm, max_abs_diff(alg.Lhj(h, j), alg.Lhj(h, j).adjoint()));
  for (int h = 1; h <= D; ++h) herm = std::max(herm, max_abs_diff(alg.x[h], alg.x[h].adjoint()));
  rep.add("hermiticity", herm, tol.hermitian, "L_{h,j} and x_h");

  // (a) so(D) structure constants
  double sc = 0;
  for (int j = 2; j <= D; ++j)
    for (int h = 1; h < j; ++h)
      for (int s = 2; s <= D; ++s)
        for (int p = 1; p < s; ++p) {
          SparseOperator lhs = commutator(alg.Lhj(h, j), alg.Lhj(p, s));
          SparseOperator rhs(n);
          if (h == p) rhs += alg.Lhj(j, s);
          if (j == s) rhs += alg.Lhj(h, p);
          if (h == s) rhs -= alg.Lhj(j, p);
          if (j == p) rhs -= alg.Lhj(h, s);
          sc = std::max(sc, max_abs_diff(lhs, I * rhs));
        }
  rep.add("so(D) structure constants", sc, tol.structure, "[L_hj,L_ps] = i(d_hp L_js + d_js L_hp - d_hs L_jp - d_jp L_hs)");

  // (b) Snyder relation
  SparseOperator P = build_top_projector(cfg);
  SparseOperator Id = SparseOperator::identity(n);
  double cL = Lam > 0 ? c_coeff(Lam, cfg) : 0.0;
  double top = Lam > 0 ? 1.0 / cfg.k + cL * cL / (2.0 * Lam + D - 2) : 0.0;
  SparseOperator factor = (-1.0 / cfg.k) * Id + cd(top) * P;
  auto interior = level_mask(alg.basis, 0, Lam - 1);
  double sn_int = 0, sn_full = 0;
  for (int j = 2; j <= D; ++j)
    for (int h = 1; h < j; ++h) {
      SparseOperator lhs = commutator(alg.x[h], alg.x[j]);
      SparseOperator rhs = I * (factor * alg.Lhj(h, j));
      sn_full = std::max(sn_full, max_abs_diff(lhs, rhs));
      SparseOperator in = (lhs + (I / cfg.k) * alg.Lhj(h, j)).masked(interior, interior);
      sn_int = std::max(sn_int, in.max_abs());
    }
  rep.add("snyder interior", sn_int, tol.snyder_interior, "[x_h,x_j] = -(i/k) L_hj on l < Lambda");
  rep.add("snyder full", sn_full, tol.snyder, "i-convention with top-level projector term");

  // (c) vector covariance
  double cov = 0;
  for (int s = 2; s <= D; ++s)
    for (int h = 1; h < s; ++h)
      for (int j = 1; j <= D; ++j) {
        SparseOperator lhs = commutator(alg.Lhj(h, s), alg.x[j]);
        SparseOperator rhs(n);
        if (j == s) rhs += alg.x[h];
        if (j == h) rhs -= alg.x[s];
        cov = std::max(cov, max_abs_diff(lhs, (1.0 / I) * rhs));
      }
  rep.add("vector covariance", cov, tol.covariance, "[L_hs,x_j] = (1/i)(d_js x_h - d_jh x_s)");

  // (d) x^2 per level
  SparseOperator X2(n);
  for (int h = 1; h <= D; ++h) X2 += alg.x[h] * alg.x[h];
  double x2dev = 0;
  for (const auto& e : X2.entries())
    if (e.row != e.col) x2dev = std::max(x2dev, std::abs(e.value));
  for (std::size_t i = 0; i < n; ++i)
    x2dev = std::max(x2dev, std::abs(X2.at(i, i) - x2_expected(alg.basis.chain_at(i).front(), cfg)));
  rep.add("x^2 spectrum", x2dev, tol.x2, "top level c_Lambda^2 Lambda/(2Lambda+D-2)");

  // Casimir spectra C_p: diagonal with l_{p-1}(l_{p-1}+p-2)
  std::vector<SparseOperator> C(D + 1, SparseOperator(n));
  for (int p = 2; p <= D; ++p) {
    for (int jj = 2; jj <= p; ++jj)
      for (int hh = 1; hh < jj; ++hh) C[p] += alg.Lhj(hh, jj) * alg.Lhj(hh, jj);
  }
  double cas = 0;
  for (int p = 2; p <= D; ++p) {
    for (const auto& e : C[p].entries()) {
      double want = e.row == e.col ? casimir_eigen(casimir_label(alg.basis.chain_at(e.row), p), p) : 0.0;
      cas = std::max(cas, std::abs(e.value - want));
    }
    for (std::size_t i = 0; i < n; ++i)
      cas = std::max(cas, std::abs(C[p].at(i, i) - casimir_eigen(casimir_label(alg.basis.chain_at(i), p), p)));
  }
  rep.add("casimir spectra", cas, tol.casimir, "C_p = l_{p-1}(l_{p-1}+p-2)");

  double comm = 0;
  for (int j = 2; j <= D; ++j)
    for (int h = 1; h < j; ++h)
      for (int p = j; p <= D; ++p) comm = std::max(comm, commutator(alg.Lhj(h, j), C[p]).max_abs());
  rep.add("generators commute with C_p, p >= max(h,j)", comm, tol.casimir);

  // (e) minimal polynomials and interpolated projectors
  double mp = 0, proj = 0;
  for (int p = 2; p <= D; ++p) {
    double scale = std::max(1.0, casimir_eigen(Lam, p));
    SparseOperator prod = Id;
    for (int m = 0; m <= Lam; ++m) prod = prod * ((1.0 / scale) * (C[p] - casimir_eigen(m, p) * Id));
    mp = std::max(mp, prod.max_abs());
    for (int m = 0; m <= Lam; ++m) {
      SparseOperator lag = Id;
      for (int q = 0; q <= Lam; ++q) {
        if (q == m) continue;
        lag = lag * ((1.0 / (casimir_eigen(m, p) - casimir_eigen(q, p))) * (C[p] - casimir_eigen(q, p) * Id));
      }
      proj = std::max(proj, max_abs_diff(lag, build_casimir_projector(cfg, p, m)));
    }
  }
  rep.add("minimal polynomial of C_p", mp, tol.minimal_poly, "factors scaled by 1/max eigenvalue");
  rep.add("C_p polynomial projectors", proj, tol.minimal_poly);

  // (f) nilpotency
  double nil = 0;
  for (int sign : {+1, -1}) {
    SparseOperator xp = alg.x[1] + (sign > 0 ? I : -I) * alg.x[2];
    nil = std::max(nil, op_norm(power(xp, 2 * Lam + 1)));
    for (int nu = 3; nu <= D; ++nu) {
      SparseOperator lp = alg.Lhj(2, nu) - (sign > 0 ? I : -I) * alg.Lhj(1, nu);
      nil = std::max(nil, op_norm(power(lp, 2 * Lam + 1)));
    }
  }
  rep.add("nilpotency", nil, tol.nilpotency, "x_pm = x_1 +- i x_2 and L_{pm,nu}, no 1/sqrt 2; power 2Lambda+1");

  // parity: (-1)^l fixes L and flips x
  SparseOperator Par = build_parity(cfg);
  double par = 0;
  for (int j = 2; j <= D; ++j)
    for (int h = 1; h < j; ++h) par = std::max(par, max_abs_diff(Par * alg.Lhj(h, j) * Par, alg.Lhj(h, j)));
  for (int h = 1; h <= D; ++h) par = std::max(par, (Par * alg.x[h] * Par + alg.x[h]).max_abs());
  rep.add("parity equivariance", par, tol.structure);
  return rep;
}

}  // namespace fuzzyd
