#include "fuzzyd/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <random>
#include <stdexcept>

#include "fuzzyd/ladder.hpp"
#include "fuzzyd/operators.hpp"

namespace fuzzyd {

namespace {

const cd I(0.0, 1.0);

// monomial z^a zbar^b t_3^g3 ... t_D^gD stored as (a, b, g3, ..., gD)
using ZMono = std::vector<int>;
using QVec = std::map<ZMono, mpq_class>;

void add_to(QVec& v, const ZMono& m, const mpq_class& q) {
  if (q == 0) return;
  auto it = v.find(m);
  if (it == v.end()) {
    v.emplace(m, q);
  } else {
    it->second += q;
    if (it->second == 0) v.erase(it);
  }
}

// Laplacian in the first p coordinates: 4 d_z d_zbar + sum_{h=3..p} d_h^2
QVec laplace_p(const QVec& v, int p) {
  QVec r;
  for (const auto& [m, q] : v) {
    if (m[0] > 0 && m[1] > 0) {
      ZMono e = m;
      e[0]--, e[1]--;
      add_to(r, e, q * (4 * m[0] * m[1]));
    }
    for (int h = 3; h <= p; ++h) {
      int g = m[h - 1];
      if (g < 2) continue;
      ZMono e = m;
      e[h - 1] -= 2;
      add_to(r, e, q * (g * (g - 1)));
    }
  }
  return r;
}

// C_p = E_p (E_p + p - 2) - r_p^2 Delta_p, E_p the Euler operator of the first p coordinates
QVec casimir_p(const QVec& v, int p) {
  QVec r;
  for (const auto& [m, q] : v) {
    int e = m[0] + m[1];
    for (int h = 3; h <= p; ++h) e += m[h - 1];
    add_to(r, m, q * (e * (e + p - 2)));
  }
  for (const auto& [m, q] : laplace_p(v, p)) {
    ZMono e = m;
    e[0]++, e[1]++;
    add_to(r, e, -q);
    for (int h = 3; h <= p; ++h) {
      ZMono f = m;
      f[h - 1] += 2;
      add_to(r, f, -q);
    }
  }
  return r;
}

QVec combine(const std::vector<QVec>& basis, const std::vector<mpq_class>& y) {
  QVec r;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (y[i] == 0) continue;
    for (const auto& [m, q] : basis[i]) add_to(r, m, q * y[i]);
  }
  return r;
}

// scale to a primitive integer vector with positive first entry
void make_primitive(QVec& v) {
  if (v.empty()) return;
  mpz_class l = 1, g = 0;
  for (const auto& [m, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  for (auto& [m, q] : v) {
    q *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (v.begin()->second < 0) g = -g;
  for (auto& [m, q] : v) {
    q /= g;
    q.canonicalize();
  }
}

// basis of { sum y_i v_i : op(sum y_i v_i) = 0 }
template <class Op>
std::vector<QVec> kernel(const std::vector<QVec>& basis, Op op) {
  const std::size_t m = basis.size();
  std::vector<QVec> img(m);
  std::map<ZMono, std::size_t> rows;
  for (std::size_t i = 0; i < m; ++i) {
    img[i] = op(basis[i]);
    for (const auto& [mono, q] : img[i]) rows.emplace(mono, rows.size());
  }
  const std::size_t n = rows.size();
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [mono, q] : img[i]) M[rows[mono]][i] = q;

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(M[p], M[r]);
    mpq_class inv = 1 / M[r][c];
    for (std::size_t k = c; k < m; ++k) M[r][k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || M[i][c] == 0) continue;
      mpq_class f = M[i][c];
      for (std::size_t k = c; k < m; ++k)
        if (M[r][k] != 0) M[i][k] -= f * M[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> out;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> y(m);
    y[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) y[pivots[k]] = -M[k][f];
    QVec v = combine(basis, y);
    make_primitive(v);
    out.push_back(std::move(v));
  }
  return out;
}

void sector_monomials(int D, int rest, int var, ZMono& cur, std::vector<ZMono>& out) {
  if (var == D) {
    if (rest == 0) out.push_back(cur);
    return;
  }
  for (int g = 0; g <= rest; ++g) {
    cur[var] = g;
    sector_monomials(D, rest - g, var + 1, cur, out);
  }
  cur[var] = 0;
}

std::vector<QVec> sector_basis(int D, int l, int l1) {
  std::vector<QVec> out;
  for (int b = 0; 2 * b + l1 <= l; ++b) {
    int a = b + l1;
    if (a < 0) continue;
    ZMono cur(D, 0);
    cur[0] = a;
    cur[1] = b;
    std::vector<ZMono> ms;
    sector_monomials(D, l - a - b, 2, cur, ms);
    for (auto& m : ms) out.push_back(QVec{{m, mpq_class(1)}});
  }
  return out;
}

void refine(const std::vector<QVec>& V, int D, int p, Chain prefix, int l1, std::map<Chain, QVec>& out) {
  if (p < 3) {
    if (V.size() != 1) throw std::logic_error("harmonic refinement did not reach a line");
    prefix.push_back(l1);
    out.emplace(prefix, V[0]);
    return;
  }
  for (int m = std::abs(l1); m <= prefix.back(); ++m) {
    mpq_class ev = m * (m + p - 2);
    auto W = kernel(V, [&](const QVec& v) {
      QVec r = casimir_p(v, p);
      for (const auto& [mono, q] : v) add_to(r, mono, -ev * q);
      return r;
    });
    if (W.empty()) continue;
    Chain next = prefix;
    next.push_back(m);
    refine(W, D, p - 1, next, l1, out);
  }
}

mpz_class binom_z(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ExactPolynomial to_t_form(const QVec& v, int D) {
  ExactPolynomial out;
  for (const auto& [m, q] : v) {
    int a = m[0], b = m[1];
    for (int r = 0; r <= a; ++r)
      for (int s = 0; s <= b; ++s) {
        mpq_class c = q * binom_z(a, r) * binom_z(b, s);
        if (s % 2) c = -c;
        Exponent e(D, 0);
        e[0] = a - r + b - s;
        e[1] = r + s;
        for (int h = 3; h <= D; ++h) e[h - 1] = m[h - 1];
        GaussRational& g = out[e];
        switch ((r + s) % 4) {
          case 0: g.re += c; break;
          case 1: g.im += c; break;
          case 2: g.re -= c; break;
          default: g.im -= c; break;
        }
      }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.re == 0 && it->second.im == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

mpq_class exact_norm_ratio(const ExactPolynomial& p, int D) {
  mpq_class s = 0;
  Exponent e(D);
  for (const auto& [x, u] : p)
    for (const auto& [y, v] : p) {
      bool odd = false;
      for (int i = 0; i < D; ++i) {
        e[i] = x[i] + y[i];
        odd = odd || (e[i] % 2);
      }
      if (odd) continue;
      s += (u.re * v.re + u.im * v.im) * moment_ratio_exact(e, D);
    }
  return s;
}

struct Parent {
  Chain chain;
  Polynomial T;
  int sign = 1;
};

Parent parent_of(const Chain& c, int D) {
  const int d = (int)c.size();
  const int l = c[0];
  int q = 0;  // last position of the equal top block among l_d..l_2
  while (q + 1 <= d - 2 && c[q + 1] == l) ++q;
  const int m = d - q;  // its level
  Parent p;
  p.chain = c;
  if (m >= 3 || std::abs(c[d - 1]) < l) {
    for (int i = 0; i <= q; ++i) p.chain[i]--;
    p.T = Polynomial::coordinate(D, m + 1);
    p.sign = 1;
  } else if (c[d - 1] == l) {
    for (int i = 0; i < d; ++i) p.chain[i]--;
    p.T = Polynomial::coordinate(D, 1) + I * Polynomial::coordinate(D, 2);
    p.sign = 1;
  } else {
    for (int i = 0; i < d - 1; ++i) p.chain[i]--;
    p.chain[d - 1]++;
    p.T = Polynomial::coordinate(D, 1) - I * Polynomial::coordinate(D, 2);
    p.sign = -1;
  }
  return p;
}

Polynomial to_double(const ExactPolynomial& p, int D, double scale) {
  Polynomial r(D);
  for (const auto& [e, g] : p) r.terms[e] = cd(g.re.get_d(), g.im.get_d()) * scale;
  r.prune();
  return r;
}

std::recursive_mutex cache_mu;
std::map<std::pair<int, int>, std::vector<HarmonicPolynomial>> basis_cache;
std::map<std::pair<int, Chain>, std::pair<int, std::size_t>> chain_index;

}  // namespace

nlohmann::json HarmonicPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, v] : poly.terms) terms.push_back({a, v.real(), v.imag()});
  return {{"chain", chain}, {"D", D}, {"degree", degree}, {"terms", terms}};
}

mpq_class moment_ratio_exact(const Exponent& a, int D) {
  int tot = 0;
  mpq_class r = 1;
  for (int x : a) {
    if (x % 2) return 0;
    tot += x;
    for (int o = 1; o < x; o += 2) r *= o;
  }
  for (int k = 0; k < tot / 2; ++k) r /= (D + 2 * k);
  r.canonicalize();
  return r;
}

ExactPolynomial exact_laplacian(const ExactPolynomial& p, int D) {
  ExactPolynomial r;
  for (const auto& [a, v] : p)
    for (int i = 0; i < D; ++i) {
      if (a[i] < 2) continue;
      Exponent e = a;
      e[i] -= 2;
      GaussRational& g = r[e];
      g.re += v.re * (a[i] * (a[i] - 1));
      g.im += v.im * (a[i] * (a[i] - 1));
    }
  for (auto it = r.begin(); it != r.end();) {
    if (it->second.re == 0 && it->second.im == 0)
      it = r.erase(it);
    else
      ++it;
  }
  return r;
}

const std::vector<HarmonicPolynomial>& harmonic_basis(int D, int l) {
  if (D < 3) throw std::invalid_argument("harmonic_basis: D >= 3");
  if (l < 0) throw std::invalid_argument("harmonic_basis: l >= 0");
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  auto key = std::make_pair(D, l);
  auto it = basis_cache.find(key);
  if (it != basis_cache.end()) return it->second;
  if (l > 0) harmonic_basis(D, l - 1);

  std::map<Chain, QVec> raw;
  for (int l1 = -l; l1 <= l; ++l1) {
    auto V = kernel(sector_basis(D, l, l1), [&](const QVec& v) { return laplace_p(v, D); });
    refine(V, D, D - 1, Chain{l}, l1, raw);
  }

  const double vol = sphere_volume(D);
  std::vector<HarmonicPolynomial> out;
  for (const Chain& c : chains_with_top(D, l)) {
    auto f = raw.find(c);
    if (f == raw.end()) throw std::logic_error("harmonic missing for chain " + to_string(c));
    HarmonicPolynomial h;
    h.chain = c;
    h.D = D;
    h.degree = l;
    h.exact = to_t_form(f->second, D);
    h.norm_ratio = exact_norm_ratio(h.exact, D);
    h.poly = to_double(h.exact, D, 1.0 / std::sqrt(vol * h.norm_ratio.get_d()));
    if (l > 0) {
      Parent p = parent_of(c, D);
      const HarmonicPolynomial& par = harmonic(p.chain, D);
      cd ov = sphere_inner(h.poly, p.T * par.poly);
      if (std::abs(ov) < 1e-8) throw std::logic_error("harmonic phase: vanishing parent overlap");
      if (ov.real() * p.sign < 0) {
        h.poly *= -1.0;
        for (auto& [e, g] : h.exact) {
          g.re = -g.re;
          g.im = -g.im;
        }
      }
    }
    out.push_back(std::move(h));
  }
  auto& stored = basis_cache.emplace(key, std::move(out)).first->second;
  for (std::size_t i = 0; i < stored.size(); ++i) chain_index[{D, stored[i].chain}] = {l, i};
  return stored;
}

const HarmonicPolynomial& harmonic(const Chain& c, int D) {
  if ((int)c.size() != D - 1 || !is_valid_chain(c)) throw std::invalid_argument("harmonic: invalid chain " + to_string(c));
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  const auto& b = harmonic_basis(D, c[0]);
  return b[chain_index.at({D, c}).second];
}

PositionElements position_matrix_elements(int D, int h, int l_max) {
  if (h < 1 || h > D) throw std::invalid_argument("position_matrix_elements: h out of range");
  PositionElements pe;
  Polynomial th = Polynomial::coordinate(D, h);
  for (int l = 0; l <= l_max; ++l)
    for (const auto& src : harmonic_basis(D, l)) {
      for (auto& [t, v] : t_action(src.chain, h)) pe.ladder[{src.chain, t}] = v;
      Polynomial prod = th * src.poly;
      for (int lp : {l - 1, l + 1}) {
        if (lp < 0) continue;
        for (const auto& tgt : harmonic_basis(D, lp)) {
          cd v = sphere_inner(tgt.poly, prod);
          if (std::abs(v) > 1e-14) pe.quadrature[{src.chain, tgt.chain}] = v;
        }
      }
    }
  double dev = 0;
  for (const auto& [k, v] : pe.ladder) {
    auto f = pe.quadrature.find(k);
    dev = std::max(dev, std::abs(v - (f == pe.quadrature.end() ? cd(0) : f->second)));
  }
  for (const auto& [k, v] : pe.quadrature)
    if (!pe.ladder.count(k)) dev = std::max(dev, std::abs(v));
  pe.max_discrepancy = dev;
  return pe;
}

namespace {

std::map<Chain, cd> decompose(const Polynomial& P, int D, int l1, double* remainder) {
  std::map<Chain, cd> g;
  auto parts = harmonic_decomposition(P, remainder);
  int n = P.degree();
  for (const auto& H : parts) {
    if (n < 0) break;
    for (const auto& Y : harmonic_basis(D, n)) {
      if (Y.chain.back() != l1) continue;
      cd v = sphere_inner(Y.poly, H);
      if (std::abs(v) > 1e-15) g[Y.chain] = v;
    }
    n -= 2;
  }
  return g;
}

}  // namespace

std::map<Chain, cd> multiply_harmonics(const Chain& a, const Chain& b, int D) {
  const auto& A = harmonic(a, D);
  const auto& B = harmonic(b, D);
  double rem = 0;
  return decompose(A.poly * B.poly, D, a.back() + b.back(), &rem);
}

std::vector<std::vector<double>> sphere_points(int D, int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < n; ++i) {
    std::vector<double> x(D);
    double s = 0;
    for (auto& v : x) {
      v = N(rng);
      s += v * v;
    }
    s = std::sqrt(s);
    for (auto& v : x) v /= s;
    pts.push_back(std::move(x));
  }
  return pts;
}

ProductCheck check_product(const Chain& a, const Chain& b, int D, int points, unsigned seed) {
  const auto& A = harmonic(a, D);
  const auto& B = harmonic(b, D);
  Polynomial P = A.poly * B.poly;
  ProductCheck pc;
  auto g = decompose(P, D, a.back() + b.back(), &pc.remainder);
  double s = 0;
  for (const auto& [c, v] : g) s += std::norm(v);
  pc.parseval = std::abs(s - sphere_inner(P, P).real());
  for (const auto& x : sphere_points(D, points, seed)) {
    cd sum = 0;
    for (const auto& [c, v] : g) sum += v * harmonic(c, D).poly.evaluate(x);
    pc.pointwise = std::max(pc.pointwise, std::abs(sum - P.evaluate(x)));
  }
  return pc;
}

VerificationReport verify_harmonics(int D, int l_max, const HarmonicTolerances& tol) {
  VerificationReport rep;
  std::vector<const HarmonicPolynomial*> all;
  double count = 0;
  bool lap = true;
  double csco = 0;
  for (int l = 0; l <= l_max; ++l) {
    const auto& B = harmonic_basis(D, l);
    count = std::max(count, std::abs(double(B.size()) - double(irrep_dim(D, l))));
    for (const auto& Y : B) {
      all.push_back(&Y);
      lap = lap && exact_laplacian(Y.exact, D).empty();
      csco = std::max(csco, (apply_L(Y.poly, 1, 2) - cd(Y.chain.back()) * Y.poly).max_abs());
      for (int p = 2; p <= D; ++p) {
        int m = Y.chain[D - p];
        if (p == 2) m = std::abs(m);
        csco = std::max(csco, (apply_casimir(Y.poly, p) - cd(double(m) * (m + p - 2)) * Y.poly).max_abs());
      }
    }
  }
  rep.add("harmonic count = irrep dimension", count, 0.0);
  rep.add("exact Laplacian annihilation", lap ? 0.0 : 1.0, 0.0, "rational arithmetic");
  double gram = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      if ((all[i]->degree + all[j]->degree) % 2) continue;
      if (all[i]->chain.back() != all[j]->chain.back()) continue;
      cd v = sphere_inner(all[i]->poly, all[j]->poly);
      gram = std::max(gram, std::abs(v - (i == j ? 1.0 : 0.0)));
    }
  rep.add("Gram matrix = identity", gram, tol.gram, "pairs differing in parity or l_1 vanish identically");
  rep.add("CSCO eigenvalues", csco, tol.csco, "L_12 = l_1, C_p = l_{p-1}(l_{p-1}+p-2) via first-order L_hj");
  double pos = 0;
  for (int h = 1; h <= D; ++h) pos = std::max(pos, position_matrix_elements(D, h, l_max).max_discrepancy);
  rep.add("R_h ladder vs sphere integral", pos, tol.position);
  return rep;
}

FuzzyHarmonics::FuzzyHarmonics(const FuzzyConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  n_ = (std::size_t)dimension(cfg.D, cfg.Lambda);
  x_.resize(cfg.D + 1);
  for (int h = 1; h <= cfg.D; ++h) x_[h] = build_position(cfg, h).dense();
}

const Eigen::MatrixXcd& FuzzyHarmonics::word_sum(const Exponent& a) {
  auto it = words_.find(a);
  if (it != words_.end()) return it->second;
  Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(n_, n_);
  bool zero = true;
  for (int h = 0; h < cfg_.D; ++h) {
    if (a[h] == 0) continue;
    zero = false;
    Exponent b = a;
    b[h]--;
    W += x_[h + 1] * word_sum(b);
  }
  if (zero) W = Eigen::MatrixXcd::Identity(n_, n_);
  return words_.emplace(a, std::move(W)).first->second;
}

const Eigen::MatrixXcd& FuzzyHarmonics::symmetrized(const Exponent& a) {
  if ((int)a.size() != cfg_.D) throw std::invalid_argument("exponent length != D");
  auto it = sym_.find(a);
  if (it != sym_.end()) return it->second;
  double lm = 0;
  int tot = 0;
  for (int x : a) {
    tot += x;
    lm -= std::lgamma(x + 1.0);
  }
  lm += std::lgamma(tot + 1.0);
  double multinom = std::round(std::exp(lm));
  return sym_.emplace(a, word_sum(a) / multinom).first->second;
}

Eigen::MatrixXcd FuzzyHarmonics::polynomial(const Polynomial& p) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n_, n_);
  for (const auto& [a, v] : p.terms) r += v * symmetrized(a);
  return r;
}

SparseOperator FuzzyHarmonics::harmonic(const Chain& c) {
  if ((int)c.size() != cfg_.D - 1 || !is_valid_chain(c)) throw std::invalid_argument("fuzzy harmonic: invalid chain");
  if (c[0] > 2 * cfg_.Lambda) throw std::invalid_argument("fuzzy harmonic: l exceeds 2 Lambda");
  return SparseOperator::from_dense(polynomial(fuzzyd::harmonic(c, cfg_.D).poly));
}

SparseOperator FuzzyHarmonics::function(const std::map<Chain, cd>& coeffs) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n_, n_);
  for (const auto& [c, v] : coeffs) {
    if (c[0] > 2 * cfg_.Lambda) throw std::invalid_argument("approximate_function: l exceeds 2 Lambda");
    r += v * polynomial(fuzzyd::harmonic(c, cfg_.D).poly);
  }
  return SparseOperator::from_dense(r);
}

SparseOperator build_fuzzy_harmonic(const Chain& c, const FuzzyConfig& cfg) { return FuzzyHarmonics(cfg).harmonic(c); }

SparseOperator approximate_function(const std::map<Chain, cd>& coeffs, const FuzzyConfig& cfg) {
  return FuzzyHarmonics(cfg).function(coeffs);
}

}  // namespace fuzzyd
