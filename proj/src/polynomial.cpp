#include "fuzzyd/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzyd {

namespace {

const cd I(0.0, 1.0);

void same_space(const Polynomial& a, const Polynomial& b) {
  if (a.D != b.D) throw std::invalid_argument("polynomials live in different dimensions");
}

}  // namespace

Polynomial Polynomial::monomial(int D, const Exponent& a, cd v) {
  if ((int)a.size() != D) throw std::invalid_argument("exponent length != D");
  Polynomial p(D);
  if (v != 0.0) p.terms[a] = v;
  return p;
}

Polynomial Polynomial::coordinate(int D, int h) {
  if (h < 1 || h > D) throw std::invalid_argument("coordinate index out of range");
  Exponent a(D, 0);
  a[h - 1] = 1;
  return monomial(D, a);
}

Polynomial Polynomial::constant(int D, cd v) { return monomial(D, Exponent(D, 0), v); }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [a, v] : terms) {
    int s = 0;
    for (int x : a) s += x;
    d = std::max(d, s);
  }
  return d;
}

double Polynomial::max_abs() const {
  double m = 0;
  for (const auto& [a, v] : terms) m = std::max(m, std::abs(v));
  return m;
}

cd Polynomial::evaluate(const std::vector<double>& t) const {
  if ((int)t.size() != D) throw std::invalid_argument("evaluation point has wrong dimension");
  cd s = 0;
  for (const auto& [a, v] : terms) {
    double m = 1;
    for (int i = 0; i < D; ++i) m *= std::pow(t[i], a[i]);
    s += v * m;
  }
  return s;
}

void Polynomial::prune(double tol) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= tol)
      it = terms.erase(it);
    else
      ++it;
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  same_space(*this, o);
  for (const auto& [a, v] : o.terms) terms[a] += v;
  prune();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  same_space(*this, o);
  for (const auto& [a, v] : o.terms) terms[a] -= v;
  prune();
  return *this;
}

Polynomial& Polynomial::operator*=(cd s) {
  for (auto& [a, v] : terms) v *= s;
  prune();
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(cd s, Polynomial a) { return a *= s; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  same_space(a, b);
  Polynomial r(a.D);
  Exponent e(a.D);
  for (const auto& [x, u] : a.terms)
    for (const auto& [y, v] : b.terms) {
      for (int i = 0; i < a.D; ++i) e[i] = x[i] + y[i];
      r.terms[e] += u * v;
    }
  r.prune();
  return r;
}

Polynomial conj(const Polynomial& p) {
  Polynomial r = p;
  for (auto& [a, v] : r.terms) v = std::conj(v);
  return r;
}

Polynomial derivative(const Polynomial& p, int h) {
  Polynomial r(p.D);
  for (const auto& [a, v] : p.terms) {
    if (a[h - 1] == 0) continue;
    Exponent e = a;
    e[h - 1] -= 1;
    r.terms[e] += v * double(a[h - 1]);
  }
  r.prune();
  return r;
}

Polynomial laplacian(const Polynomial& p) {
  Polynomial r(p.D);
  for (const auto& [a, v] : p.terms)
    for (int i = 0; i < p.D; ++i) {
      if (a[i] < 2) continue;
      Exponent e = a;
      e[i] -= 2;
      r.terms[e] += v * double(a[i] * (a[i] - 1));
    }
  r.prune();
  return r;
}

Polynomial times_r2(const Polynomial& p) {
  Polynomial r(p.D);
  for (const auto& [a, v] : p.terms)
    for (int i = 0; i < p.D; ++i) {
      Exponent e = a;
      e[i] += 2;
      r.terms[e] += v;
    }
  r.prune();
  return r;
}

Polynomial apply_L(const Polynomial& p, int h, int j) {
  Polynomial r = Polynomial::coordinate(p.D, h) * derivative(p, j) - Polynomial::coordinate(p.D, j) * derivative(p, h);
  return (1.0 / I) * r;
}

Polynomial apply_casimir(const Polynomial& p, int q) {
  Polynomial r(p.D);
  for (int j = 2; j <= q; ++j)
    for (int h = 1; h < j; ++h) r += apply_L(apply_L(p, h, j), h, j);
  return r;
}

Polynomial harmonic_projection(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) return p;
  Polynomial h = p;
  Polynomial lap = p;  // Delta^j P
  double coef = 1.0;
  for (int j = 1; 2 * j <= n; ++j) {
    lap = laplacian(lap);
    coef *= -1.0 / (2.0 * j * (p.D + 2 * n - 2 - 2 * j));
    Polynomial term = lap;
    for (int i = 0; i < j; ++i) term = times_r2(term);
    h += coef * term;
  }
  return h;
}

Polynomial divide_r2(const Polynomial& p, double* remainder) {
  const int D = p.D;
  Polynomial rest = p, q(D);
  int top = 0;
  for (const auto& [a, v] : rest.terms) top = std::max(top, a[D - 1]);
  for (int e = top; e >= 2; --e) {
    std::vector<std::pair<Exponent, cd>> layer;
    for (const auto& [a, v] : rest.terms)
      if (a[D - 1] == e) layer.emplace_back(a, v);
    for (const auto& [a, v] : layer) {
      Exponent b = a;
      b[D - 1] -= 2;
      q.terms[b] += v;
      rest.terms.erase(a);
      for (int i = 0; i < D - 1; ++i) {
        Exponent c = b;
        c[i] += 2;
        rest.terms[c] -= v;
      }
    }
  }
  if (remainder) *remainder = rest.max_abs();
  q.prune();
  return q;
}

std::vector<Polynomial> harmonic_decomposition(const Polynomial& p, double* remainder) {
  std::vector<Polynomial> out;
  Polynomial cur = p;
  double rem = 0;
  int n = p.degree();
  while (n >= 0 && !cur.terms.empty()) {
    Polynomial h = harmonic_projection(cur);
    out.push_back(h);
    Polynomial rest = cur - h;
    if (n < 2) {
      rem = std::max(rem, rest.max_abs());
      break;
    }
    double r = 0;
    cur = divide_r2(rest, &r);
    rem = std::max(rem, r);
    n -= 2;
  }
  if (remainder) *remainder = rem;
  return out;
}

double sphere_volume(int D) { return 2.0 * std::pow(M_PI, D / 2.0) / std::tgamma(D / 2.0); }

double sphere_integral(const Exponent& a, int D) {
  if ((int)a.size() != D) throw std::invalid_argument("exponent length != D");
  double lg = 0, s = 0;
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("negative exponent");
    if (x % 2) return 0.0;
    lg += std::lgamma((x + 1) / 2.0);
    s += (x + 1) / 2.0;
  }
  return 2.0 * std::exp(lg - std::lgamma(s));
}

double moment_ratio(const Exponent& a, int D) {
  int tot = 0;
  for (int x : a) {
    if (x % 2) return 0.0;
    tot += x;
  }
  long double r = 1;
  std::vector<int> num;
  for (int x : a)
    for (int o = 1; o < x; o += 2) num.push_back(o);
  std::size_t ni = 0;
  for (int k = 0; k < tot / 2; ++k) {
    if (ni < num.size()) r *= num[ni++];
    r /= (long double)(D + 2 * k);
  }
  while (ni < num.size()) r *= num[ni++];
  return (double)r;
}

cd sphere_inner(const Polynomial& a, const Polynomial& b) {
  same_space(a, b);
  const double vol = sphere_volume(a.D);
  cd s = 0;
  Exponent e(a.D);
  for (const auto& [x, u] : a.terms)
    for (const auto& [y, v] : b.terms) {
      bool odd = false;
      for (int i = 0; i < a.D; ++i) {
        e[i] = x[i] + y[i];
        odd = odd || (e[i] % 2);
      }
      if (odd) continue;
      s += std::conj(u) * v * moment_ratio(e, a.D);
    }
  return s * vol;
}

}  // namespace fuzzyd
