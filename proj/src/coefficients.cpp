#include "fuzzyd/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace fuzzyd {

namespace {

// sqrt(num/den) with integer radicand; 0 unless num/den > 0
double root_ratio(long long num, long long den) {
  if (num == 0 || den == 0) return 0.0;
  if ((num > 0) != (den > 0)) return 0.0;
  return std::sqrt(double(num) / double(den));
}

}  // namespace

double coeff_A(int L, int l, int j) {
  long long a = L + l + j - 1, b = 2LL * L + j;
  return root_ratio(a * (a + 1), (b - 1) * (b + 1));
}

double coeff_B(int L, int l, int j) {
  long long b = 2LL * L + j;
  return -root_ratio((long long)(L - l - 1) * (L - l), (b - 1) * (b - 3));
}

double coeff_C(int L, int l, int j) {
  long long b = 2LL * L + j;
  return -root_ratio((long long)(L - l + 2) * (L - l + 1), (b - 1) * (b + 1));
}

double coeff_D(int L, int l, int j) {
  long long a = L + l + j - 2, b = 2LL * L + j;
  return root_ratio(a * (a - 1), (b - 1) * (b - 3));
}

double coeff_F(int L, int l, int j) {
  long long b = 2LL * L + j;
  return root_ratio((long long)(L + l + j - 1) * (L - l + 1), (b - 1) * (b + 1));
}

double coeff_G(int L, int l, int j) {
  long long b = 2LL * L + j;
  return root_ratio((long long)(L - l) * (L + l + j - 2), (b - 1) * (b - 3));
}

LadderCoeffs ladder_coeffs(int L, int l, int j) {
  if (L < std::abs(l)) throw std::domain_error("ladder_coeffs: L < |l|");
  if (j < 2) throw std::domain_error("ladder_coeffs: j < 2");
  return {coeff_A(L, l, j), coeff_B(L, l, j), coeff_C(L, l, j),
          coeff_D(L, l, j), coeff_F(L, l, j), coeff_G(L, l, j)};
}

double d_coeff(int L, int l, int D) {
  long long v = (long long)(L - l + 1) * (L + l + D - 3);
  return v > 0 ? std::sqrt(double(v)) : 0.0;
}

mpq_class b_coeff(int l, int D) {
  mpq_class v(D * D - 4 * D + 3 + 4 * l * (l + D - 2), 4);
  v.canonicalize();
  return v;
}

double b_value(int l, int D) { return b_coeff(l, D).get_d(); }

double c_coeff(int l, const FuzzyConfig& cfg) {
  if (l < 0 || l > cfg.Lambda + 1) throw std::out_of_range("c_coeff: l outside 0..Lambda+1");
  if (l == 0 || l == cfg.Lambda + 1) return 0.0;
  mpq_class s = b_coeff(l, cfg.D) + b_coeff(l - 1, cfg.D);
  return std::sqrt(1.0 + s.get_d() / (2.0 * cfg.k));
}

std::pair<double, double> Z_values(int l, int d) {
  if (l < 0 || d < 1) throw std::invalid_argument("Z_values: need l >= 0, d >= 1");
  if (d == 1) return {0.5, 0.5};
  double den = 2.0 * l + d - 1;
  return {(l + d - 1) / den, l / den};
}

TCoeffs T_closed(int n, int l_top, int l_p, int l_pm1, int p) {
  double den = 2.0 * l_top + p + n - 2;
  double u = d_coeff(l_p, l_pm1 + 1, p + 1) / den;
  double v = d_coeff(l_p, l_pm1, p + 1) / den;
  return {u, -u, -v, v};
}

TCoeffs T_recursive(int n, const std::vector<int>& upper, int l_p, int l_pm1, int p) {
  if (n < 1 || (int)upper.size() != n - 1) throw std::invalid_argument("T_recursive: need n-1 upper levels");
  int L = l_p, l = l_pm1, j = p;
  TCoeffs t;
  t.T1 = coeff_A(L, l, j) * coeff_G(L + 1, l + 1, j) - coeff_F(L, l, j) * coeff_B(L + 1, l, j);
  t.T2 = coeff_B(L, l, j) * coeff_F(L - 1, l + 1, j) - coeff_G(L, l, j) * coeff_A(L - 1, l, j);
  t.T3 = coeff_C(L, l, j) * coeff_G(L + 1, l - 1, j) - coeff_F(L, l, j) * coeff_D(L + 1, l, j);
  t.T4 = coeff_D(L, l, j) * coeff_F(L - 1, l - 1, j) - coeff_G(L, l, j) * coeff_C(L - 1, l, j);
  int below = l_p;
  for (int m = 2; m <= n; ++m) {
    int top = upper[m - 2];
    int jj = p + m - 1;
    double A2 = std::pow(coeff_A(top, below, jj), 2), B2 = std::pow(coeff_B(top, below, jj), 2);
    double C2 = std::pow(coeff_C(top, below, jj), 2), D2 = std::pow(coeff_D(top, below, jj), 2);
    TCoeffs next;
    next.T1 = A2 * t.T1 + C2 * t.T2;
    next.T2 = B2 * t.T1 + D2 * t.T2;
    next.T3 = A2 * t.T3 + C2 * t.T4;
    next.T4 = B2 * t.T3 + D2 * t.T4;
    t = next;
    below = top;
  }
  return t;
}

TResult T_coeffs(int n, int l_top, int l_p, int l_pm1, int p) {
  if (n < 1 || p < 2 || l_pm1 < 0 || l_p < l_pm1 || l_top < l_p)
    throw std::invalid_argument("T_coeffs: invalid index range");
  if (n == 1 && l_top != l_p) throw std::invalid_argument("T_coeffs: n = 1 needs l_top == l_p");
  std::vector<int> upper;
  for (int m = 2; m < n; ++m) upper.push_back(l_p);
  if (n >= 2) upper.push_back(l_top);
  TResult r;
  r.closed = T_closed(n, l_top, l_p, l_pm1, p);
  r.recursive = T_recursive(n, upper, l_p, l_pm1, p);
  // T3, T4 lower l_{p-1}; at l_{p-1} = 0 with p >= 3 the target does not exist,
  // the ladder products vanish and the closed form does not apply
  const bool lower_ok = p == 2 || l_pm1 >= 1;
  r.discrepancy = std::max(std::abs(r.closed.T1 - r.recursive.T1), std::abs(r.closed.T2 - r.recursive.T2));
  if (lower_ok)
    r.discrepancy = std::max({r.discrepancy, std::abs(r.closed.T3 - r.recursive.T3), std::abs(r.closed.T4 - r.recursive.T4)});
  return r;
}

}  // namespace fuzzyd
