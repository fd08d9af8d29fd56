#pragma once

#include <complex>
#include <map>
#include <vector>

namespace fuzzyd {

using cd = std::complex<double>;
// exponents of (t_1, ..., t_D)
using Exponent = std::vector<int>;

// complex polynomial in t_1..t_D
struct Polynomial {
  int D = 0;
  std::map<Exponent, cd> terms;

  Polynomial() = default;
  explicit Polynomial(int D_) : D(D_) {}

  static Polynomial monomial(int D, const Exponent& a, cd v = 1.0);
  static Polynomial coordinate(int D, int h);  // t_h, 1-based
  static Polynomial constant(int D, cd v);

  int degree() const;  // max total degree, -1 for zero
  double max_abs() const;
  cd evaluate(const std::vector<double>& t) const;
  void prune(double tol = 0.0);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(cd s);
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(cd s, Polynomial a);

Polynomial conj(const Polynomial& p);
Polynomial laplacian(const Polynomial& p);
Polynomial times_r2(const Polynomial& p);
Polynomial derivative(const Polynomial& p, int h);  // d/dt_h, 1-based

// L_{h,j} = (1/i)(t_h d_j - t_j d_h)
Polynomial apply_L(const Polynomial& p, int h, int j);
// sum_{h<j<=q} L_{h,j}^2
Polynomial apply_casimir(const Polynomial& p, int q);

// harmonic part of a homogeneous polynomial of degree n:
// sum_j (-1)^j r^{2j} Delta^j P / (2^j j! prod_{i=1..j}(D + 2n - 2 - 2i))
Polynomial harmonic_projection(const Polynomial& p);

// Q with P = r^2 Q, by division on the t_D^2 term; `remainder` receives the
// max coefficient left over (0 when P is divisible)
Polynomial divide_r2(const Polynomial& p, double* remainder = nullptr);

// P = sum_j r^{2j} H_{n-2j}; returns H_n, H_{n-2}, ... (homogeneous P only)
std::vector<Polynomial> harmonic_decomposition(const Polynomial& p, double* remainder = nullptr);

// 0 if any exponent is odd, else 2 prod Gamma((a_i+1)/2) / Gamma(sum (a_i+1)/2)
double sphere_integral(const Exponent& a, int D);
double sphere_volume(int D);
// sphere_integral / sphere_volume = prod (a_i-1)!! / prod_{k<|a|/2} (D+2k)
double moment_ratio(const Exponent& a, int D);

// integral over S^{D-1} of conj(a) b
cd sphere_inner(const Polynomial& a, const Polynomial& b);

}  // namespace fuzzyd
