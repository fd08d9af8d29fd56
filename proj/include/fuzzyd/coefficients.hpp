#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fuzzyd/basis.hpp"

namespace fuzzyd {

// Matrix elements of cos and sin on normalized generalized Legendre functions
// at level j. cos: F raises L, G lowers. sin with the lower index raised: A, B;
// with the lower index lowered: C, D.
struct LadderCoeffs {
  double A = 0, B = 0, C = 0, D = 0, F = 0, G = 0;
};

// throws std::domain_error for L < |l| or j < 2
LadderCoeffs ladder_coeffs(int L, int l, int j);

// Unchecked single coefficients; any vanishing or negative radicand gives 0.
double coeff_A(int L, int l, int j);
double coeff_B(int L, int l, int j);
double coeff_C(int L, int l, int j);
double coeff_D(int L, int l, int j);
double coeff_F(int L, int l, int j);
double coeff_G(int L, int l, int j);

// sqrt((L-l+1)(L+l+D-3)), 0 when the product is not positive
double d_coeff(int L, int l, int D);

// (D^2 - 4D + 3 + 4 l (l+D-2)) / 4, exact
mpq_class b_coeff(int l, int D);
double b_value(int l, int D);

// canonical c_{l,D}: 0 at l = 0 and l = Lambda+1, else sqrt(1 + (b(l)+b(l-1))/(2k)).
// throws std::out_of_range outside 0..Lambda+1
double c_coeff(int l, const FuzzyConfig& cfg);

// up/down weights of t_h on S^d at level l: (l+d-1)/(2l+d-1), l/(2l+d-1).
// d = 1 is the circle, where both are 1/2.
std::pair<double, double> Z_values(int l, int d);

struct TCoeffs {
  double T1 = 0, T2 = 0, T3 = 0, T4 = 0;
};

// closed form of T^n: +-d_{l_p, l_{p-1}+1, p+1} and +-d_{l_p, l_{p-1}, p+1}
// over (2 l_top + p + n - 2)
TCoeffs T_closed(int n, int l_top, int l_p, int l_pm1, int p);

// T^1 from ladder products, T^n by the squared-ladder recursion. `upper` holds
// (l_{p+1}, ..., l_{p+n-1}); its size must be n-1.
TCoeffs T_recursive(int n, const std::vector<int>& upper, int l_p, int l_pm1, int p);

struct TResult {
  TCoeffs closed;
  TCoeffs recursive;
  double discrepancy = 0;
};

// Intermediate levels l_{p+1}..l_{p+n-2} are set to l_p.
// throws std::invalid_argument on n < 1, p < 2, l_pm1 < 0 or l_top < l_p < l_pm1
TResult T_coeffs(int n, int l_top, int l_p, int l_pm1, int p);

}  // namespace fuzzyd
