#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzyd/basis.hpp"
#include "fuzzyd/sparse.hpp"

namespace fuzzyd {

enum class ScheduleKind { Consistency, StrongX, Product, Power };

struct Schedule {
  ScheduleKind kind = ScheduleKind::Consistency;
  double alpha = 2.0;  // Power only
  std::string name() const;
};

// "consistency", "strong-x", "product", "power:A" or "power(A)";
// throws std::invalid_argument on unknown names and on A < 2
Schedule parse_schedule(const std::string& s);

// consistency: [L(L+D-2)]^2; strong-x: L dim(L)^2 b(L); power: [L(L+D-2)]^A;
// product: L^2 dim(2L)^3 ((2L)!)^D 2^{LD} ((2L+1)!!)^{2D} b(L) sqrt(dim(L))
double log_k_schedule(const Schedule& s, int D, int Lambda);
double k_schedule(const Schedule& s, int D, int Lambda);  // may be +inf for product
double k_schedule(const std::string& name, int D, int Lambda);

struct XDiagnosticRow {
  int D = 0, Lambda = 0;
  double k = 0;
  double deviation = 0;  // max_h ||x_h - t_h||_op on H_{Lambda,D}
  double boundary = 0;   // same, restricted to the l = Lambda-1 <-> Lambda blocks
  double interior = 0;   // same, with those blocks masked out
  double bound = 0;      // (b(L+1) + 2 b(L) + b(L-1)) / (4k)
};

// t_h is multiplication by t_h compressed to H_{Lambda,D}
XDiagnosticRow x_diagnostic(const FuzzyConfig& cfg);
std::vector<XDiagnosticRow> x_convergence_diagnostic(int D, const std::vector<int>& lambdas, const Schedule& s);

using HarmonicCoeffs = std::map<Chain, cd>;

struct ProductDiagnosticRow {
  int D = 0, Lambda = 0;
  double k = 0;
  double product_residual = 0;  // max_phi ||(f g - (fg)^) phi||
  double f_residual = 0;        // max_phi ||(f^ - f.) phi||
  double f_op_norm = 0;         // ||f^||_op
  double f_bound = 0;           // ||f||_2 + 2 ||f||_inf (sampled)
};

// coefficients of t_h in the harmonic basis
HarmonicCoeffs coordinate_coeffs(int D, int h);

// Test vectors: the basis states with l_d <= 1 and 5 seeded random unit
// vectors on the same levels, so the family is identical for every Lambda >= 1.
std::vector<ProductDiagnosticRow> product_convergence_diagnostic(const HarmonicCoeffs& f, const HarmonicCoeffs& g, int D,
                                                                 const std::vector<int>& lambdas, const Schedule& s);
ProductDiagnosticRow product_diagnostic(const HarmonicCoeffs& f, const HarmonicCoeffs& g, const FuzzyConfig& cfg);

// long format: D,Lambda,k,metric,value
std::string to_csv(const std::vector<XDiagnosticRow>& rows);
std::string to_csv(const std::vector<ProductDiagnosticRow>& rows);

}  // namespace fuzzyd
