#pragma once

#include <functional>
#include <vector>

#include "fuzzyd/basis.hpp"

namespace fuzzyd {

struct RadialParams {
  double k_lD = 0;     // 3 b(l,D) + 2k
  double r_tilde = 0;  // well centre (4b + 2k)/(3b + 2k)
  double V0 = 0;       // offset fixing E_{0,0,D} = 0
  double E0l = 0;      // ground energy of the l-sector
  double M = 0;        // k_lD^{1/8} / pi^{1/4}
};

RadialParams radial_params(int l, const FuzzyConfig& cfg);

// f_{0,l,D}(r) = M r^{-(D-1)/2} exp(-sqrt(k_lD)(r - r_tilde)^2 / 2)
std::function<double(double)> radial_wavefunction(int l, const FuzzyConfig& cfg);
// g = f r^{(D-1)/2}
std::function<double(double)> radial_g(int l, const FuzzyConfig& cfg);

// n-point Gauss-Hermite rule for weight exp(-u^2) (Golub-Welsch)
struct GaussHermite {
  std::vector<double> nodes, weights;
};
const GaussHermite& gauss_hermite(int n);

enum class RadialWeight { unit, r };

// int g_l g_lp w(r) dr over the real line, Gauss-Hermite about the joint
// centre. throws std::domain_error unless |l - lp| == 1
double radial_overlap(int l, int lp, const FuzzyConfig& cfg, RadialWeight w, int nodes = 200);

// int_0^inf f^2 r^{D-1} dr by adaptive Gauss-Kronrod
double radial_norm(int l, const FuzzyConfig& cfg);

// leading behaviour: 1 + (b(l)+b(lp))/(4k) for weight r, 1 for unit
double radial_overlap_leading(int l, int lp, const FuzzyConfig& cfg, RadialWeight w);

// least-squares slope of log|y| against log x
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fuzzyd
