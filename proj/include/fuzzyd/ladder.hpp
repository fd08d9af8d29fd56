#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fuzzyd/basis.hpp"

namespace fuzzyd {

using cd = std::complex<double>;
using Transition = std::pair<Chain, cd>;

// Multiplication by t_h (1 <= h <= D) on the harmonic labelled by a chain of
// length D-1, following the ladder rules level by level. Angles:
//   t_D = cos th_d, t_v = sin th_d ... sin th_v cos th_{v-1} (v >= 3),
//   t_1 +- i t_2 = sin th_d ... sin th_2 e^{+-i th_1}.
// A chain of length 1 is the circle (D = 2). Only valid targets are returned.
std::vector<Transition> t_action(const Chain& c, int h);

// so(j) generator L_{h,j} (1 <= h < j <= D, D = c.size()+1) acting on the
// sub-chain (l_{j-1}, ..., l_1); higher entries are untouched.
std::vector<Transition> L_action(const Chain& c, int h, int j);

}  // namespace fuzzyd
