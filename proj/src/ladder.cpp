#include "fuzzyd/ladder.hpp"

#include <stdexcept>

#include "fuzzyd/coefficients.hpp"

namespace fuzzyd {

namespace {

const cd I(0.0, 1.0);

struct Branch {
  Chain c;
  cd v;
  int shift;  // change of the entry one level below the current one
};

// position in the chain of level n (l_n), chain length d
inline int pos(int d, int n) { return d - n; }

}  // namespace

std::vector<Transition> t_action(const Chain& c, int h) {
  const int d = (int)c.size();
  const int D = d + 1;
  if (d < 1 || h < 1 || h > D) throw std::invalid_argument("t_action: index out of range");

  std::vector<Branch> br;
  int start;
  if (h <= 2) {
    int l1 = c[pos(d, 1)];
    cd up = (h == 1) ? cd(0.5) : 1.0 / (2.0 * I);
    cd dn = (h == 1) ? cd(0.5) : -1.0 / (2.0 * I);
    Chain a = c, b = c;
    a[pos(d, 1)] = l1 + 1;
    b[pos(d, 1)] = l1 - 1;
    br.push_back({a, up, +1});
    br.push_back({b, dn, -1});
    start = 2;
  } else {
    int n = h - 1;
    int L = c[pos(d, n)], l = c[pos(d, n - 1)];
    Chain a = c, b = c;
    a[pos(d, n)] = L + 1;
    b[pos(d, n)] = L - 1;
    br.push_back({a, coeff_F(L, l, n), +1});
    br.push_back({b, coeff_G(L, l, n), -1});
    start = h;
  }

  for (int n = start; n <= d; ++n) {
    int L = c[pos(d, n)], l = c[pos(d, n - 1)];
    std::vector<Branch> next;
    next.reserve(br.size() * 2);
    for (const auto& b : br) {
      double up = b.shift > 0 ? coeff_A(L, l, n) : coeff_C(L, l, n);
      double dn = b.shift > 0 ? coeff_B(L, l, n) : coeff_D(L, l, n);
      if (up != 0.0) {
        Chain x = b.c;
        x[pos(d, n)] = L + 1;
        next.push_back({x, b.v * up, +1});
      }
      if (dn != 0.0) {
        Chain x = b.c;
        x[pos(d, n)] = L - 1;
        next.push_back({x, b.v * dn, -1});
      }
    }
    br.swap(next);
  }

  std::vector<Transition> out;
  for (auto& b : br) {
    if (b.v == 0.0) continue;
    if (d == 1 || is_valid_chain(b.c)) out.emplace_back(std::move(b.c), b.v);
  }
  return out;
}

std::vector<Transition> L_action(const Chain& c, int h, int j) {
  const int d = (int)c.size();
  const int D = d + 1;
  if (h < 1 || h >= j || j > D) throw std::invalid_argument("L_action: need 1 <= h < j <= D");
  std::vector<Transition> out;
  if (j == 2) {
    int l1 = c.back();
    if (l1 != 0) out.emplace_back(c, cd(l1));
    return out;
  }
  // sub-chain of the so(j) system is (l_{j-1}, ..., l_1); its inner part
  // (l_{j-2}, ..., l_1) is a chain of the so(j-1) system
  const int top_pos = d - (j - 1);
  const int L = c[top_pos];
  const int below = c[top_pos + 1];
  Chain inner(c.begin() + top_pos + 1, c.end());
  for (auto& [u, R] : t_action(inner, h)) {
    int nb = u.front();
    cd v;
    // sign fixed by [L_hj, x_j] = (1/i) x_h with L_12 = l_1
    if (nb == below - 1)
      v = -(1.0 / I) * d_coeff(L, below, j) * R;
    else
      v = (1.0 / I) * d_coeff(L, below + 1, j) * R;
    if (v == 0.0) continue;
    Chain x(c.begin(), c.begin() + top_pos + 1);
    x.insert(x.end(), u.begin(), u.end());
    if (!is_valid_chain(x)) continue;
    out.emplace_back(std::move(x), v);
  }
  return out;
}

}  // namespace fuzzyd
