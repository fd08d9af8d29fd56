#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace fuzzyd {

// (l_d, l_{d-1}, ..., l_2, l_1), d = D-1
using Chain = std::vector<int>;

std::string to_string(const Chain& c);

// true iff l_d >= ... >= l_2 >= |l_1| and l_d >= 0
bool is_valid_chain(const Chain& c);

struct FuzzyConfig {
  int D = 3;
  int Lambda = 1;
  double k = 1.0;

  int d() const { return D - 1; }
  // throws std::invalid_argument on D < 3, Lambda < 0, k <= 0 or a violated
  // consistency bound Lambda(Lambda+D-2) < 2 sqrt(2k)
  void validate() const;
};

FuzzyConfig make_config(int D, int Lambda, double k);

// number of chains with l_d <= Lambda; 1 at Lambda = 0
long long dimension(int D, int Lambda);

// number of chains with l_d == l, i.e. dim of the so(D) irrep V_{l,D}
long long irrep_dim(int D, int l);

// all chains (of length D-1) with fixed top entry l, lexicographic ascending.
// D >= 2 accepted here (the circle: chains (l_1) with l_1 = +-l)
std::vector<Chain> chains_with_top(int D, int l);

class BasisMap {
 public:
  BasisMap() = default;
  BasisMap(int D, int Lambda);

  int D() const { return D_; }
  int Lambda() const { return Lambda_; }
  std::size_t size() const { return chains_.size(); }
  const std::vector<Chain>& chains() const { return chains_; }

  // throws std::out_of_range
  const Chain& chain_at(std::size_t i) const;
  // throws std::out_of_range when the chain is not in the basis
  std::size_t index_of(const Chain& c) const;
  bool contains(const Chain& c) const { return index_.count(c) != 0; }

  nlohmann::json to_json() const;

 private:
  int D_ = 0;
  int Lambda_ = 0;
  std::vector<Chain> chains_;
  std::map<Chain, std::size_t> index_;
};

// throws std::invalid_argument for D < 3 or Lambda < 0
BasisMap enumerate_chains(int D, int Lambda);

}  // namespace fuzzyd
