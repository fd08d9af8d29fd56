#include "fuzzyd/basis.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fuzzyd {

std::string to_string(const Chain& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

bool is_valid_chain(const Chain& c) {
  if (c.empty()) return false;
  if (c.front() < 0) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    bool last = (i + 2 == c.size());
    int next = last ? std::abs(c[i + 1]) : c[i + 1];
    if (c[i] < next) return false;
  }
  return true;
}

void FuzzyConfig::validate() const {
  if (D < 3) throw std::invalid_argument("D must be >= 3");
  if (Lambda < 0) throw std::invalid_argument("Lambda must be >= 0");
  if (!(k > 0) || !std::isfinite(k)) throw std::invalid_argument("k must be positive and finite");
  double lhs = double(Lambda) * double(Lambda + D - 2);
  if (!(lhs < 2.0 * std::sqrt(2.0 * k)))
    throw std::invalid_argument("consistency bound Lambda(Lambda+D-2) < 2 sqrt(2k) violated");
}

FuzzyConfig make_config(int D, int Lambda, double k) {
  FuzzyConfig cfg{D, Lambda, k};
  cfg.validate();
  return cfg;
}

namespace {

unsigned long long binom(long long n, long long r) {
  if (r < 0 || n < r) return 0;
  if (r > n - r) r = n - r;
  unsigned long long v = 1;
  for (long long i = 1; i <= r; ++i) v = v * (unsigned long long)(n - r + i) / (unsigned long long)i;
  return v;
}

void extend(Chain& prefix, int remaining, int bound, std::vector<Chain>& out) {
  if (remaining == 1) {
    for (int l1 = -bound; l1 <= bound; ++l1) {
      prefix.push_back(l1);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int l = 0; l <= bound; ++l) {
    prefix.push_back(l);
    extend(prefix, remaining - 1, l, out);
    prefix.pop_back();
  }
}

}  // namespace

long long dimension(int D, int Lambda) {
  if (D < 3) throw std::invalid_argument("D must be >= 3");
  if (Lambda < 0) throw std::invalid_argument("Lambda must be >= 0");
  if (Lambda == 0) return 1;
  unsigned long long num = binom(Lambda + D - 2, Lambda - 1) * (unsigned long long)(2 * Lambda + D - 1);
  return (long long)(num / (unsigned long long)Lambda);
}

long long irrep_dim(int D, int l) {
  if (D < 2) throw std::invalid_argument("D must be >= 2");
  if (l < 0) return 0;
  if (l == 0) return 1;
  if (D == 2) return 2;
  unsigned long long num = binom(D + l - 3, l - 1) * (unsigned long long)(D + 2 * l - 2);
  return (long long)(num / (unsigned long long)l);
}

std::vector<Chain> chains_with_top(int D, int l) {
  if (D < 2) throw std::invalid_argument("D must be >= 2");
  std::vector<Chain> out;
  if (l < 0) return out;
  if (D == 2) {
    if (l == 0) return {Chain{0}};
    return {Chain{-l}, Chain{l}};
  }
  Chain prefix{l};
  extend(prefix, D - 2, l, out);
  return out;
}

BasisMap::BasisMap(int D, int Lambda) : D_(D), Lambda_(Lambda) {
  if (D < 3) throw std::invalid_argument("D must be >= 3");
  if (Lambda < 0) throw std::invalid_argument("Lambda must be >= 0");
  for (int l = 0; l <= Lambda; ++l) {
    auto block = chains_with_top(D, l);
    chains_.insert(chains_.end(), block.begin(), block.end());
  }
  for (std::size_t i = 0; i < chains_.size(); ++i) index_.emplace(chains_[i], i);
}

const Chain& BasisMap::chain_at(std::size_t i) const {
  if (i >= chains_.size()) throw std::out_of_range("chain ordinal out of range");
  return chains_[i];
}

std::size_t BasisMap::index_of(const Chain& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw std::out_of_range("chain not in basis: " + to_string(c));
  return it->second;
}

nlohmann::json BasisMap::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : chains_) j.push_back(c);
  return j;
}

BasisMap enumerate_chains(int D, int Lambda) { return BasisMap(D, Lambda); }

}  // namespace fuzzyd
