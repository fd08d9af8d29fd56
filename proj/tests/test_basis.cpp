#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "fuzzyd/basis.hpp"

using namespace fuzzyd;

namespace {

// brute-force oracle: every integer tuple in the box, filtered by the chain rule
std::vector<Chain> brute_chains(int D, int Lambda) {
  const int d = D - 1;
  std::vector<Chain> out;
  Chain c(d);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      if (is_valid_chain(c)) out.push_back(c);
      return;
    }
    for (int v = (i == d - 1 ? -Lambda : 0); v <= Lambda; ++v) {
      c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("enumeration matches brute force and the dimension formula") {
  for (int D = 3; D <= 6; ++D)
    for (int L = 0; L <= 8; ++L) {
      BasisMap b = enumerate_chains(D, L);
      auto brute = brute_chains(D, L);
      CHECK(b.size() == brute.size());
      CHECK((long long)b.size() == dimension(D, L));
      CHECK(b.chains() == brute);  // brute force is generated in lexicographic order
    }
}

TEST_CASE("worked examples") {
  BasisMap b = enumerate_chains(3, 1);
  REQUIRE(b.size() == 4);
  CHECK(b.chain_at(0) == Chain{0, 0});
  CHECK(b.chain_at(1) == Chain{1, -1});
  CHECK(b.chain_at(2) == Chain{1, 0});
  CHECK(b.chain_at(3) == Chain{1, 1});
  CHECK(b.index_of({0, 0}) == 0);
  CHECK(enumerate_chains(5, 0).chains() == std::vector<Chain>{{0, 0, 0, 0}});
  CHECK(dimension(4, 1) == 5);
  CHECK(dimension(5, 1) == 6);
  CHECK(dimension(4, 2) == 14);
  for (int L = 0; L <= 8; ++L) {
    CHECK(3 * dimension(4, L) == (L + 1) * (L + 2) * (2 * L + 3) / 2);
    CHECK(12 * dimension(5, L) == (L + 1) * (L + 2) * (L + 2) * (L + 3));
  }
}

TEST_CASE("branching: irrep dimensions sum to the total") {
  for (int D = 3; D <= 6; ++D) {
    long long sum = 0;
    for (int l = 0; l <= 8; ++l) {
      CHECK((long long)chains_with_top(D, l).size() == irrep_dim(D, l));
      sum += irrep_dim(D, l);
      CHECK(sum == dimension(D, l));
    }
  }
  CHECK(irrep_dim(3, 2) == 5);
  CHECK(irrep_dim(4, 2) == 9);
}

TEST_CASE("index_of and chain_at are inverse, errors on unknown input") {
  BasisMap b(5, 3);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.chain_at(i)) == i);
  CHECK_THROWS_AS(b.chain_at(b.size()), std::out_of_range);
  CHECK_THROWS_AS(b.index_of({4, 0, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(enumerate_chains(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_chains(3, -1), std::invalid_argument);
}

TEST_CASE("deterministic ordering and JSON") {
  CHECK(BasisMap(4, 3).chains() == BasisMap(4, 3).chains());
  auto j = BasisMap(3, 1).to_json();
  CHECK(j.dump() == "[[0,0],[1,-1],[1,0],[1,1]]");
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(make_config(4, 2, 64));
  CHECK_THROWS_AS(make_config(2, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_config(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_config(3, -1, 10), std::invalid_argument);
  // Lambda(Lambda+D-2) = 8 needs 2 sqrt(2k) > 8, i.e. k > 8
  CHECK_THROWS_AS(make_config(4, 2, 8), std::invalid_argument);
  CHECK_NOTHROW(make_config(4, 2, 8.01));
}
