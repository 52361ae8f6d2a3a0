#include "doctest.h"

#include <map>
#include <vector>

#include "quivar/oracles.hpp"
#include "quivar/tensor.hpp"

using namespace quivar;

TEST_CASE("framed dimension data determines a weight") {
  Quiver a1 = standardQuiver("A1");
  CHECK(weightOf(a1, {0}, {3}) == Weight{3});
  CHECK(weightOf(a1, {1}, {2}) == Weight{0});
  CHECK(weightOf(a1, {2}, {2}) == Weight{-2});

  Quiver a2 = standardQuiver("A2");
  CHECK(weightOf(a2, {0, 0}, {1, 1}) == Weight{1, 1});
  CHECK(weightOf(a2, {1, 1}, {1, 1}) == Weight{0, 0});
  CHECK(weightOf(a2, {1, 0}, {1, 1}) == Weight{-1, 2});

  CHECK_THROWS_AS(weightOf(standardQuiver("Jordan"), {1}, {1}), UnsupportedType);
  CHECK_THROWS_AS(weightOf(a2, {1}, {1, 1}), std::invalid_argument);

  CHECK(isDominantWeight({0, 3}));
  CHECK(!isDominantWeight({1, -1}));
}

TEST_CASE("weight multiplicities of small modules") {
  Quiver a1 = standardQuiver("A1");
  std::map<Weight, long long> sl2 = weightMultiplicities(a1, {2});
  REQUIRE(sl2.size() == 3);
  CHECK(sl2.at({2}) == 1);
  CHECK(sl2.at({0}) == 1);
  CHECK(sl2.at({-2}) == 1);

  Quiver a2 = standardQuiver("A2");
  std::map<Weight, long long> adj = weightMultiplicities(a2, {1, 1});
  REQUIRE(adj.size() == 7);
  CHECK(adj.at({1, 1}) == 1);
  CHECK(adj.at({-1, 2}) == 1);
  CHECK(adj.at({2, -1}) == 1);
  CHECK(adj.at({0, 0}) == 2);
  CHECK(adj.at({-1, -1}) == 1);

  std::map<Weight, long long> trivial = weightMultiplicities(a2, {0, 0});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.at({0, 0}) == 1);

  CHECK_THROWS_AS(weightMultiplicities(a2, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(weightMultiplicities(standardQuiver("A1~"), {1, 1}),
                  UnsupportedType);
}

TEST_CASE("weight multiplicities agree with the alternating-sum oracle") {
  Quiver a2 = standardQuiver("A2");
  for (int p = 0; p <= 2; ++p)
    for (int r = 0; r <= 2; ++r) {
      std::map<Weight, long long> table = weightMultiplicities(a2, {p, r});
      long long total = 0;
      for (const auto& [mu, mult] : table) {
        CHECK(mult == oracles::weightMultiplicityBySum(a2, {p, r}, mu));
        total += mult;
      }
      CHECK(total == irrepDim(a2, {p, r}));
    }

  Quiver a3 = standardQuiver("A3");
  std::map<Weight, long long> fund = weightMultiplicities(a3, {0, 1, 0});
  long long total = 0;
  for (const auto& [mu, mult] : fund) {
    CHECK(mult == oracles::weightMultiplicityBySum(a3, {0, 1, 0}, mu));
    total += mult;
  }
  CHECK(total == 6);
}

TEST_CASE("module dimensions from the product formula") {
  Quiver a1 = standardQuiver("A1");
  for (int n = 0; n <= 6; ++n) CHECK(irrepDim(a1, {n}) == n + 1);

  Quiver a2 = standardQuiver("A2");
  CHECK(irrepDim(a2, {0, 0}) == 1);
  CHECK(irrepDim(a2, {1, 0}) == 3);
  CHECK(irrepDim(a2, {0, 1}) == 3);
  CHECK(irrepDim(a2, {1, 1}) == 8);
  CHECK(irrepDim(a2, {3, 0}) == 10);
  CHECK(irrepDim(a2, {2, 2}) == 27);

  CHECK(irrepDim(standardQuiver("A3"), {1, 0, 0}) == 4);
  CHECK(irrepDim(standardQuiver("D4"), {0, 0, 0, 1}) == 8);

  CHECK_THROWS_AS(irrepDim(a2, {-1, 0}), std::invalid_argument);
}

TEST_CASE("tensor decomposition worked examples") {
  Quiver a1 = standardQuiver("A1");
  std::map<Weight, long long> cg = tensorDecompose(a1, {1}, {1});
  REQUIRE(cg.size() == 2);
  CHECK(cg.at({2}) == 1);
  CHECK(cg.at({0}) == 1);

  Quiver a2 = standardQuiver("A2");
  std::map<Weight, long long> mixed = tensorDecompose(a2, {1, 0}, {0, 1});
  REQUIRE(mixed.size() == 2);
  CHECK(mixed.at({1, 1}) == 1);
  CHECK(mixed.at({0, 0}) == 1);

  std::map<Weight, long long> adjSq = tensorDecompose(a2, {1, 1}, {1, 1});
  REQUIRE(adjSq.size() == 5);
  CHECK(adjSq.at({2, 2}) == 1);
  CHECK(adjSq.at({3, 0}) == 1);
  CHECK(adjSq.at({0, 3}) == 1);
  CHECK(adjSq.at({1, 1}) == 2);
  CHECK(adjSq.at({0, 0}) == 1);

  // unit factor, symmetry, total dimension
  CHECK(tensorDecompose(a2, {2, 1}, {0, 0}) ==
        std::map<Weight, long long>{{{2, 1}, 1}});
  for (int p = 0; p <= 2; ++p)
    for (int r = 0; r <= 2; ++r) {
      std::map<Weight, long long> lhs = tensorDecompose(a2, {p, r}, {1, 1});
      CHECK(lhs == tensorDecompose(a2, {1, 1}, {p, r}));
      long long sum = 0;
      for (const auto& [nu, mult] : lhs) sum += mult * irrepDim(a2, nu);
      CHECK(sum == irrepDim(a2, {p, r}) * 8);
    }

  CHECK_THROWS_AS(tensorDecompose(a2, {1, 0}, {0, -1}), std::invalid_argument);
}

TEST_CASE("tensor decomposition agrees with the summation oracle") {
  Quiver a2 = standardQuiver("A2");
  for (int p = 0; p <= 2; ++p)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 2; ++s)
        for (int t = 0; t <= 2; ++t)
          CHECK(tensorDecompose(a2, {p, r}, {s, t}) ==
                oracles::tensorBySum(a2, {p, r}, {s, t}));

  Quiver a1 = standardQuiver("A1");
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      CHECK(tensorDecompose(a1, {a}, {b}) == oracles::tensorBySum(a1, {a}, {b}));
}

TEST_CASE("tensor multiplicity from framed dimension data") {
  Quiver a1 = standardQuiver("A1");
  // V(1) (x) V(1): the v0 = 0 target is V(2), the v0 = 1 target is V(0)
  CHECK(multiplicityN(a1, {0}, {1}, {0}, {1}, {0}, {2}) == 1);
  CHECK(multiplicityN(a1, {0}, {1}, {0}, {1}, {1}, {2}) == 1);
  // V(2) (x) V(0) contains no trivial summand: dominant target, absent
  CHECK(multiplicityN(a1, {0}, {2}, {0}, {0}, {1}, {2}) == 0);
  // V(0) (x) V(1) = V(1) has no V(3) piece either
  CHECK(multiplicityN(a1, {1}, {2}, {0}, {1}, {0}, {3}) == 0);

  Quiver a2 = standardQuiver("A2");
  CHECK(multiplicityN(a2, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 0}, {1, 1}) == 1);
  CHECK(multiplicityN(a2, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 1}) == 1);
  // v0 = (1,0) makes the target weight non-dominant
  CHECK_THROWS_AS(multiplicityN(a2, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {1, 0}, {1, 1}),
                  std::invalid_argument);

  CHECK_THROWS_AS(multiplicityN(a1, {0}, {1}, {0}, {1}, {0}, {3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplicityN(a1, {1}, {1}, {0}, {1}, {0}, {2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplicityN(a1, {0}, {1}, {0}, {1}, {2}, {2}),
                  std::invalid_argument);
}

TEST_CASE("tensor multiplicity matches the rank-one branching rule") {
  Quiver a1 = standardQuiver("A1");
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 6; ++c) {
        // realize V(a) (x) V(b) -> V(c) through framed data when possible
        int v1 = 0, w1 = a, v2 = 0, w2 = b;
        int w = w1 + w2;
        if ((w - c) % 2 != 0 || w < c) continue;
        int v0 = (w - c) / 2;
        CHECK(multiplicityN(a1, {v1}, {w1}, {v2}, {w2}, {v0}, {w}) ==
              oracles::clebschGordanA1(a, b, c));
      }
}
