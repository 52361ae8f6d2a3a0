#include "doctest.h"

#include <random>
#include <set>

#include "quivar/oracles.hpp"
#include "quivar/quiver.hpp"
#include "quivar/roots.hpp"

using namespace quivar;

TEST_CASE("cartan matrices of the standard examples") {
  Quiver a2 = standardQuiver("A2");
  CHECK(a2.cartan() == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});

  Quiver jordan = standardQuiver("Jordan");
  CHECK(jordan.cartan() == std::vector<std::vector<long long>>{{0}});

  Quiver aff = standardQuiver("A1~");
  CHECK(aff.cartan() == std::vector<std::vector<long long>>{{2, -2}, {-2, 2}});
}

TEST_CASE("cartan matrix is symmetric and matches the bilinear form on units") {
  for (const char* name : {"A3", "D4", "E6", "Jordan", "A1~"}) {
    Quiver q = standardQuiver(name);
    int n = q.numVertices();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(q.cartan()[i][j] == q.cartan()[j][i]);
        DimVec ei(n, 0), ej(n, 0);
        ei[i] = 1;
        ej[j] = 1;
        CHECK(q.bilinear(ei, ej) == q.cartan()[i][j]);
      }
  }
}

TEST_CASE("bilinear form worked values") {
  CHECK(standardQuiver("A2").bilinear({1, 0}, {0, 1}) == -1);
  CHECK(standardQuiver("Jordan").bilinear({5}, {7}) == 0);
  CHECK(standardQuiver("A1~").bilinear({1, 1}, {1, 1}) == 0);
}

TEST_CASE("arrow involution and sign function") {
  Quiver q = standardQuiver("Jordan");
  REQUIRE(q.numArrows() == 2);
  CHECK(q.eps(0) == 1);
  CHECK(q.eps(1) == -1);
  CHECK(q.reverse(0) == 1);
  CHECK(q.reverse(1) == 0);

  Quiver aff = standardQuiver("A1~");
  for (int h = 0; h < aff.numArrows(); ++h) {
    CHECK(aff.reverse(aff.reverse(h)) == h);
    CHECK(aff.reverse(h) != h);
    CHECK(aff.head(aff.reverse(h)) == aff.tail(h));
    CHECK(aff.tail(aff.reverse(h)) == aff.head(h));
    CHECK(aff.eps(aff.reverse(h)) == -aff.eps(h));
  }
}

TEST_CASE("eps-antisymmetry: signed sums of reversal-symmetric data vanish") {
  for (const char* name : {"A2", "D4", "Jordan", "A1~"}) {
    Quiver q = standardQuiver(name);
    long long total = 0;
    for (int h = 0; h < q.numArrows(); ++h) {
      int lo = std::min(q.tail(h), q.head(h));
      int hi = std::max(q.tail(h), q.head(h));
      total += q.eps(h) * (100 * lo + hi + 7);
    }
    CHECK(total == 0);
  }
}

TEST_CASE("graph structure of the built-in quivers") {
  Quiver a3 = standardQuiver("A3");
  CHECK(a3.numVertices() == 3);
  CHECK(a3.numEdges() == 2);
  CHECK(a3.connected());
  CHECK(!a3.hasLoopAt(0));

  Quiver d4 = standardQuiver("D4");
  CHECK(d4.numVertices() == 4);
  CHECK(d4.numEdges() == 3);
  // vertex 0 is the center
  CHECK(d4.arrowsInto(0).size() + d4.arrowsOutOf(0).size() == 6);

  Quiver e8 = standardQuiver("E8");
  CHECK(e8.numVertices() == 8);
  CHECK(e8.numEdges() == 7);

  Quiver jordan = standardQuiver("Jordan");
  CHECK(jordan.loopsAt(0) == 1);
  CHECK(jordan.edgeIsLoop(0));

  CHECK_THROWS_AS(standardQuiver("B2"), std::invalid_argument);

  Quiver disconnected({"x", "y"}, {});
  CHECK(!disconnected.connected());
}

TEST_CASE("vertex lookup by label") {
  Quiver q = standardQuiver("A2");
  CHECK(q.vertexIndex(q.vertexLabel(0)) == 0);
  CHECK(q.vertexIndex(q.vertexLabel(1)) == 1);
  CHECK_THROWS_AS(q.vertexIndex("nope"), std::invalid_argument);
}

TEST_CASE("type classification") {
  TypeClass a2 = classifyType(standardQuiver("A2"));
  CHECK(a2.type == QuiverType::finite);
  CHECK(a2.delta.empty());

  TypeClass jordan = classifyType(standardQuiver("Jordan"));
  CHECK(jordan.type == QuiverType::affine);
  CHECK(jordan.delta == DimVec{1});

  TypeClass aff = classifyType(standardQuiver("A1~"));
  CHECK(aff.type == QuiverType::affine);
  CHECK(aff.delta == DimVec{1, 1});

  // three parallel edges: the form has a negative direction
  Quiver triple({"0", "1"}, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(classifyType(triple).type == QuiverType::indefinite);

  // one vertex with two loops: diagonal entry -2
  Quiver twoLoops({"0"}, {{0, 0}, {0, 0}});
  CHECK(classifyType(twoLoops).type == QuiverType::indefinite);

  for (const char* name : {"A1", "A5", "D4", "D5", "E6", "E7", "E8"})
    CHECK(classifyType(standardQuiver(name)).type == QuiverType::finite);

  Quiver disconnected({"x", "y"}, {});
  CHECK_THROWS_AS(classifyType(disconnected), std::invalid_argument);
}

TEST_CASE("affine delta is primitive and spans the kernel") {
  // extended D4: center with four prongs, delta = (2,1,1,1,1)
  Quiver d4aff({"c", "1", "2", "3", "4"}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  TypeClass t = classifyType(d4aff);
  REQUIRE(t.type == QuiverType::affine);
  CHECK(t.delta == DimVec{2, 1, 1, 1, 1});
  for (long long x : d4aff.applyCartan(t.delta)) CHECK(x == 0);
}

TEST_CASE("simple reflections") {
  Quiver a2 = standardQuiver("A2");
  CHECK(reflect(a2, {1, 0}, 1) == DimVec{1, 1});
  CHECK(reflect(a2, {1, 0}, 0) == DimVec{-1, 0});
  CHECK_THROWS_AS(reflect(standardQuiver("Jordan"), {1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(reflect(a2, {1, 0}, 5), std::invalid_argument);
}

TEST_CASE("reflections are involutions preserving the form") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (const char* name : {"A3", "D4", "A1~"}) {
    Quiver q = standardQuiver(name);
    for (int trial = 0; trial < 20; ++trial) {
      DimVec v(q.numVertices());
      for (int& x : v) x = entry(rng);
      for (int i = 0; i < q.numVertices(); ++i) {
        DimVec r = reflect(q, v, i);
        CHECK(reflect(q, r, i) == v);
        CHECK(q.bilinear(r, r) == q.bilinear(v, v));
      }
    }
  }
}

TEST_CASE("fundamental region membership") {
  CHECK(inFundamentalRegion(standardQuiver("Jordan"), {3}));
  CHECK(!inFundamentalRegion(standardQuiver("A2"), {1, 1}));
  CHECK(inFundamentalRegion(standardQuiver("A1~"), {1, 1}));
  // disconnected support
  CHECK(!inFundamentalRegion(standardQuiver("A3"), {1, 0, 1}));
  CHECK_THROWS_AS(inFundamentalRegion(standardQuiver("A2"), {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(inFundamentalRegion(standardQuiver("A2"), {-1, 1}),
                  std::invalid_argument);
}

namespace {

bool sameRootList(const std::vector<Root>& a, const std::vector<Root>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("root enumeration worked examples") {
  std::vector<Root> a2 = enumerateRoots(standardQuiver("A2"), {1, 1});
  REQUIRE(a2.size() == 3);
  CHECK(a2[0].v == DimVec{0, 1});
  CHECK(a2[1].v == DimVec{1, 0});
  CHECK(a2[2].v == DimVec{1, 1});
  for (const Root& r : a2) CHECK(!r.imaginary);

  std::vector<Root> jordan = enumerateRoots(standardQuiver("Jordan"), {3});
  REQUIRE(jordan.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(jordan[k].v == DimVec{k + 1});
    CHECK(jordan[k].imaginary);
  }

  std::vector<Root> aff = enumerateRoots(standardQuiver("A1~"), {2, 2});
  std::set<DimVec> reals, imags;
  for (const Root& r : aff) (r.imaginary ? imags : reals).insert(r.v);
  CHECK(reals == std::set<DimVec>{{1, 0}, {0, 1}, {2, 1}, {1, 2}});
  CHECK(imags == std::set<DimVec>{{1, 1}, {2, 2}});
}

TEST_CASE("root enumeration matches the closed-form oracles") {
  CHECK(sameRootList(enumerateRoots(standardQuiver("A2"), {2, 2}),
                     oracles::rootsLineGraph(2, {2, 2})));
  CHECK(sameRootList(enumerateRoots(standardQuiver("A3"), {1, 1, 1}),
                     oracles::rootsLineGraph(3, {1, 1, 1})));
  CHECK(sameRootList(enumerateRoots(standardQuiver("D4"), {2, 1, 1, 1}),
                     oracles::rootsFourPronged({2, 1, 1, 1})));
  CHECK(sameRootList(enumerateRoots(standardQuiver("A1~"), {2, 2}),
                     oracles::rootsDoubledEdge({2, 2})));
  CHECK(sameRootList(enumerateRoots(standardQuiver("Jordan"), {5}),
                     oracles::rootsOneLoop({5})));
}

TEST_CASE("root lists are reflection-stable within the bound") {
  for (const char* name : {"A3", "D4", "A1~"}) {
    Quiver q = standardQuiver(name);
    DimVec bound(q.numVertices(), 2);
    std::vector<Root> roots = enumerateRoots(q, bound);
    std::set<DimVec> present;
    for (const Root& r : roots) present.insert(r.v);
    for (const Root& r : roots)
      for (int i = 0; i < q.numVertices(); ++i) {
        DimVec s = reflect(q, r.v, i);
        bool inBox = true;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (s[k] < 0 || s[k] > bound[k]) inBox = false;
        if (inBox && !dimIsZero(s)) CHECK(present.count(s) == 1);
      }
  }
}

TEST_CASE("real vs imaginary tags follow the form") {
  for (const char* name : {"A3", "Jordan", "A1~"}) {
    Quiver q = standardQuiver(name);
    for (const Root& r : enumerateRoots(q, DimVec(q.numVertices(), 3))) {
      long long norm = q.bilinear(r.v, r.v);
      if (r.imaginary)
        CHECK(norm <= 0);
      else
        CHECK(norm == 2);
    }
  }
}

TEST_CASE("finite type root lists carry no imaginary roots") {
  for (const char* name : {"A2", "A3", "D4", "E6"}) {
    Quiver q = standardQuiver(name);
    for (const Root& r : enumerateRoots(q, DimVec(q.numVertices(), 3)))
      CHECK(!r.imaginary);
  }
}

TEST_CASE("simple module dimension lists") {
  std::vector<DimVec> a2 = simpleModuleDims(standardQuiver("A2"), {2, 2});
  CHECK(a2 == std::vector<DimVec>{{1, 0}, {0, 1}});

  std::vector<DimVec> jordan = simpleModuleDims(standardQuiver("Jordan"), {3});
  CHECK(jordan == std::vector<DimVec>{{1}});

  std::vector<DimVec> aff = simpleModuleDims(standardQuiver("A1~"), {2, 2});
  CHECK(aff == std::vector<DimVec>{{1, 0}, {0, 1}, {1, 1}});

  // bound cuts delta out
  std::vector<DimVec> cut = simpleModuleDims(standardQuiver("A1~"), {2, 0});
  CHECK(cut == std::vector<DimVec>{{1, 0}});

  Quiver triple({"0", "1"}, {{0, 1}, {0, 1}, {0, 1}});
  CHECK_THROWS_AS(simpleModuleDims(triple, {1, 1}), UnsupportedType);
}

TEST_CASE("complete positive root lists for finite type") {
  CHECK(allPositiveRoots(standardQuiver("A2")).size() == 3);
  CHECK(allPositiveRoots(standardQuiver("A3")).size() == 6);
  CHECK(allPositiveRoots(standardQuiver("D4")).size() == 12);
  CHECK(allPositiveRoots(standardQuiver("E6")).size() == 36);
  CHECK_THROWS_AS(allPositiveRoots(standardQuiver("Jordan")), UnsupportedType);
}
