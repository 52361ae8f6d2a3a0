#include "doctest.h"

#include <complex>
#include <random>

#include "quivar/oracles.hpp"
#include "quivar/rep.hpp"

using namespace quivar;

namespace {

double maxAbsDiff(const Rep& x, const Rep& y) {
  double m = 0;
  for (std::size_t h = 0; h < x.B.size(); ++h)
    if (x.B[h].size()) m = std::max(m, (x.B[h] - y.B[h]).cwiseAbs().maxCoeff());
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i].size()) m = std::max(m, (x.a[i] - y.a[i]).cwiseAbs().maxCoeff());
    if (x.b[i].size()) m = std::max(m, (x.b[i] - y.b[i]).cwiseAbs().maxCoeff());
  }
  return m;
}

}  // namespace

TEST_CASE("rep construction validates shapes") {
  Quiver q = standardQuiver("A2");
  Rep z = Rep::zero(q, {1, 2}, {1, 0});
  CHECK(z.B[0].rows() == 2);
  CHECK(z.B[0].cols() == 1);
  CHECK(z.a[0].rows() == 1);
  CHECK(z.a[0].cols() == 1);
  CHECK(z.b[1].rows() == 0);
  CHECK(z.b[1].cols() == 2);

  std::vector<CMat> badB = z.B;
  badB[0] = CMat::Zero(3, 3);
  CHECK_THROWS_AS(Rep(q, z.v, z.w, badB, z.a, z.b), std::invalid_argument);
}

TEST_CASE("moment map worked examples") {
  Quiver jordan = standardQuiver("Jordan");
  SUBCASE("zero rep") {
    Rep z = Rep::zero(jordan, {2}, {1});
    for (const CMat& m : momentMap(z)) CHECK(m.cwiseAbs().maxCoeff() == 0);
    CHECK(momentResidual(z) == 0);
  }
  SUBCASE("scalars commute, only ab survives") {
    Rep r = Rep::zero(jordan, {1}, {1});
    r.B[0](0, 0) = {2.0, 1.0};
    r.B[1](0, 0) = {-0.5, 3.0};
    r.a[0](0, 0) = {1.5, 0.0};
    r.b[0](0, 0) = {0.0, 2.0};
    std::vector<CMat> mu = momentMap(r);
    CHECK(std::abs(mu[0](0, 0) - std::complex<double>(0.0, 3.0)) < 1e-14);
  }
  SUBCASE("one vertex no edges, orthogonal a and b") {
    Quiver a1 = standardQuiver("A1");
    Rep r = Rep::zero(a1, {1}, {2});
    r.a[0](0, 0) = 1.0;
    r.b[0](1, 0) = 1.0;
    CHECK(momentResidual(r) == 0);
  }
}

TEST_CASE("gauge action is an action and conjugates the moment map") {
  Quiver q = standardQuiver("A1~");
  std::mt19937_64 rng(3);
  Rep r = randomRep(q, {2, 1}, {1, 1}, rng);
  std::vector<CMat> g = randomGauge(q, {2, 1}, rng);
  std::vector<CMat> h = randomGauge(q, {2, 1}, rng);

  Rep gr = gaugeAct(g, r);
  std::vector<CMat> mu = momentMap(r), muG = momentMap(gr);
  for (int i = 0; i < q.numVertices(); ++i) {
    CMat expected = g[i] * mu[i] * g[i].inverse();
    CHECK((muG[i] - expected).cwiseAbs().maxCoeff() < 1e-10);
  }

  // composite action equals composed matrices
  std::vector<CMat> hg(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) hg[i] = h[i] * g[i];
  CHECK(maxAbsDiff(gaugeAct(h, gr), gaugeAct(hg, r)) < 1e-10);

  // identity and singular input
  std::vector<CMat> id = {CMat::Identity(2, 2), CMat::Identity(1, 1)};
  CHECK(maxAbsDiff(gaugeAct(id, r), r) == 0);
  std::vector<CMat> sing = {CMat::Zero(2, 2), CMat::Identity(1, 1)};
  CHECK_THROWS_AS(gaugeAct(sing, r), std::invalid_argument);
}

TEST_CASE("torus action scales the moment map by t1*t2") {
  Quiver q = standardQuiver("Jordan");
  std::mt19937_64 rng(4);
  Rep r = randomRep(q, {2}, {2}, rng);
  std::complex<double> t1{0.3, 1.1}, t2{-2.0, 0.7};
  std::vector<CMat> mu = momentMap(r);
  std::vector<CMat> muT = momentMap(torusAct(t1, t2, r));
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double rel = (muT[i] - t1 * t2 * mu[i]).cwiseAbs().maxCoeff() /
                 mu[i].cwiseAbs().maxCoeff();
    CHECK(rel < 1e-12);
  }
  CHECK(maxAbsDiff(torusAct(1.0, 1.0, r), r) == 0);
  CHECK_THROWS_AS(torusAct(0.0, 1.0, r), std::invalid_argument);
}

TEST_CASE("framing action leaves B alone and b picks up gw") {
  Quiver q = standardQuiver("A1");
  std::mt19937_64 rng(5);
  Rep r = randomRep(q, {1}, {2}, rng);
  std::vector<CMat> gw = {2.0 * CMat::Identity(2, 2)};
  Rep fr = framingAct(gw, r);
  CHECK((fr.a[0] - 0.5 * r.a[0]).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((fr.b[0] - 2.0 * r.b[0]).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("lambda action scales only the second framing summand") {
  Quiver q = standardQuiver("A1");
  std::mt19937_64 rng(6);
  Rep r = randomRep(q, {1}, {2}, rng);
  FramingSplit s = makeSplit({2}, {1});
  Rep lr = lambdaAct(0.25, s, r);
  CHECK(std::abs(lr.a[0](0, 0) - r.a[0](0, 0)) < 1e-14);
  CHECK(std::abs(lr.a[0](0, 1) - 4.0 * r.a[0](0, 1)) < 1e-14);
  CHECK(std::abs(lr.b[0](0, 0) - r.b[0](0, 0)) < 1e-14);
  CHECK(std::abs(lr.b[0](1, 0) - 0.25 * r.b[0](1, 0)) < 1e-14);
  CHECK_THROWS_AS(lambdaAct(0.0, s, r), std::invalid_argument);
  CHECK_THROWS_AS(makeSplit({2}, {3}), std::invalid_argument);
}

TEST_CASE("stability worked examples") {
  Quiver jordan = standardQuiver("Jordan");
  SUBCASE("nonzero b on a line is stable") {
    Rep r = Rep::zero(jordan, {1}, {1});
    r.b[0](0, 0) = 1.0;
    CHECK(isStable(r));
  }
  SUBCASE("b = 0 with v != 0 is never stable") {
    std::mt19937_64 rng(7);
    Rep r = randomRep(jordan, {2}, {1}, rng);
    r.b[0].setZero();
    CHECK(!isStable(r));
  }
  SUBCASE("a alone does not make a point stable") {
    Quiver a1 = standardQuiver("A1");
    Rep r = Rep::zero(a1, {1}, {1});
    r.a[0](0, 0) = 1.0;
    CHECK(!isStable(r));
  }
  SUBCASE("v = 0 is vacuously stable") {
    CHECK(isStable(Rep::zero(jordan, {0}, {1})));
  }
  SUBCASE("invariant subspace hiding in ker b") {
    // B fixes span(e1), b kills it: unstable even though b != 0
    Rep r = Rep::zero(jordan, {2}, {1});
    r.B[0] << 1.0, 0.0, 0.0, 2.0;
    r.b[0](0, 1) = 1.0;
    CHECK(!isStable(r));
    // same b but B rotates e1 out of ker b: stable
    r.B[0] << 0.0, 0.0, 1.0, 0.0;
    CHECK(isStable(r));
  }
}

TEST_CASE("stability is gauge invariant") {
  std::mt19937_64 rng(8);
  Quiver q = standardQuiver("A1~");
  for (int trial = 0; trial < 12; ++trial) {
    Rep r = randomRep(q, {2, 1}, {1, 0}, rng);
    if (trial % 2) r.b[0].setZero(), r.b[1].setZero();
    bool before = isStable(r);
    Rep gr = gaugeAct(randomGauge(q, {2, 1}, rng), r);
    CHECK(isStable(gr) == before);
  }
}

TEST_CASE("solver fixed points and convergence") {
  Quiver jordan = standardQuiver("Jordan");
  SUBCASE("already solved input returns unchanged") {
    Rep z = Rep::zero(jordan, {2}, {1});
    SolveReport rep = newtonSolveMoment(z);
    CHECK(rep.converged);
    CHECK(rep.iterations == 0);
    CHECK(maxAbsDiff(rep.rep, z) == 0);
  }
  SUBCASE("random start converges on the jordan quiver") {
    std::mt19937_64 rng(9);
    Rep r0 = randomRep(jordan, {1}, {1}, rng);
    SolveReport rep = newtonSolveMoment(r0);
    CHECK(rep.converged);
    CHECK(rep.residual < 1e-10);
    CHECK(momentResidual(rep.rep) < 1e-10);
  }
  SUBCASE("zero iterations with nonzero residual reports failure") {
    std::mt19937_64 rng(10);
    Rep r0 = randomRep(jordan, {1}, {1}, rng);
    SolveReport rep = newtonSolveMoment(r0, 1e-10, 0);
    CHECK(!rep.converged);
    CHECK(rep.residual > 0);
  }
  SUBCASE("deterministic given the start") {
    std::mt19937_64 rng(11);
    Rep r0 = randomRep(standardQuiver("A1~"), {1, 1}, {1, 1}, rng);
    SolveReport one = newtonSolveMoment(r0);
    SolveReport two = newtonSolveMoment(r0);
    CHECK(maxAbsDiff(one.rep, two.rep) == 0);
  }
  SUBCASE("bigger systems converge too") {
    std::mt19937_64 rng(12);
    for (const char* name : {"A2", "A1~"}) {
      Rep r0 = randomRep(standardQuiver(name), {2, 1}, {1, 1}, rng, 0.8);
      SolveReport rep = newtonSolveMoment(r0, 1e-10, 400);
      CHECK(rep.converged);
    }
  }
}

TEST_CASE("direct sum stacks blocks and framings in order") {
  Quiver q = standardQuiver("Jordan");
  std::mt19937_64 rng(13);
  Rep r1 = randomRep(q, {1}, {1}, rng);
  Rep r2 = randomRep(q, {2}, {1}, rng);
  Rep sum = directSum(r1, r2);
  CHECK(sum.v == DimVec{3});
  CHECK(sum.w == DimVec{2});
  CHECK(std::abs(sum.B[0](0, 0) - r1.B[0](0, 0)) == 0);
  CHECK((sum.B[0].block(1, 1, 2, 2) - r2.B[0]).cwiseAbs().maxCoeff() == 0);
  CHECK(sum.B[0](0, 1) == std::complex<double>(0.0, 0.0));
  CHECK(std::abs(sum.a[0](0, 0) - r1.a[0](0, 0)) == 0);
  CHECK((sum.a[0].block(1, 1, 2, 1) - r2.a[0]).cwiseAbs().maxCoeff() == 0);
  // moment map of a sum is the block sum: residual adds in quadrature
  double lhs = momentResidual(sum) * momentResidual(sum);
  double rhs = momentResidual(r1) * momentResidual(r1) +
               momentResidual(r2) * momentResidual(r2);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("stable point search produces solved stable reps") {
  std::mt19937_64 rng(14);
  Rep pt = oracles::findStablePoint(standardQuiver("Jordan"), {1}, {1}, rng);
  CHECK(momentResidual(pt) < 1e-9);
  CHECK(isStable(pt));
  Rep trivial = oracles::findStablePoint(standardQuiver("A2"), {0, 0}, {1, 1}, rng);
  CHECK(momentResidual(trivial) == 0);
}

TEST_CASE("numeric manifold dimension agrees with the closed formula") {
  std::mt19937_64 rng(15);
  SUBCASE("jordan v=1 w=1") {
    Rep pt = oracles::findStablePoint(standardQuiver("Jordan"), {1}, {1}, rng);
    CHECK(oracles::numericManifoldDim(pt) == 2);
  }
  SUBCASE("a1 cotangent point") {
    Rep pt = oracles::findStablePoint(standardQuiver("A1"), {1}, {1}, rng);
    CHECK(oracles::numericManifoldDim(pt) == 0);
  }
  SUBCASE("a1 with two framings") {
    Rep pt = oracles::findStablePoint(standardQuiver("A1"), {1}, {2}, rng);
    CHECK(oracles::numericManifoldDim(pt) == 2);
  }
}
