#include "doctest.h"

#include <random>
#include <vector>

#include "quivar/coproduct.hpp"
#include "quivar/oracles.hpp"

using namespace quivar;

namespace {

// chain a <= b with unit blocks
PosetPtr chainPoset() {
  return std::make_shared<ComponentPoset>(
      std::vector<std::string>{"a", "b"}, std::vector<int>{1, 1},
      std::vector<int>{0, 1},
      std::vector<std::vector<char>>{{1, 1}, {0, 1}});
}

// a and b both below c, a incomparable to b
PosetPtr veePoset() {
  return std::make_shared<ComponentPoset>(
      std::vector<std::string>{"a", "b", "c"}, std::vector<int>{1, 1, 1},
      std::vector<int>{0, 1, 2},
      std::vector<std::vector<char>>{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
}

RatMat unitAt(int n, int i, int j, const Rat& x) {
  RatMat m = RatMat::identity(n);
  m(i, j) = x;
  return m;
}

}  // namespace

TEST_CASE("component poset rejects malformed input") {
  using L = std::vector<std::string>;
  using I = std::vector<int>;
  using M = std::vector<std::vector<char>>;

  CHECK_THROWS_AS(ComponentPoset(L{}, I{}, I{}, M{}), std::invalid_argument);
  CHECK_THROWS_AS(ComponentPoset(L{"a", "b"}, I{1}, I{0, 1}, M{{1, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComponentPoset(L{"a", "a"}, I{1, 1}, I{0, 1}, M{{1, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComponentPoset(L{"a"}, I{-1}, I{0}, M{{1}}),
                  std::invalid_argument);
  // missing reflexivity
  CHECK_THROWS_AS(ComponentPoset(L{"a"}, I{1}, I{0}, M{{0}}),
                  std::invalid_argument);
  // two-sided relation
  CHECK_THROWS_AS(ComponentPoset(L{"a", "b"}, I{1, 1}, I{0, 1}, M{{1, 1}, {1, 1}}),
                  std::invalid_argument);
  // listed against the order
  CHECK_THROWS_AS(ComponentPoset(L{"a", "b"}, I{1, 1}, I{0, 1}, M{{1, 0}, {1, 1}}),
                  std::invalid_argument);
  // 0 <= 1 <= 2 without 0 <= 2
  CHECK_THROWS_AS(
      ComponentPoset(L{"a", "b", "c"}, I{1, 1, 1}, I{0, 1, 2},
                     M{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}),
      std::invalid_argument);
  // group ids skip 1
  CHECK_THROWS_AS(ComponentPoset(L{"a", "b"}, I{1, 1}, I{0, 2}, M{{1, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComponentPoset(L{"a"}, I{1}, I{-1}, M{{1}}),
                  std::invalid_argument);
}

TEST_CASE("component poset accessors") {
  PosetPtr p = std::make_shared<ComponentPoset>(
      std::vector<std::string>{"x", "y"}, std::vector<int>{2, 3},
      std::vector<int>{0, 0},
      std::vector<std::vector<char>>{{1, 1}, {0, 1}});
  CHECK(p->numComponents() == 2);
  CHECK(p->label(1) == "y");
  CHECK(p->indexOf("y") == 1);
  CHECK_THROWS_AS(p->indexOf("z"), std::invalid_argument);
  CHECK(p->dim(0) == 2);
  CHECK(p->offset(0) == 0);
  CHECK(p->offset(1) == 2);
  CHECK(p->dimTotal() == 5);
  CHECK(p->leq(0, 1));
  CHECK(!p->leq(1, 0));
  CHECK(p->group(1) == 0);
  CHECK(p->numGroups() == 1);
}

TEST_CASE("class validation enforces unit diagonal and downward support") {
  PosetPtr chain = chainPoset();
  CHECK(validateClass({chain, RatMat::identity(2)}));
  CHECK(validateClass({chain, unitAt(2, 0, 1, Rat(5) / 3)}));
  CHECK(!validateClass({chain, unitAt(2, 1, 0, Rat(1))}));

  RatMat scaled = RatMat::identity(2);
  scaled(0, 0) = 2;
  CHECK(!validateClass({chain, scaled}));

  // entries between incomparable components are forbidden
  PosetPtr vee = veePoset();
  CHECK(validateClass({vee, unitAt(3, 0, 2, Rat(7))}));
  CHECK(validateClass({vee, unitAt(3, 1, 2, Rat(-2))}));
  CHECK(!validateClass({vee, unitAt(3, 0, 1, Rat(1))}));

  CHECK_THROWS_AS(CorrClass(chain, RatMat::identity(3)), InconsistentDims);
  CHECK_THROWS_AS(CorrClass(nullptr, RatMat::identity(2)), std::invalid_argument);
}

TEST_CASE("column splitting test agrees with block validation") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    PosetPtr p = oracles::randomPoset(rng);
    CorrClass c = oracles::randomCorrClass(p, rng);
    CHECK(validateClass(c));
    CHECK(splittingCheck(c));

    // corrupting any single entry keeps the two checks in lockstep
    int d = p->dimTotal();
    if (d == 0) continue;
    std::uniform_int_distribution<int> pick(0, d - 1);
    CorrClass bad = c;
    bad.mat(pick(rng), pick(rng)) = 17;
    CHECK(validateClass(bad) == splittingCheck(bad));
  }
}

TEST_CASE("inversion undoes a class exactly") {
  PosetPtr chain = chainPoset();
  CHECK(invertClass({chain, RatMat::identity(2)}).mat == RatMat::identity(2));

  CorrClass c{chain, unitAt(2, 0, 1, Rat(5) / 3)};
  CorrClass inv = invertClass(c);
  CHECK(inv.mat(0, 1) == Rat(-5) / 3);
  CHECK(inv.mat * c.mat == RatMat::identity(2));

  CHECK_THROWS_AS(invertClass({chain, unitAt(2, 1, 0, Rat(1))}), InvalidClass);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr p = oracles::randomPoset(rng);
    CorrClass a = oracles::randomCorrClass(p, rng);
    CorrClass b = invertClass(a);
    CHECK(validateClass(b));
    RatMat id = RatMat::identity(p->dimTotal());
    CHECK(a.mat * b.mat == id);
    CHECK(b.mat * a.mat == id);
    CHECK(invertClass(b).mat == a.mat);
  }
}

TEST_CASE("conjugation by a class is a unital algebra map") {
  PosetPtr chain = chainPoset();
  RatMat a = RatMat::identity(2);
  a(0, 0) = 2;
  a(1, 1) = 3;
  CorrClass c{chain, unitAt(2, 0, 1, Rat(1) / 2)};

  // identity class changes nothing
  CHECK(deltaC({chain, RatMat::identity(2)}, a) == a);

  RatMat out = deltaC(c, a);
  CHECK(out(0, 0) == 2);
  CHECK(out(1, 1) == 3);
  CHECK(out(0, 1) == Rat(-1) / 2);
  CHECK(out(1, 0) == 0);

  RatMat offDiag(2, 2);
  offDiag(0, 1) = 1;
  CHECK_THROWS_AS(deltaC(c, offDiag), InconsistentDims);
  CHECK_THROWS_AS(deltaC(c, RatMat::identity(3)), InconsistentDims);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr p = oracles::randomPoset(rng);
    CorrClass cc = oracles::randomCorrClass(p, rng);
    RatMat A = oracles::randomAlgebraElement(*p, rng);
    RatMat B = oracles::randomAlgebraElement(*p, rng);
    RatMat id = RatMat::identity(p->dimTotal());
    CHECK(deltaC(cc, id) == id);
    CHECK(deltaC(cc, A * B) == deltaC(cc, A) * deltaC(cc, B));
    CHECK(deltaC(cc, A + B) == deltaC(cc, A) + deltaC(cc, B));
  }
}

TEST_CASE("conjugation preserves the order filtration for separated groups") {
  // one group per component: algebra elements are block-diagonal, and the
  // image must stay supported on comparable pairs
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr base = oracles::randomPoset(rng);
    int n = base->numComponents();
    std::vector<std::string> labels;
    std::vector<int> dims, groups;
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      labels.push_back(base->label(i));
      dims.push_back(base->dim(i));
      groups.push_back(i);
      for (int j = 0; j < n; ++j) leq[i][j] = base->leq(i, j) ? 1 : 0;
    }
    PosetPtr p = std::make_shared<ComponentPoset>(labels, dims, groups, leq);
    CorrClass c = oracles::randomCorrClass(p, rng);
    RatMat A = oracles::randomAlgebraElement(*p, rng);
    RatMat out = deltaC(c, A);
    for (int beta = 0; beta < n; ++beta)
      for (int alpha = 0; alpha < n; ++alpha) {
        if (p->leq(beta, alpha)) continue;
        for (int r = 0; r < p->dim(beta); ++r)
          for (int s = 0; s < p->dim(alpha); ++s)
            CHECK(out(p->offset(beta) + r, p->offset(alpha) + s) == 0);
      }
  }
}

TEST_CASE("multiplicity extraction from projector ranks") {
  using L = std::vector<std::string>;
  using I = std::vector<int>;
  using M = std::vector<std::vector<char>>;

  ComponentPoset single(L{"a"}, I{1}, I{0}, M{{1}});
  CHECK(extractMultiplicities(single, {1}, {RatMat::identity(1)}) ==
        std::vector<std::vector<long long>>{{1}});

  // one group of total dimension 3 split as 1*1 + 1*2
  ComponentPoset castle(L{"a", "b"}, I{1, 2}, I{0, 0}, M{{1, 0}, {0, 1}});
  RatMat p1(3, 3), p2(3, 3);
  p1(0, 0) = 1;
  p2(1, 1) = 1;
  p2(2, 2) = 1;
  CHECK(extractMultiplicities(castle, {1, 2}, {p1, p2}) ==
        std::vector<std::vector<long long>>{{1, 1}});

  // a zero-dimensional group carries nothing
  ComponentPoset padded(L{"a", "z"}, I{2, 0}, I{0, 1}, M{{1, 0}, {0, 1}});
  CHECK(extractMultiplicities(padded, {2}, {RatMat::identity(2)}) ==
        std::vector<std::vector<long long>>{{1}, {0}});

  // two groups, each one copy of the unit source
  ComponentPoset pair(L{"a", "b"}, I{1, 1}, I{0, 1}, M{{1, 1}, {0, 1}});
  RatMat q1(2, 2), q2(2, 2);
  q1(0, 0) = 1;
  q2(1, 1) = 1;
  CHECK(extractMultiplicities(pair, {1, 1}, {q1, q2}) ==
        std::vector<std::vector<long long>>{{1, 0}, {0, 1}});

  // rank 1 cannot be a multiple of a 2-dimensional source
  CHECK_THROWS_AS(extractMultiplicities(single, {2}, {RatMat::identity(1)}),
                  InconsistentDims);
  CHECK_THROWS_AS(extractMultiplicities(single, {0}, {RatMat::identity(1)}),
                  InconsistentDims);
  CHECK_THROWS_AS(extractMultiplicities(single, {1, 1}, {RatMat::identity(1)}),
                  InconsistentDims);

  RatMat notIdem(3, 3);
  notIdem(0, 0) = 2;
  CHECK_THROWS_AS(extractMultiplicities(castle, {1, 2}, {notIdem, p2}),
                  InconsistentDims);
  // projectors that do not resolve the identity
  CHECK_THROWS_AS(extractMultiplicities(castle, {1, 2}, {p1, p1}),
                  InconsistentDims);
}

namespace {

std::vector<TripleComponent> jordanTripleComps() {
  // all splits of total dimension 2 at a single vertex
  return {
      {{2}, {0}, {0}}, {{0}, {2}, {0}}, {{0}, {0}, {2}},
      {{1}, {1}, {0}}, {{1}, {0}, {1}}, {{0}, {1}, {1}},
  };
}

}  // namespace

TEST_CASE("triple support patterns") {
  std::vector<TripleComponent> comps = jordanTripleComps();
  const TripleComponent& t110 = comps[3];
  const TripleComponent& t101 = comps[4];
  const TripleComponent& t011 = comps[5];
  const TripleComponent& t020 = comps[1];

  CHECK(tripleSupportAllowed(TripleKind::split12_3, t101, t110));
  CHECK(!tripleSupportAllowed(TripleKind::split12_3, t110, t101));
  CHECK(!tripleSupportAllowed(TripleKind::split12_3, t110, t110));

  CHECK(tripleSupportAllowed(TripleKind::split1_23, t011, t110));
  CHECK(!tripleSupportAllowed(TripleKind::split1_23, t110, t011));

  CHECK(tripleSupportAllowed(TripleKind::refine12_3, t020, t110));
  CHECK(!tripleSupportAllowed(TripleKind::refine12_3, t011, t110));

  CHECK(tripleSupportAllowed(TripleKind::refine1_23, t101, t110));
  CHECK(!tripleSupportAllowed(TripleKind::refine1_23, t011, t110));

  // a refinement move is also a legal splitting move on the same side
  for (const TripleComponent& r : comps)
    for (const TripleComponent& c : comps) {
      if (tripleSupportAllowed(TripleKind::refine1_23, r, c))
        CHECK(tripleSupportAllowed(TripleKind::split12_3, r, c));
      if (tripleSupportAllowed(TripleKind::refine12_3, r, c))
        CHECK(tripleSupportAllowed(TripleKind::split1_23, r, c));
    }

  CHECK_THROWS_AS(TriplePoset({{{1}, {0}, {0}}, {{1}, {1}, {0}}}, {1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TriplePoset({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(TriplePoset({{{1}, {0}, {0}}}, {1, 2}), std::invalid_argument);
}

TEST_CASE("triple class validation") {
  TriplePoset tp(jordanTripleComps(), {1, 1, 1, 1, 1, 1});
  RatMat id = RatMat::identity(6);
  validateTripleClass(tp, TripleKind::split12_3, id);

  RatMat ok = unitAt(6, 4, 3, Rat(2) / 3);  // (1,0,1) below (1,1,0)
  validateTripleClass(tp, TripleKind::refine1_23, ok);

  RatMat badSupport = unitAt(6, 5, 3, Rat(1));  // (0,1,1) vs (1,1,0)
  CHECK_THROWS_AS(validateTripleClass(tp, TripleKind::refine1_23, badSupport),
                  InvalidClass);

  RatMat badDiag = id;
  badDiag(2, 2) = 4;
  CHECK_THROWS_AS(validateTripleClass(tp, TripleKind::split12_3, badDiag),
                  InvalidClass);
  CHECK_THROWS_AS(validateTripleClass(tp, TripleKind::split12_3, RatMat::identity(5)),
                  InconsistentDims);
}

TEST_CASE("coassociativity holds for matched class pairs") {
  TriplePoset tp(jordanTripleComps(), {1, 1, 1, 1, 1, 1});
  RatMat id = RatMat::identity(6);
  CHECK(coassociativityCheck(tp, id, id, id, id));

  // P refines the (2,3) factor, Q refines the (1,2) factor; using the same
  // matrix for a splitting step and its opposite refinement step makes the
  // two compositions literally equal
  RatMat P = unitAt(6, 4, 3, Rat(2) / 3);  // (1,0,1) <- (1,1,0)
  P(5, 1) = Rat(1) / 5;                    // (0,1,1) <- (0,2,0)
  P(2, 5) = Rat(-3);                       // (0,0,2) <- (0,1,1)
  RatMat Q = unitAt(6, 1, 3, Rat(-1) / 2);  // (0,2,0) <- (1,1,0)
  Q(3, 0) = 2;                              // (1,1,0) <- (2,0,0)
  Q(5, 4) = Rat(7) / 4;                     // (0,1,1) <- (1,0,1)
  CHECK(coassociativityCheck(tp, P, Q, P, Q));

  // perturbing one side breaks the identity
  RatMat P2 = P;
  P2(4, 3) = Rat(4) / 3;
  CHECK(!coassociativityCheck(tp, P, Q, P2, Q));

  // class with support in a wrong corner is rejected outright
  CHECK_THROWS_AS(coassociativityCheck(tp, Q, Q, P, Q), InvalidClass);
}

TEST_CASE("coassociativity is stable under block-diagonal conjugation") {
  TriplePoset tp(jordanTripleComps(), {1, 1, 1, 1, 1, 1});
  RatMat P = unitAt(6, 4, 3, Rat(2) / 3);
  RatMat Q = unitAt(6, 1, 3, Rat(-1) / 2);

  std::vector<Rat> scale = {2, 3, 1, Rat(1) / 2, 5, 1};
  auto conj = [&](const RatMat& m) {
    RatMat out = m;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (i != j) out(i, j) = m(i, j) * scale[j] / scale[i];
    return out;
  };
  CHECK(coassociativityCheck(tp, conj(P), conj(Q), conj(P), conj(Q)));

  RatMat P2 = P;
  P2(4, 3) = Rat(7);
  CHECK(!coassociativityCheck(tp, conj(P), conj(Q), conj(P2), conj(Q)));
}
