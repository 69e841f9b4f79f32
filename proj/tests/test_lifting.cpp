#include <random>
#include <set>

#include "doctest.h"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/lifting.hpp"
#include "sset/ops.hpp"

using namespace sset;

namespace {

SSetPtr circle() {
  auto po = pushout(deltaSubInclusion(boundary(1), 1), toTerminal(boundary(1), point()));
  return po.object;
}

SSetPtr twoPoints() { return coproduct({point(), point()}).object; }

int nondegCount(const SSetPtr& x, int m) {
  auto e = extendTo(x, m);
  int n = 0;
  for (int c = 0; c < e->size(m); ++c) n += !e->isDegenerate(m, c);
  return n;
}

bool injectiveOracle(const SimplicialMap& f, int through) {
  auto e = f.extended(through);
  for (int m = 0; m <= through; ++m) {
    std::set<int> seen;
    for (int y : e.components()[m])
      if (!seen.insert(y).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hom sets of small objects") {
  CHECK(homSet(delta(1), delta(1)).size() == 3);
  for (auto x : {delta(2), boundary(2), nerve(cat::cyclicGroup(3)), jNerve(2), walkingH()})
    CHECK(countMaps(delta(0), x) == static_cast<std::uint64_t>(x->size(0)));

  // three edges in a one-object nerve, with no 2-cell to constrain them
  auto g = cat::cyclicGroup(2);
  const std::uint64_t elems = g.arrows.size();
  const std::uint64_t triples = elems * elems * elems;
  CHECK(countMaps(boundary(2), nerve(g)) == triples);
}

TEST_CASE("yoneda: maps out of a simplex are cells") {
  for (auto x : {nerve(cat::linearOrder(2)), walkingH(), circle(), jNerve(1), rKanTwo(1)})
    for (int m = 0; m <= 3; ++m) CHECK(countMaps(delta(m), x) == static_cast<std::uint64_t>(extendTo(x, m)->size(m)));
}

TEST_CASE("truncated maps") {
  auto x = boundary(2), y = nerve(cat::cyclicGroup(2));
  CHECK(countTruncatedMaps(x, y, 1) == 8);
  CHECK(countTruncatedMaps(delta(2), y, 1) == 8);
  CHECK(countTruncatedMaps(delta(2), y, 2) == 4);
}

TEST_CASE("universal property of R_n 2") {
  for (int n = 0; n <= 2; ++n)
    for (auto x : {point(), twoPoints(), delta(1), boundary(2), horn(2, 1), circle()}) {
      auto cells = extendTo(x, n)->size(n);
      CHECK(countMaps(x, rKanTwo(n)) == (std::uint64_t{1} << cells));
    }
}

TEST_CASE("isomorphisms") {
  CHECK(findIsomorphism(horn(2, 1), spine(2)).has_value());
  CHECK_FALSE(findIsomorphism(horn(2, 0), horn(2, 2)).has_value());
  CHECK_FALSE(findIsomorphism(horn(2, 1), boundary(2)).has_value());
  CHECK(findIsomorphism(jNerve(1), coskeleton(twoPoints(), 0)).has_value());
  auto f = findIsomorphism(delta(1), nerve(cat::linearOrder(1)));
  REQUIRE(f);
  CHECK(isIsomorphism(*f));
  CHECK_FALSE(isIsomorphism(deltaSubInclusion(boundary(2), 2)));
}

TEST_CASE("mapping spaces") {
  auto nz2 = nerve(cat::cyclicGroup(2));
  SUBCASE("Map(point, Y) is Y") {
    for (auto y : {nz2, nerve(cat::linearOrder(1)), jNerve(2)}) {
      auto ms = mappingSpace(point(), y);
      CHECK(findIsomorphism(ms.object, y).has_value());
    }
  }
  SUBCASE("vertices of Map(J, N(Z/2)) are functors") {
    auto ms = mappingSpace(jNerve(1), nz2);
    auto functors = allFunctors(cat::codiscreteGroupoid(2), cat::cyclicGroup(2));
    CHECK(ms.object->size(0) == static_cast<int>(functors.size()));
    CHECK(ms.object->size(0) == 2);
  }
  SUBCASE("leanness is preserved") {
    auto ms = mappingSpace(boundary(2), nerve(cat::cyclicGroup(3)));
    CHECK(classify(ms.object).isLean);
    CHECK(ms.object->size(0) == 27);
  }
  SUBCASE("exponential law") {
    for (auto z : {delta(1), boundary(2), twoPoints()})
      for (auto x : {delta(1), boundary(1)})
        for (auto y : {nz2, nerve(cat::linearOrder(1)), jNerve(1)}) {
          auto ms = mappingSpace(x, y);
          CHECK(countMaps(product(z, x).object, y) == countMaps(z, ms.object));
        }
  }
  SUBCASE("vertex round trip") {
    auto ms = mappingSpace(delta(1), nerve(cat::linearOrder(2)));
    for (int k = 0; k < ms.object->size(0); ++k) CHECK(ms.vertexOf(ms.vertexMap(k)) == k);
  }
}

TEST_CASE("pushout-products") {
  auto g = deltaSubInclusion(horn(2, 1), 2);
  auto unit = pushoutProduct(emptyInclusion(point()), g);
  CHECK(findIsomorphism(unit.map.source(), g.source()).has_value());
  CHECK(findIsomorphism(unit.map.target(), g.target()).has_value());
  CHECK(unit.map.injective());

  auto b = deltaSubInclusion(boundary(1), 1);
  auto sq = pushoutProduct(b, b);
  // boundary of the square: pairs (e, v) and (v, e) with e the edge and v an endpoint
  CHECK(nondegCount(sq.map.source(), 1) == 2 * 2);
  CHECK(nondegCount(sq.map.source(), 2) == 0);
  CHECK(sq.map.injective());
  CHECK(nondegCount(sq.map.target(), 2) == 2);
}

TEST_CASE("pullback-powers") {
  auto p = toTerminal(nerve(cat::linearOrder(1)), point());
  auto unit = pullbackPower(emptyInclusion(point()), p);
  CHECK(findIsomorphism(unit.map.source(), p.source()).has_value());
  CHECK(findIsomorphism(unit.map.target(), p.target()).has_value());
  CHECK(isIsomorphism(unit.map) == false);

  auto q = toTerminal(nerve(cat::cyclicGroup(2)), point());
  auto viaMap = mapPullbackPower(emptyInclusion(delta(1)), q);
  auto ms = mappingSpace(delta(1), q.source());
  CHECK(findIsomorphism(viaMap.map.source(), ms.object).has_value());
  CHECK(viaMap.map.target()->size(0) == 1);
}

TEST_CASE("lifting squares") {
  auto star = point();
  SUBCASE("identity on the left") {
    auto x = nerve(cat::cyclicGroup(2));
    auto p = toTerminal(x, star);
    auto top = yonedaMap(x, 1, 1);
    LiftingSquare sq{identity(delta(1)), p, top, toTerminal(delta(1), star)};
    auto r = solveLifting(sq);
    REQUIRE(r.fillers.size() == 1);
    CHECK(sameMap(r.fillers[0], top));
  }
  SUBCASE("inner horn in a nerve") {
    auto x = nerve(cat::linearOrder(2));
    auto i = deltaSubInclusion(horn(2, 1), 2);
    int squares = 0;
    for (auto& top : homSet(horn(2, 1), x)) {
      LiftingSquare sq{i, toTerminal(x, star), top, toTerminal(delta(2), star)};
      CHECK(solveLifting(sq).fillers.size() == 1);
      ++squares;
    }
    CHECK(squares > 0);
  }
  SUBCASE("outer horn against an edge, backwards") {
    auto h = horn(2, 0);
    auto x = delta(1);
    const SimplicialMap* chosen = nullptr;
    auto tops = homSet(h, x);
    for (auto& t : tops) {
      auto e = t.extended(0);
      int v0 = e(0, *e.source()->find(0, "0")), v1 = e(0, *e.source()->find(0, "1")),
          v2 = e(0, *e.source()->find(0, "2"));
      if (v0 == 0 && v1 == 1 && v2 == 0) chosen = &t;
    }
    REQUIRE(chosen);
    LiftingSquare sq{deltaSubInclusion(h, 2), toTerminal(x, star), *chosen, toTerminal(delta(2), star)};
    CHECK(solveLifting(sq).fillers.empty());
  }
  SUBCASE("non-commuting square is rejected") {
    auto x = delta(1);
    LiftingSquare sq{identity(x), identity(x), yonedaMap(x, 1, 0), yonedaMap(x, 1, 2)};
    CHECK(sq.checkCommutes().has_value());
    CHECK_THROWS_AS(solveLifting(sq), PreconditionError);
  }
}

TEST_CASE("generating sets") {
  CHECK(GeneratingSet{GeneratorFamily::KanHorns, 3}.generators().size() == 2 + 3 + 4);
  CHECK(GeneratingSet{GeneratorFamily::InnerHorns, 4}.generators().size() == 1 + 2 + 3);
  CHECK(GeneratingSet{GeneratorFamily::JoyalM, 3}.generators().size() == 1 + 2 + 1);
  CHECK(GeneratingSet{GeneratorFamily::Boundaries, 2}.generators().size() == 3);
  CHECK((parseGeneratorFamily("joyalM") == GeneratorFamily::JoyalM));
  CHECK_THROWS_AS(parseGeneratorFamily("nope"), PreconditionError);
}

TEST_CASE("right lifting properties") {
  auto star = point();
  auto nz2 = toTerminal(nerve(cat::cyclicGroup(2)), star);
  CHECK(sweepBound(nz2) == 4);
  CHECK(hasRLP(nz2, {GeneratorFamily::KanHorns, 4}).holds);

  auto d1 = toTerminal(delta(1), star);
  auto v = hasRLP(d1, {GeneratorFamily::KanHorns, sweepBound(d1)});
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->generator == "horn(2,0)");
  CHECK_FALSE(v.witness->square.checkCommutes().has_value());
  CHECK_FALSE(hasLift(v.witness->square));

  auto n1 = toTerminal(nerve(cat::linearOrder(1)), star);
  CHECK(hasRLP(n1, {GeneratorFamily::JoyalM, sweepBound(n1)}).holds);
  CHECK(isQuasiCategory(delta(2)));
  CHECK_FALSE(isKanComplex(delta(2)));
  CHECK_FALSE(isQuasiCategory(boundary(2)));
  CHECK(isKanComplex(jNerve(2)));
}

TEST_CASE("classification of maps") {
  auto star = point();
  CHECK(classifyMap(toTerminal(nerve(cat::cyclicGroup(3)), star), MapKind::KanFibration).holds);
  auto fold = toTerminal(twoPoints(), star);
  auto mono = classifyMap(fold, MapKind::Monomorphism);
  CHECK_FALSE(mono.holds);
  REQUIRE(mono.witness);
  CHECK(mono.witness->generator.find("rKanTwo") == 0);
  CHECK(classifyMap(deltaSubInclusion(boundary(2), 2), MapKind::Monomorphism).holds);
  CHECK(classifyMap(toTerminal(jNerve(1), star), MapKind::TrivialFibration).holds);
  CHECK_FALSE(classifyMap(toTerminal(delta(1), star), MapKind::TrivialFibration).holds);
  CHECK_THROWS_AS(classifyMap(toTerminal(boundary(2), star), MapKind::CategoricalFibration), PreconditionError);
  CHECK(classifyMap(toTerminal(jNerve(1), star), MapKind::CategoricalFibration).holds);
  CHECK((parseMapKind(toString(MapKind::InnerFibration)) == MapKind::InnerFibration));
}

TEST_CASE("squares above the sweep bound fill uniquely") {
  auto star = point();
  for (auto x : {nerve(cat::linearOrder(1)), nerve(cat::cyclicGroup(2))}) {
    auto p = toTerminal(x, star);
    const int m = sweepBound(p);
    for (int k = 0; k <= m; k += m) {
      auto i = deltaSubInclusion(horn(m, k), m);
      for (auto& top : homSet(horn(m, k), x)) {
        LiftingSquare sq{i, p, top, toTerminal(delta(m), star)};
        CHECK(solveLifting(sq).fillers.size() == 1);
      }
    }
  }
}

TEST_CASE("monomorphism by lifting agrees with injectivity") {
  std::vector<SSetPtr> pool = {point(), twoPoints(), delta(1), boundary(1), boundary(2), horn(2, 0), circle(), delta(2)};
  std::mt19937 rng(7);
  int checked = 0, monos = 0;
  while (checked < 200) {
    auto a = pool[rng() % pool.size()], b = pool[rng() % pool.size()];
    auto maps = homSet(a, b);
    if (maps.empty()) continue;
    auto& f = maps[rng() % maps.size()];
    bool expected = injectiveOracle(f, std::max(a->cap(), b->cap()) + 1);
    auto r = classifyMap(f, MapKind::Monomorphism);
    CHECK(r.holds == expected);
    monos += expected;
    ++checked;
  }
  CHECK(monos > 0);
  CHECK(monos < 200);
}

TEST_CASE("budget exhaustion is reported") {
  ContextScope scope(50);
  CHECK_THROWS_AS(countMaps(boundary(3), nerve(cat::kleinFour())), BudgetExceeded);
}
