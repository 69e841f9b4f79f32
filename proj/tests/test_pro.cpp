#include <random>
#include <set>

#include "doctest.h"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/ops.hpp"
#include "sset/pro.hpp"
#include "sset/sampling.hpp"

using namespace sset;

namespace {

SSetPtr nz(int n) { return nerve(cat::cyclicGroup(n)); }

SimplicialMap discreteMap(int from, int to, const std::vector<int>& f) {
  return SimplicialMap(discreteSet(from), discreteSet(to), Components{f, f});
}

/// Index in homSet(x, k) of each element of proHom(complete(x), const k),
/// obtained by restricting germs along the units.
std::vector<int> restrictionIndices(const SSetPtr& x, const SSetPtr& k, int bound) {
  auto pc = proCompleteLean(x, bound);
  auto hom = homSet(x, k);
  std::vector<int> out;
  for (auto& f : proHom(pc.tower, constantPro(k))) {
    const Germ& g = f.germs().at(0);
    auto r = compose(g.map, pc.units[g.level]);
    int found = -1;
    for (std::size_t i = 0; i < hom.size(); ++i)
      if (sameMap(hom[i], r)) found = static_cast<int>(i);
    out.push_back(found);
  }
  return out;
}

}  // namespace

TEST_CASE("index posets") {
  auto t = IndexPoset::tower(3);
  CHECK_FALSE(t.validate().has_value());
  CHECK(t.bottom() == 3);
  IndexPoset v{{"a", "b", "c"}, {{true, false, true}, {false, true, true}, {false, false, true}}};
  CHECK(v.validate().has_value());
  IndexPoset w{{"a", "b", "c"}, {{true, false, false}, {false, true, false}, {false, false, true}}};
  CHECK(w.validate().has_value());
  IndexPoset diamond{{"top", "l", "r", "bot"},
                     {{true, false, false, false}, {true, true, false, false}, {true, false, true, false}, {true, true, true, true}}};
  CHECK_FALSE(diamond.validate().has_value());
  CHECK(diamond.bottom() == 3);
}

TEST_CASE("pro-objects check functoriality") {
  IndexPoset diamond{{"top", "l", "r", "bot"},
                     {{true, false, false, false}, {true, true, false, false}, {true, false, true, false}, {true, true, true, true}}};
  auto two = discreteSet(2);
  auto swap = discreteMap(2, 2, {1, 0}), id = identity(two);
  std::map<std::pair<int, int>, SimplicialMap> bonds{{{1, 0}, swap}, {{2, 0}, id}, {{3, 1}, id}, {{3, 2}, id}, {{3, 0}, swap}};
  CHECK_THROWS_AS(ProObject(diamond, {two, two, two, two}, bonds), InvariantError);
  bonds.at({2, 0}) = swap;
  CHECK_NOTHROW(ProObject(diamond, {two, two, two, two}, bonds));
  bonds.erase({3, 0});
  CHECK_THROWS_AS(ProObject(diamond, {two, two, two, two}, bonds), PreconditionError);
}

TEST_CASE("hom sets of pro-objects") {
  auto D = towerPro({discreteSet(2), discreteSet(3), discreteSet(4)}, {discreteMap(3, 2, {0, 1, 1}), discreteMap(4, 3, {0, 0, 2, 1})});
  // limit of the vertex sets: compatible triples
  int compatible = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 4; ++c)
        compatible += D->bond(1, 0)(0, b) == a && D->bond(2, 1)(0, c) == b;
  CHECK(proHom(constantPro(point()), D).size() == static_cast<std::size_t>(compatible));

  for (auto [c, d] : std::vector<std::pair<SSetPtr, SSetPtr>>{{boundary(2), nz(2)}, {delta(1), jNerve(1)}, {horn(2, 1), delta(2)}}) {
    auto ph = proHom(constantPro(c), constantPro(d));
    CHECK(ph.size() == homSet(c, d).size());
    for (std::size_t i = 0; i < ph.size(); ++i)
      for (std::size_t j = i + 1; j < ph.size(); ++j) CHECK_FALSE(sameProMap(ph[i], ph[j]));
  }

  auto pc = proCompleteLean(boundary(3), 3);
  CHECK(proHom(pc.tower, constantPro(nz(2))).size() == countMaps(boundary(3), nz(2)));
}

TEST_CASE("germs are normalized to the least level") {
  auto pc = proCompleteLean(boundary(2), 2);
  std::map<int, int> byLevel;
  for (auto& f : proHom(pc.tower, constantPro(nz(2)))) ++byLevel[f.germs()[0].level];
  // functors from the codiscrete groupoid on three objects give the level-0
  // germs; the boundary triangle of cosk_1 forces the others down to level 2
  CHECK(byLevel[0] == 4);
  CHECK(byLevel[2] == 4);
  CHECK(byLevel.size() == 2);
}

TEST_CASE("pro-completion adjunction") {
  for (auto x : {boundary(3), coproduct({delta(2), point()}).object})
    for (auto k : {nz(2), jNerve(1)}) {
      auto idx = restrictionIndices(x, k, 3);
      std::set<int> hit(idx.begin(), idx.end());
      CHECK(idx.size() == homSet(x, k).size());
      CHECK(hit.size() == idx.size());
      CHECK(hit.count(-1) == 0);
    }
}

TEST_CASE("pro-completion towers") {
  auto pc = proCompleteLean(boundary(3), 3);
  CHECK(pc.tower->level(0)->size(0) == 4);
  CHECK(cellCount(pc.tower->level(0), 1) == 16);
  CHECK(pc.bound == 3);

  auto n = proCompleteLean(nz(2));
  REQUIRE(n.coskeletalDegree.has_value());
  CHECK(*n.coskeletalDegree == 2);
  CHECK(n.stabilized);
  for (int k = 2; k <= n.bound; ++k) CHECK(findIsomorphism(n.tower->level(k), nz(2)).has_value());
  CHECK_FALSE(findIsomorphism(n.tower->level(1), nz(2)).has_value());
}

TEST_CASE("level representations") {
  auto K = constantPro(nz(2));
  auto pc = proCompleteLean(boundary(2), 2);
  auto id = identity(pc.tower);
  auto same = levelRepresentation(id);
  CHECK(same.level.isLevel());
  CHECK(same.level.source() == pc.tower);

  for (auto& f : proHom(pc.tower, K)) {
    auto r = levelRepresentation(f);
    CHECK(r.level.isLevel());
    CHECK(isProIsomorphism(r.sourceIso));
    CHECK(isProIsomorphism(r.targetIso));
    CHECK(sameProMap(compose(f, r.sourceIso), compose(r.targetIso, r.level)));
    const int expected = f.germs()[0].level == 0 ? 3 : 1;
    CHECK(r.level.source()->index().size() == expected);
  }

  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto f = sample::randomProMono(rng, 3);
    auto g = sample::randomMap(rng, f.target()->bottomLevel(), sample::randomFinite(rng));
    if (!g) continue;
    auto h = compose(ProMap::fromBottom(f.target(), constantPro(g->target()), *g), f);
    auto r = levelRepresentation(h);
    CHECK(sameProMap(compose(h, r.sourceIso), compose(r.targetIso, r.level)));
  }
}

TEST_CASE("underlying objects") {
  auto x = boundary(2);
  CHECK(findIsomorphism(underlying(constantPro(x)), x).has_value());
  auto iso = discreteMap(3, 3, {2, 0, 1});
  auto t = towerPro({discreteSet(3), discreteSet(3)}, {iso});
  CHECK(underlying(t)->size(0) == 3);
  auto pc = proCompleteLean(boundary(3), 3);
  auto u = underlying(pc.tower);
  for (int m = 0; m <= 3; ++m) CHECK(u->size(m) == cellCount(boundary(3), m));
  CHECK_FALSE(u->checkIdentities().has_value());
}

TEST_CASE("pro-monomorphisms") {
  auto fold = ProMap::fromBottom(constantPro(discreteSet(2)), constantPro(point()), toTerminal(discreteSet(2), point()));
  CHECK_FALSE(isProMono(fold, MonoMode::Direct).holds);
  auto lifted = isProMono(fold, MonoMode::Lifting);
  CHECK_FALSE(lifted.holds);
  CHECK(lifted.witness.has_value());

  std::mt19937 rng(5);
  int monos = 0, total = 0;
  for (int t = 0; t < 30; ++t) {
    auto f = sample::randomProMap(rng, 4, t % 2 == 0);
    auto d = isProMono(f, MonoMode::Direct);
    CHECK(d.holds == isProMono(f, MonoMode::Lifting).holds);
    CHECK(d.holds == f.bottom().injective());
    monos += d.holds;
    ++total;
  }
  CHECK(monos > 0);
  CHECK(monos < total);

  for (int t = 0; t < 10; ++t) {
    auto f = sample::randomProMono(rng, 4);
    bool levelwise = true;
    for (auto& c : f.components()) levelwise = levelwise && c.injective();
    if (levelwise) CHECK(isProMono(f, MonoMode::Direct).holds);
    CHECK(isProMono(f, MonoMode::Lifting).holds);
  }
}

TEST_CASE("mono level representations") {
  auto incl = deltaSubInclusion(boundary(2), 2);
  auto f = ProMap::fromBottom(constantPro(boundary(2)), constantPro(delta(2)), incl);
  auto r = monoLevelRepresentation(f);
  CHECK(r.level.isLevel());
  CHECK(findIsomorphism(r.level.source()->level(0), boundary(2)).has_value());

  // the diagonal point into a fold tower, presented with a non-injective level
  auto two = discreteSet(2);
  auto D = towerPro({point(), two}, {toTerminal(two, point())});
  auto C = towerPro({two, discreteSet(1)}, {discreteMap(1, 2, {0})});
  auto naive = ProMap::level(C, D, {toTerminal(two, point()), discreteMap(1, 2, {1})});
  CHECK_FALSE(naive.components()[0].injective());
  auto rep = monoLevelRepresentation(naive);
  for (auto& c : rep.level.components()) CHECK(c.injective());
  CHECK(isProIsomorphism(rep.comparison));

  // constant 2 into a tower of 3-element sets
  auto T = towerPro({discreteSet(3), discreteSet(3)}, {discreteMap(3, 3, {0, 0, 1})});
  auto m = ProMap::fromBottom(constantPro(two), T, discreteMap(2, 3, {0, 2}));
  auto rm = monoLevelRepresentation(m);
  for (auto& c : rm.level.components()) CHECK(c.injective());
  CHECK(rm.level.source()->level(0)->size(0) == 2);
  CHECK(rm.level.source()->level(1)->size(0) == 2);

  std::mt19937 rng(3);
  for (int t = 0; t < 15; ++t) {
    auto g = sample::randomProMono(rng, 4);
    auto rg = monoLevelRepresentation(g);
    for (auto& c : rg.level.components()) CHECK(c.injective());
    auto u = underlyingMap(rg.level);
    CHECK(u.injective());
    auto orig = underlyingMap(g);
    for (int d = 0; d <= std::min(u.degree(), orig.degree()); ++d) {
      std::set<int> a(u.components()[d].begin(), u.components()[d].end());
      std::set<int> b(orig.components()[d].begin(), orig.components()[d].end());
      CHECK(a == b);
    }
  }

  CHECK_THROWS_AS(monoLevelRepresentation(ProMap::fromBottom(constantPro(two), constantPro(point()), toTerminal(two, point()))),
                  PreconditionError);
}

TEST_CASE("mapping spaces out of pro-objects") {
  auto x = boundary(2);
  auto t = nz(2);
  auto direct = mappingSpace(x, t);
  CHECK(proMapSpace(constantPro(x), t).object->size(0) == direct.object->size(0));
  auto pc = proCompleteLean(x, 2);
  auto viaTower = proMapSpace(pc.tower, t);
  CHECK(viaTower.object->size(0) == direct.object->size(0));
  CHECK(findIsomorphism(viaTower.object, direct.object).has_value());
  auto term = proMapSpace(pc.tower, point());
  for (int m = 0; m <= term.object->cap(); ++m) CHECK(term.object->size(m) == 1);
}

TEST_CASE("completed weak equivalences") {
  auto z = nz(2);
  std::vector<SSetPtr> T = {z, jNerve(1), point()};
  auto C = constantPro(z);
  CHECK((isProWeakEquivalence(identity(C), T, Flavor::KQ).verdict == Tristate::Yes));

  auto pc = proCompleteLean(z);
  auto counit = ProMap::fromBottom(pc.tower, C, *findIsomorphism(pc.tower->bottomLevel(), z));
  CHECK((isProWeakEquivalence(counit, T, Flavor::KQ).verdict == Tristate::Yes));
  CHECK((isProWeakEquivalence(counit, T, Flavor::Joyal).verdict == Tristate::Yes));

  auto collapse = ProMap::fromBottom(C, constantPro(point()), toTerminal(z, point()));
  auto r = isProWeakEquivalence(collapse, {z}, Flavor::KQ);
  CHECK((r.verdict == Tristate::No));
  CHECK(r.detail.size() == 1);

  CHECK_THROWS_AS(isProWeakEquivalence(identity(C), {delta(1)}, Flavor::KQ), PreconditionError);
  CHECK_NOTHROW(isProWeakEquivalence(identity(C), {nerve(cat::linearOrder(1))}, Flavor::Joyal));

  ContextScope scope(20);
  CHECK((isProWeakEquivalence(collapse, {z}, Flavor::KQ).verdict == Tristate::Unknown));
}
