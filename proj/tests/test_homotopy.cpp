#include <map>
#include <set>

#include "doctest.h"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/homotopy.hpp"
#include "sset/ops.hpp"

using namespace sset;

namespace {

SimplicialMap vertexMap(const SSetPtr& x, int v) { return yonedaMap(x, 0, v); }

void checkGroupAxioms(const HomotopyClassTable& t) {
  const int k = t.order();
  for (int a = 0; a < k; ++a) {
    CHECK(t.multiplication[t.identity][a] == a);
    CHECK(t.multiplication[a][t.identity] == a);
    int inverses = 0;
    for (int b = 0; b < k; ++b) inverses += t.multiplication[a][b] == t.identity;
    CHECK(inverses == 1);
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        CHECK(t.multiplication[t.multiplication[a][b]][c] == t.multiplication[a][t.multiplication[b][c]]);
  }
}

// symmetric group on three letters, elements as permutations of {0,1,2}
FiniteCategory s3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (int k = 0; k < 6; ++k)
        if (perms[k] == c) table[a][b] = k;
    }
  return cat::groupFromTable("S3", table);
}

SimplicialMap functorMap(const FiniteCategory& a, const FiniteCategory& b, std::vector<int> objs, std::vector<int> arrows) {
  Functor F{&a, &b, std::move(objs), std::move(arrows)};
  REQUIRE_FALSE(F.validate().has_value());
  return nerveMap(F, nerve(a), nerve(b));
}

}  // namespace

TEST_CASE("connected components") {
  CHECK(pi0(boundary(1)).count == 2);
  CHECK(pi0(jNerve(1)).count == 1);
  CHECK(pi0(coproduct({nerve(cat::cyclicGroup(2)), nerve(cat::cyclicGroup(3))}).object).count == 2);
  CHECK(pi0(horn(3, 1)).count == 1);
  auto p = pi0(coproduct({delta(1), point(), boundary(1)}).object);
  CHECK(p.count == 4);
  CHECK(p.componentOf[0] == p.componentOf[1]);
}

TEST_CASE("homotopies of maps") {
  auto J = jNerve(1);
  CHECK(homotopic(vertexMap(J, 0), vertexMap(J, 0), Flavor::KQ));
  CHECK(homotopic(vertexMap(J, 0), vertexMap(J, 1), Flavor::KQ));
  CHECK(homotopic(vertexMap(J, 0), vertexMap(J, 1), Flavor::Joyal));
  CHECK_FALSE(homotopic(vertexMap(boundary(1), 0), vertexMap(boundary(1), 1), Flavor::KQ));
  CHECK_THROWS_AS(homotopic(vertexMap(delta(1), 0), vertexMap(delta(1), 1), Flavor::KQ), PreconditionError);
  auto n1 = nerve(cat::linearOrder(1));
  CHECK_FALSE(homotopic(vertexMap(n1, 0), vertexMap(n1, 1), Flavor::Joyal));
  CHECK((parseFlavor("joyal") == Flavor::Joyal));
}

TEST_CASE("homotopy is an equivalence relation on maps into Kan targets") {
  for (auto y : {jNerve(2), nerve(cat::cyclicGroup(2)), coproduct({point(), jNerve(1)}).object}) {
    auto maps = homSet(delta(1), y);
    const int n = static_cast<int>(maps.size());
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rel[i][j] = homotopic(maps[i], maps[j], Flavor::KQ);
    for (int i = 0; i < n; ++i) {
      CHECK(rel[i][i]);
      for (int j = 0; j < n; ++j) {
        CHECK(rel[i][j] == rel[j][i]);
        for (int k = 0; k < n; ++k)
          if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
      }
    }
  }
}

TEST_CASE("fundamental groups of one-object nerves") {
  for (auto g : {cat::cyclicGroup(2), cat::cyclicGroup(3), cat::kleinFour(), s3()}) {
    auto X = nerve(g);
    auto t = piN({X, 0}, 1);
    CHECK(t.order() == g.arrowCount());
    checkGroupAxioms(t);
    // edge-path oracle: each class holds one edge, named by its arrow
    std::vector<int> arrowOf(t.order());
    for (int c = 0; c < t.order(); ++c) {
      auto it = std::find(g.arrows.begin(), g.arrows.end(), X->name(1, t.classRep[c]));
      REQUIRE(it != g.arrows.end());
      arrowOf[c] = static_cast<int>(it - g.arrows.begin());
    }
    bool straight = true, reversed = true;
    for (int a = 0; a < t.order(); ++a)
      for (int b = 0; b < t.order(); ++b) {
        straight = straight && arrowOf[t.multiplication[a][b]] == g.compose(arrowOf[a], arrowOf[b]);
        reversed = reversed && arrowOf[t.multiplication[a][b]] == g.compose(arrowOf[b], arrowOf[a]);
      }
    CHECK((straight || reversed));
  }
}

TEST_CASE("higher homotopy groups vanish") {
  CHECK(piN({nerve(cat::cyclicGroup(3)), 0}, 2).order() == 1);
  CHECK(piN({nerve(cat::cyclicGroup(2)), 0}, 3).order() == 1);
  CHECK(piN({jNerve(2), 0}, 1).order() == 1);
  CHECK(piN({jNerve(2), 2}, 2).order() == 1);
  CHECK_THROWS_AS(piN({delta(1), 0}, 1), PreconditionError);
}

TEST_CASE("weak equivalences of Kan complexes") {
  auto z2 = cat::cyclicGroup(2);
  auto X = nerve(z2);
  CHECK(isWeakEquivalenceKan(identity(X)));
  auto big = cat::product(z2, cat::codiscreteGroupoid(2));
  REQUIRE_FALSE(big.validate().has_value());
  const int mb = 4;
  auto incl = functorMap(z2, big, {0}, {0 * mb + 0, 1 * mb + 0});
  CHECK(isWeakEquivalenceKan(incl));
  auto trivial = cat::cyclicGroup(1);
  auto collapse = functorMap(z2, trivial, {0}, {0, 0});
  CHECK_FALSE(isWeakEquivalenceKan(collapse));
  CHECK_FALSE(isWeakEquivalenceKan(toTerminal(coproduct({point(), point()}).object, point())));
}

TEST_CASE("mapping spaces of quasi-categories") {
  auto n1 = nerve(cat::linearOrder(1));
  auto forward = qcatMapSpace(n1, 0, 1);
  CHECK(forward.object->size(0) == 1);
  CHECK(isKanComplex(forward.object));
  CHECK(qcatMapSpace(n1, 1, 0).object->size(0) == 0);
  auto loops = qcatMapSpace(nerve(cat::cyclicGroup(2)), 0, 0);
  CHECK(loops.object->size(0) == 2);
  CHECK(isKanComplex(loops.object));
  CHECK(pi0(loops.object).count == 2);
  CHECK_THROWS_AS(qcatMapSpace(boundary(2), 0, 1), PreconditionError);
}

TEST_CASE("equivalence edges") {
  auto nz2 = nerve(cat::cyclicGroup(2));
  for (int e = 0; e < nz2->size(1); ++e) CHECK(isEquivalenceEdge(nz2, e));
  auto n1 = nerve(cat::linearOrder(1));
  auto n1e = extendTo(n1, 1);
  for (int e = 0; e < n1e->size(1); ++e)
    CHECK(isEquivalenceEdge(n1, e) == n1e->isDegenerate(1, e));
}

TEST_CASE("Dwyer-Kan equivalences of quasi-categories") {
  auto n1 = nerve(cat::linearOrder(1));
  auto id = isDKEquivalenceQCat(identity(n1));
  CHECK(id.fullyFaithful);
  CHECK(id.essentiallySurjective);
  CHECK(id.verdict);

  auto z2 = cat::cyclicGroup(2);
  auto big = cat::product(z2, cat::codiscreteGroupoid(2));
  auto incl = functorMap(z2, big, {0}, {0, 4});
  auto r = isDKEquivalenceQCat(incl);
  CHECK(r.verdict);
  CHECK_FALSE(isIsomorphism(incl));

  auto collapse = functorMap(cat::linearOrder(1), cat::linearOrder(0), {0, 0}, {0, 0, 0});
  auto c = isDKEquivalenceQCat(collapse);
  CHECK_FALSE(c.fullyFaithful);
  CHECK_FALSE(c.verdict);
}

TEST_CASE("filler counts") {
  auto g = cat::cyclicGroup(3);
  auto X = nerve(g);
  auto b2 = boundary(2);
  int commuting = 0, fillable = 0;
  for (auto& s : homSet(b2, X)) {
    auto e = s.extended(1);
    auto arrow = [&](const char* seq) {
      auto name = X->name(1, e(1, *e.source()->find(1, seq)));
      return static_cast<int>(std::find(g.arrows.begin(), g.arrows.end(), name) - g.arrows.begin());
    };
    const bool commutes = g.compose(arrow("12"), arrow("01")) == arrow("02");
    const int n = countFillers(X, s);
    CHECK(n == (commutes ? 1 : 0));
    commuting += commutes;
    fillable += n;
  }
  CHECK(commuting == 9);
  CHECK(fillable == 9);
  auto deg = constantMap(b2, nerve(cat::linearOrder(2)), 1);
  CHECK(countFillers(nerve(cat::linearOrder(2)), deg) == 1);
}

TEST_CASE("minimality") {
  CHECK(isMinimal(nerve(cat::linearOrder(1))));
  CHECK(isMinimal(nerve(cat::cyclicGroup(2))));
  CHECK_FALSE(isMinimal(jNerve(1)));
}

TEST_CASE("lean stratified Kan complexes") {
  auto p0 = cat::linearOrder(0);
  auto z2 = cat::cyclicGroup(2);
  CHECK(isLeanStratifiedKan(functorMap(z2, p0, {0}, {0, 0})));
  auto n1 = nerve(cat::linearOrder(1));
  CHECK(isLeanStratifiedKan(identity(n1)));
  auto l1 = cat::linearOrder(1);
  CHECK_FALSE(isLeanStratifiedKan(functorMap(l1, p0, {0, 0}, {0, 0, 0})));
}
