#include "doctest.h"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/verifier.hpp"

using namespace sset;

TEST_CASE("default generators") {
  auto kq = defaultGenerators(Flavor::KQ, 2);
  int trivial = 0;
  for (auto& g : kq) {
    CHECK(g.map.injective());
    trivial += g.trivial ? 1 : 0;
  }
  CHECK(trivial == 5);  // Λ¹₀, Λ¹₁, Λ²₀, Λ²₁, Λ²₂
  CHECK(kq.size() == 8);
  auto joyal = defaultGenerators(Flavor::Joyal, 2);
  trivial = 0;
  for (auto& g : joyal) trivial += g.trivial ? 1 : 0;
  CHECK(trivial == 2);  // Λ²₁ and {0} -> H
}

TEST_CASE("presentation validation") {
  auto p = inheritedPresentation({point(), nerve(cat::cyclicGroup(2))}, Flavor::KQ, 1);
  CHECK_FALSE(p.validate());
  CHECK(p.fibrations.size() == 3);  // id_*, N -> *, id_N; the constant endomorphism of N(Z/2) lifts no edge
  auto bad = p;
  bad.trivialFibrations.clear();
  CHECK(bad.validate().has_value());
  CHECK_THROWS_AS(inheritedPresentation({boundary(2)}, Flavor::KQ, 1), PreconditionError);
}

TEST_CASE("axioms on a small inherited presentation") {
  auto p = inheritedPresentation({point(), nerve(cat::cyclicGroup(2))}, Flavor::KQ, 1);
  auto rep = verifyAxioms(p, Flavor::KQ, 5'000'000);
  REQUIRE(rep.axioms.size() == 5);
  for (auto& a : rep.axioms) CHECK(a.summary.rfind("yes", 0) == 0);
  CHECK(rep.allPass());
  auto g = generatingSets(p, rep);
  CHECK(g.fibrations.size() == p.fibrations.size());
  CHECK(g.trivialFibrations.size() == p.trivialFibrations.size());
  CHECK(g.trivialFibrations.size() <= g.fibrations.size());

  // N(Z/2) -> * is marked trivial although Map(-, N(Z/2)) does not see it as an equivalence
  auto wrong = p;
  for (std::size_t i = 0; i < p.fibrations.size(); ++i)
    if (!sameObject(p.fibrations[i].source(), p.fibrations[i].target())) wrong.trivialFibrations.push_back(static_cast<int>(i));
  auto r2 = verifyAxioms(wrong, Flavor::KQ, 5'000'000);
  CHECK((r2.axioms[2].verdict == Tristate::No));
  CHECK(r2.axioms[2].counterexample.has_value());
  CHECK_FALSE(r2.allPass());
  CHECK_THROWS_AS(generatingSets(wrong, r2), PreconditionError);
}

TEST_CASE("axiom one needs a terminal test") {
  FibTestPresentation p;
  p.ambient = {nerve(cat::cyclicGroup(2))};
  p.tests = {0};
  p.fibrations = {identity(p.ambient[0])};
  p.trivialFibrations = {0};
  auto rep = verifyAxioms(p, Flavor::KQ, 1'000'000);
  CHECK((rep.axioms[0].verdict == Tristate::No));
  // membership outside the listed tests is undetermined without an inherited structure
  p.generators = defaultGenerators(Flavor::KQ, 1);
  rep = verifyAxioms(p, Flavor::KQ, 1'000'000);
  CHECK((rep.axioms[1].verdict != Tristate::Yes));
}

TEST_CASE("closure under pullback-powers") {
  auto gens = defaultGenerators(Flavor::KQ, 1);
  auto c = closeUnderPullbackPowers({point()}, gens, 3);
  CHECK(c.fixpoint);
  CHECK(c.objects.size() == 1);
  CHECK(c.rounds == 1);
  auto z = closeUnderPullbackPowers({point(), nerve(cat::cyclicGroup(2))}, gens, 0);
  CHECK_FALSE(z.fixpoint);
  CHECK(z.objects.size() == 2);
}

TEST_CASE("mapping cylinder factorization") {
  auto z2 = nerve(cat::cyclicGroup(2));
  std::vector<SimplicialMap> maps = {identity(delta(1)), vertexInclusion(z2, 0), toTerminal(boundary(1), point()),
                                     deltaMap({0, 2}, 2), toTerminal(delta(1), point())};
  for (auto& f : maps) {
    auto c = mappingCylinderFactor(f, Flavor::KQ);
    CHECK(validateFactorization(c).value_or("ok") == "ok");
    CHECK(c.j.injective());
  }
  // Δ⁰ x Δ¹ u Y: one extra vertex over the source
  auto c = mappingCylinderFactor(vertexInclusion(z2, 0), Flavor::KQ);
  CHECK(cellCount(c.cylinder, 0) == 2);
  CHECK(cellCount(c.cylinder, 1) == cellCount(z2, 1) + 1 + 1);

  // H is not a quasi-category: the squares and r o j = f hold, a strict H-homotopy need not exist
  auto cj = mappingCylinderFactor(toTerminal(boundary(1), point()), Flavor::Joyal);
  CHECK(cellCount(cj.cylinder, 0) == 3);
  CHECK(sameMap(compose(cj.r, cj.j), cj.f));
  auto vj = validateFactorization(cj);
  if (vj) CHECK(*vj == "no homotopy from the identity to section o r");
  auto ci = mappingCylinderFactor(identity(point()), Flavor::Joyal);
  CHECK(findIsomorphism(ci.cylinder, walkingH()).has_value());
}

TEST_CASE("pushout square checks") {
  auto inc = deltaMap({0}, 1);
  auto g = toTerminal(delta(0), delta(0));
  auto po = pushout(inc, g);
  CHECK_FALSE(checkPushoutSquare(inc, g, po, {point(), discreteSet(2)}));
  // a commuting square that is not a pushout
  Pushout fake{point(), toTerminal(delta(1), point()), identity(point())};
  CHECK(checkPushoutSquare(inc, g, fake, {point(), jNerve(1)}).has_value());
}
