#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sset/core.hpp"
#include "sset/homotopy.hpp"
#include "sset/lifting.hpp"
#include "sset/ops.hpp"
#include "sset/pro.hpp"

namespace sset {

/// A cofibration U >-> V of finite simplicial sets, flagged when trivial.
struct MarkedGenerator {
  std::string name;
  SimplicialMap map;
  bool trivial = false;
};

/// Boundaries and horns through dimension cap; horns are trivial (inner horns
/// only for the Joyal flavor, which omits outer horns).
std::vector<MarkedGenerator> defaultGenerators(Flavor flavor, int cap);

/// A finite sample of a fibration test category.
struct FibTestPresentation {
  std::vector<SSetPtr> ambient;
  std::vector<int> tests;                  // indices into ambient
  std::vector<SimplicialMap> fibrations;   // between test objects
  std::vector<int> trivialFibrations;      // indices into fibrations
  std::vector<MarkedGenerator> generators;
  /// When set, objects and maps not isomorphic to listed ones are classified
  /// by the model structure the presentation is inherited from.
  std::optional<Flavor> inherited;

  /// First violated invariant, if any.
  std::optional<std::string> validate() const;
};

/// Tests as given; every map between tests marked by the fibration and
/// trivial-fibration classifiers of the flavor.
FibTestPresentation inheritedPresentation(const std::vector<SSetPtr>& tests, Flavor flavor, int generatorCap,
                                          const std::vector<SSetPtr>& extraAmbient = {});

struct AxiomResult {
  int axiom = 0;
  Tristate verdict = Tristate::Yes;  // Unknown: undetermined (budget or membership)
  std::string summary;
  std::optional<std::string> counterexample;
  std::optional<LiftingSquare> square;
  std::vector<std::string> undetermined;
  std::size_t checks = 0;
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;  // (1)..(5)
  std::vector<std::string> generatorsUsed;
  std::uint64_t budgetPerCheck = 0;
  bool allPass() const;
};

/// budgetPerCheck bounds each membership, lifting or equivalence check;
/// totalBudget bounds the whole run (exhaustion leaves the rest undetermined).
AxiomReport verifyAxioms(const FibTestPresentation& p, Flavor flavor, std::uint64_t budgetPerCheck,
                         std::uint64_t totalBudget = std::numeric_limits<std::uint64_t>::max());

struct GeneratingSets {
  std::vector<ProMap> fibrations;         // P
  std::vector<ProMap> trivialFibrations;  // Q
};
/// Throws PreconditionError unless the report passes every axiom.
GeneratingSets generatingSets(const FibTestPresentation& p, const AxiomReport& report);

struct Closure {
  std::vector<SSetPtr> objects;
  bool fixpoint = false;
  int rounds = 0;
};
/// Adds the objects s^V and s^U x_{t^U} t^V of pullback-powers of t -> * along
/// the generators until nothing new (up to isomorphism) appears or `cap`
/// rounds have run.
Closure closeUnderPullbackPowers(const std::vector<SSetPtr>& tests, const std::vector<MarkedGenerator>& generators,
                                 int cap);

/// X -j-> X x I u_{X x 1} Y -r-> Y with r o j = f, I = Δ¹ (kq) or H (joyal).
struct CylinderFactorization {
  SimplicialMap f;
  SSetPtr interval;
  int end0 = 0, end1 = 1;
  SimplicialMap firstMono, firstTop;  // ∅ >-> Y, ∅ -> X
  Pushout first;                      // X ⊔ Y
  Product cylinderProduct;            // X x I
  Product boundaryProduct;            // X x ∂I
  SimplicialMap secondMono, secondTop;  // X x ∂I >-> X x I, X x ∂I -> X ⊔ Y
  Pushout second;
  SSetPtr cylinder;
  SimplicialMap j, r, section;
  Product homotopyDomain;  // cylinder x I
  std::optional<SimplicialMap> homotopy;  // id at end 0, section o r at end 1
};
CylinderFactorization mappingCylinderFactor(const SimplicialMap& f, Flavor flavor);

/// Checks the universal property of a pushout square against all cocones into
/// the given test objects: restriction Hom(P, Z) -> Hom(B, Z) x_{Hom(A, Z)}
/// Hom(C, Z) must be bijective.
std::optional<std::string> checkPushoutSquare(const SimplicialMap& mono, const SimplicialMap& g, const Pushout& p,
                                              const std::vector<SSetPtr>& samples);

/// First failed check of a factorization: r o j = f, j mono, both squares
/// genuine pushouts, j their composite, r o section = id, homotopy ends.
std::optional<std::string> validateFactorization(const CylinderFactorization& c);

}  // namespace sset
