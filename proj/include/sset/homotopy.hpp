#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sset/core.hpp"
#include "sset/lifting.hpp"

namespace sset {

enum class Flavor { KQ, Joyal };
Flavor parseFlavor(const std::string& s);
std::string toString(Flavor f);

struct Pi0 {
  int count = 0;
  std::vector<int> componentOf;  // per vertex, components numbered by least vertex
};
Pi0 pi0(const SSetPtr& x);

/// Whether f and g are homotopic through source x I -> target, I = Delta^1 (KQ)
/// or H (Joyal), optionally constant on the image of `rel` (an inclusion into
/// the source).
bool homotopic(const SimplicialMap& f, const SimplicialMap& g, Flavor flavor,
               const std::optional<SimplicialMap>& rel = std::nullopt);

struct PointedObject {
  SSetPtr space;
  int base = 0;
};

struct HomotopyClassTable {
  int degree = 0;
  std::vector<int> representatives;  // n-cells with all faces at the base
  std::vector<int> classOf;          // per representative
  std::vector<int> classRep;         // per class, least representative
  int identity = 0;
  std::vector<std::vector<int>> multiplication;  // classes

  int order() const { return static_cast<int>(classRep.size()); }
  /// Class of an n-cell, if it is a representative.
  std::optional<int> classOfCell(int cell) const;
};
HomotopyClassTable piN(const PointedObject& p, int n);

bool isWeakEquivalenceKan(const SimplicialMap& f);

struct QCatMapSpace {
  SSetPtr object;
  Pullback fiber;      // over the vertex (x, y) of Map(boundary(1), X)
  MappingSpace paths;  // Map(Delta^1, X)
};
QCatMapSpace qcatMapSpace(const SSetPtr& x, int from, int to, int minCap = 0);

bool isEquivalenceEdge(const SSetPtr& x, int edge);

struct DKReport {
  bool essentiallySurjective = false;
  bool fullyFaithful = false;
  bool verdict = false;
  std::vector<std::string> detail;
};
DKReport isDKEquivalenceQCat(const SimplicialMap& f);

/// Number of n-cells of X whose boundary is the given sphere boundary(n) -> X.
int countFillers(const SSetPtr& x, const SimplicialMap& sphere);

bool isMinimal(const SSetPtr& x);
bool isLeanStratifiedKan(const SimplicialMap& f);

}  // namespace sset
