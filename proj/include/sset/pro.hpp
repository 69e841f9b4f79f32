#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sset/core.hpp"
#include "sset/homotopy.hpp"
#include "sset/lifting.hpp"

namespace sset {

/// Finite codirected poset. A tower truncated at N has elements "0".."N" with
/// a <= b iff a >= b as integers, so level N is the least element.
struct IndexPoset {
  enum class Kind { FinitePoset, Tower };
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;  // leq[a][b]: a <= b
  Kind kind = Kind::FinitePoset;
  int towerBound = -1;

  int size() const { return static_cast<int>(elements.size()); }
  /// First violated axiom (order, codirectedness), if any.
  std::optional<std::string> validate() const;
  /// The least element (exists since the poset is finite and codirected).
  int bottom() const;
  std::optional<int> find(const std::string& name) const;
  bool operator==(const IndexPoset& o) const { return elements == o.elements && leq == o.leq; }

  static IndexPoset tower(int n);
  static IndexPoset single();
};

/// A diagram over an index poset: bond(a, b): level(a) -> level(b) for a <= b.
class ProObject {
 public:
  /// Bonds for every comparable pair a < b (identities are filled in);
  /// functoriality is checked exhaustively.
  ProObject(IndexPoset index, std::vector<SSetPtr> levels, std::map<std::pair<int, int>, SimplicialMap> bonds);

  const IndexPoset& index() const { return index_; }
  const SSetPtr& level(int a) const { return levels_.at(a); }
  const std::vector<SSetPtr>& levels() const { return levels_; }
  const SimplicialMap& bond(int a, int b) const;
  int bottom() const { return index_.bottom(); }
  const SSetPtr& bottomLevel() const { return levels_[index_.bottom()]; }

 private:
  IndexPoset index_;
  std::vector<SSetPtr> levels_;
  std::map<std::pair<int, int>, SimplicialMap> bonds_;
};
using ProPtr = std::shared_ptr<const ProObject>;

ProPtr constantPro(const SSetPtr& x);
/// Tower over IndexPoset::tower(levels.size()-1) from consecutive bonds
/// down[k]: level(k+1) -> level(k).
ProPtr towerPro(const std::vector<SSetPtr>& levels, const std::vector<SimplicialMap>& down);

/// Germ of a map into the target level j: a representative level(i) -> D_j,
/// normalized to the least i (in element order) through which it factors.
struct Germ {
  int level = 0;
  SimplicialMap map;
};

/// An element of lim_j colim_i Hom(C_i, D_j), stored as one germ per target
/// element. Level maps additionally carry their components.
class ProMap {
 public:
  ProMap() = default;
  /// The map determined by its value on least elements, C_bottom -> D_bottom.
  static ProMap fromBottom(ProPtr source, ProPtr target, const SimplicialMap& bottom);
  /// A level map over a shared index; components must commute with bonds.
  static ProMap level(ProPtr source, ProPtr target, std::vector<SimplicialMap> components);

  const ProPtr& source() const { return source_; }
  const ProPtr& target() const { return target_; }
  const std::vector<Germ>& germs() const { return germs_; }
  const SimplicialMap& bottom() const { return bottom_; }
  bool isLevel() const { return !components_.empty(); }
  const std::vector<SimplicialMap>& components() const { return components_; }

 private:
  ProPtr source_, target_;
  SimplicialMap bottom_;
  std::vector<Germ> germs_;
  std::vector<SimplicialMap> components_;
};

ProMap compose(const ProMap& g, const ProMap& f);
ProMap identity(const ProPtr& c);
bool sameProMap(const ProMap& f, const ProMap& g);
bool isProIsomorphism(const ProMap& f);
/// Inverse of a pro-isomorphism; throws PreconditionError otherwise.
ProMap inverse(const ProMap& f);

std::vector<ProMap> proHom(const ProPtr& c, const ProPtr& d);

struct LevelRepresentation {
  ProMap level;      // over the common index
  ProMap sourceIso;  // reindexed source -> original source
  ProMap targetIso;  // reindexed target -> original target
};
LevelRepresentation levelRepresentation(const ProMap& f);

enum class MonoMode { Direct, Lifting };
struct MonoVerdict {
  bool holds = false;
  std::optional<LiftingWitness> witness;
  std::string detail;
};
/// Both modes are computed and must agree (EngineDefect otherwise).
MonoVerdict isProMono(const ProMap& f, MonoMode mode);

struct MonoRepresentation {
  ProMap level;       // levelwise injective, over the target index
  ProMap comparison;  // original source -> repaired source, a pro-isomorphism
};
/// Throws PreconditionError (with the witness in the message) for non-monos.
MonoRepresentation monoLevelRepresentation(const ProMap& f);

struct ProCompletion {
  ProPtr tower;
  std::vector<SimplicialMap> units;  // X -> cosk_n X
  int bound = 0;
  bool stabilized = false;  // X is n-coskeletal for some n <= bound
  std::optional<int> coskeletalDegree;
};
constexpr int kDefaultTowerBound = 4;
ProCompletion proCompleteLean(const SSetPtr& x, int towerBound = kDefaultTowerBound);

/// colim_i Map(C_i, t) along restriction; attained at the least element.
MappingSpace proMapSpace(const ProPtr& c, const SSetPtr& t, int minCap = 0);

enum class Tristate { Yes, No, Unknown };
std::string toString(Tristate t);
struct ProWeReport {
  Tristate verdict = Tristate::Yes;
  std::vector<std::string> detail;  // one line per test object
};
ProWeReport isProWeakEquivalence(const ProMap& f, const std::vector<SSetPtr>& tests, Flavor flavor);

/// Degreewise limit over the index; cells are compatible families.
SSetPtr underlying(const ProPtr& c);
SimplicialMap underlyingMap(const ProMap& f);

}  // namespace sset
