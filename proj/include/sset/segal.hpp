#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sset/category.hpp"
#include "sset/core.hpp"
#include "sset/ops.hpp"

namespace sset {

/// A bisimplicial set X_{t,n} stored as rows X_{t,•} (inner simplicial sets)
/// for t <= outerCap, joined by outer face and degeneracy maps. Above the
/// outer cap the rows are given by the outer extension policy.
class BisimplicialSet {
 public:
  /// faces[t][i]: row t -> row t-1 (t >= 1); degens[t][j]: row t -> row t+1 (t < cap).
  BisimplicialSet(Extension outer, std::vector<SSetPtr> rows, std::vector<std::vector<SimplicialMap>> faces,
                  std::vector<std::vector<SimplicialMap>> degens);

  Extension outerExtension() const { return outer_; }
  int outerCap() const { return static_cast<int>(rows_.size()) - 1; }
  int innerCap() const;
  const SSetPtr& row(int t) const { return rows_.at(t); }
  const std::vector<SSetPtr>& rows() const { return rows_; }
  const SimplicialMap& outerFace(int t, int i) const { return faces_.at(t).at(i); }
  const SimplicialMap& outerDegen(int t, int j) const { return degens_.at(t).at(j); }
  int cells(int t, int n) const { return cellCount(rows_.at(t), n); }

  /// First violated bisimplicial identity (rows, outer maps, outer identities).
  std::optional<std::string> checkIdentities() const;

 private:
  Extension outer_;
  std::vector<SSetPtr> rows_;
  std::vector<std::vector<SimplicialMap>> faces_, degens_;
};
using BSetPtr = std::shared_ptr<const BisimplicialSet>;

struct BisimplicialMap {
  BSetPtr source, target;
  std::vector<SimplicialMap> rows;  // t <= min of the outer caps
  std::optional<std::string> check() const;
};

/// (X ⊠ Y)_{t,n} = X_t × Y_n, stored through outer degree max(outerCap, X.cap).
BSetPtr externalProduct(const SSetPtr& x, const SSetPtr& y, int outerCap = -1);
/// Constant in the inner direction: X_{t,n} = N(C)_t.
BSetPtr discreteNerve(const FiniteCategory& c);
BisimplicialMap discreteNerveMap(const Functor& f, const BSetPtr& source, const BSetPtr& target);

/// Rows materialized through outer degree t (outer coskeletal extension).
BSetPtr extendOuter(const BSetPtr& x, int t);
SSetPtr rowAt(const BSetPtr& x, int t);
/// Column n: the simplicial set t -> X_{t,n}.
SSetPtr column(const BSetPtr& x, int n);
/// (ev_0 X)_t = X_{t,0}.
SSetPtr ev0(const BSetPtr& x);

struct Matching {
  SSetPtr object;                        // M_t X
  SimplicialMap comparison;              // row t -> M_t X
  std::vector<SimplicialMap> projections;  // M_t X -> row t-1
};
Matching matchingObject(const BSetPtr& x, int t);

/// Sing(X)_{t,n} = Hom(Δ^t × J^n, X) for a lean quasi-category X, with both
/// caps equal to its coskeletal degree c.
struct Sing {
  BSetPtr object;
  SSetPtr target;  // X as a c-coskeletal object
  int cap = 0;
  std::vector<std::vector<Product>> domains;                 // [t][n]: Δ^t × J^n
  std::vector<std::vector<std::vector<Components>>> maps;  // [t][n][cell], through degree c
};
Sing singJ(const SSetPtr& x);
/// ev_0 Sing(X) -> X, evaluating at the top simplex.
SimplicialMap evSingComparison(const Sing& s);
/// ∂J^{k+1}: cells of J^{k+1} missing at least one vertex.
Image boundaryJ(int k);

struct BisimplicialSubobject {
  BSetPtr object;
  BisimplicialMap inclusion;
};
enum class LocalizationKind { Segal, Completeness };
/// Segal(t, n): Sp Δ^t ⊠ Δ^n ∪ Δ^t ⊠ ∂Δ^n -> Δ^t ⊠ Δ^n.
/// Completeness(n): {0} ⊠ Δ^n ∪ J ⊠ ∂Δ^n -> J ⊠ Δ^n, J = jNerve(1).
/// outerCap (default t, resp. 1) sets the stored outer degree.
BisimplicialSubobject localizationMap(LocalizationKind kind, int t, int n, int outerCap = -1);

struct BisimplicialClassification {
  bool doublyLean = false;
  std::optional<int> outerDegree, innerDegree;
  std::vector<std::string> notes;
};
BisimplicialClassification classifyBisimplicial(const BSetPtr& x);

bool isReedyFibrantDesk(const BSetPtr& x);
/// Require Reedy fibrancy (PreconditionError otherwise).
bool checkSegal(const BSetPtr& x);
bool checkComplete(const BSetPtr& x);

/// map_X(x, y): fiber of X_{1,•} -> X_{0,•} × X_{0,•} over (x, y).
Pullback cssMapSpace(const BSetPtr& x, int from, int to);

struct CssDKReport {
  bool essentiallySurjective = false;
  bool fullyFaithful = false;
  bool verdict = false;
  std::vector<std::string> detail;
};
CssDKReport isDKEquivalenceCSS(const BisimplicialMap& f);
/// Every row map is a weak equivalence of Kan complexes.
bool rowwiseWeakEquivalence(const BisimplicialMap& f);

}  // namespace sset
