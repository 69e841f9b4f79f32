#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sset {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Caps or extension policies of the inputs cannot be reconciled.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what, int requiredCap = -1)
      : std::runtime_error(what), requiredCap_(requiredCap) {}
  int requiredCap() const { return requiredCap_; }

 private:
  int requiredCap_;
};

/// The configured search budget ran out. Never means "no".
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (non-Kan target, bad index, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Stored data violates a simplicial identity or a structural invariant.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal inconsistency between two routes that must agree.
class EngineDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Per-thread evaluation context: search budget and cap-sensitivity notes.
// ---------------------------------------------------------------------------

struct ContextState {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t used = 0;
  std::vector<std::string> notes;
  ContextState* parent = nullptr;
};

/// RAII scope installing a fresh budget (and note list) for the current thread.
/// Charges also count against every enclosing scope.
class ContextScope {
 public:
  explicit ContextScope(std::uint64_t budget = std::numeric_limits<std::uint64_t>::max());
  ~ContextScope();
  ContextScope(const ContextScope&) = delete;
  ContextScope& operator=(const ContextScope&) = delete;

  std::uint64_t used() const;
  const std::vector<std::string>& notes() const;

 private:
  ContextState state_;
  ContextState* previous_;
};

/// Charge `n` search nodes against the active budget; throws BudgetExceeded.
void charge(std::uint64_t n = 1);
/// Record a cap-sensitivity note (deduplicated) in the active scope.
void note(const std::string& message);

// ---------------------------------------------------------------------------
// Simplicial sets
// ---------------------------------------------------------------------------

enum class Extension { Skeletal, Coskeletal };

const char* toString(Extension e);

class SimplicialSet;
using SSetPtr = std::shared_ptr<const SimplicialSet>;

/// Cell tables of one degree m.
struct Level {
  std::vector<std::string> names;
  /// faces[i][x] = d_i x in degree m-1, for i = 0..m (empty when m = 0).
  std::vector<std::vector<int>> faces;
  /// degens[i][x] = s_i x in degree m+1, for i = 0..m (empty at the top stored degree).
  std::vector<std::vector<int>> degens;

  int size() const { return static_cast<int>(names.size()); }
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

/// A degreewise-finite simplicial set stored through degree `cap`; degrees above
/// the cap are given by the extension policy (all degenerate, or the
/// cap-coskeleton).
class SimplicialSet : public std::enable_shared_from_this<SimplicialSet> {
 public:
  SimplicialSet(Extension ext, std::vector<Level> levels);

  static SSetPtr make(Extension ext, std::vector<Level> levels);

  int cap() const { return static_cast<int>(levels_.size()) - 1; }
  Extension extension() const { return ext_; }
  bool skeletal() const { return ext_ == Extension::Skeletal; }
  bool coskeletal() const { return ext_ == Extension::Coskeletal; }

  int size(int m) const { return levels_.at(m).size(); }
  const Level& level(int m) const { return levels_.at(m); }
  const std::string& name(int m, int x) const { return levels_[m].names[x]; }
  int face(int m, int i, int x) const { return levels_[m].faces[i][x]; }
  int degen(int m, int i, int x) const { return levels_[m].degens[i][x]; }
  std::optional<int> find(int m, const std::string& name) const;

  bool isDegenerate(int m, int x) const { return degenerate_[m][x] != 0; }
  /// Index j with x = s_j d_j x, or -1 for nondegenerate x.
  int degeneracyIndex(int m, int x) const { return degenerate_[m][x] - 1; }
  int nondegenerateCount(int m) const;
  std::vector<int> nondegenerate(int m) const;

  /// Cells of degree m (m >= 1) whose face tuple is exactly `faces`.
  std::span<const int> cellsWithFaces(int m, std::span<const int> faces) const;
  std::vector<int> faceTuple(int m, int x) const;

  /// Apply the simplicial operator theta^* for monotone theta: [p] -> [m].
  int applyOperator(std::span<const int> theta, int m, int x) const;
  /// Vertices of a cell, v_k = image of the k-th vertex.
  std::vector<int> vertices(int m, int x) const;

  /// First violated simplicial identity, if any.
  std::optional<std::string> checkIdentities() const;

  /// Structural equality of stored data on degrees <= d (names and tables).
  bool samePrefix(const SimplicialSet& other, int d) const;

  // Memoized boolean/integer properties (Kan, quasi-category, ...). Not part of
  // the value; purely a cache keyed by a descriptive string.
  std::optional<long> cachedProperty(const std::string& key) const;
  void cacheProperty(const std::string& key, long value) const;

 private:
  friend SSetPtr extendTo(const SSetPtr& x, int d);
  void computeDegeneracyFlags();

  Extension ext_;
  std::vector<Level> levels_;
  std::vector<std::vector<int>> degenerate_;

  mutable std::mutex cacheMutex_;
  mutable std::vector<std::unique_ptr<std::unordered_map<std::vector<int>, std::vector<int>, VecHash>>>
      faceIndex_;
  mutable std::vector<std::unique_ptr<std::unordered_map<std::string, int>>> nameIndex_;
  mutable std::map<int, SSetPtr> extensions_;
  mutable std::map<std::string, long> properties_;
};

/// The same simplicial set materialized through degree >= d (x itself if cap >= d).
SSetPtr extendTo(const SSetPtr& x, int d);

/// Number of cells in degree m, materializing if needed.
int cellCount(const SSetPtr& x, int m);

// ---------------------------------------------------------------------------
// Simplicial maps
// ---------------------------------------------------------------------------

using Components = std::vector<std::vector<int>>;

/// Degree through which maps src -> tgt are determined by their components;
/// nullopt when neither policy bounds it.
std::optional<int> determiningDegree(const SimplicialSet& src, const SimplicialSet& tgt);

class SimplicialMap {
 public:
  SimplicialMap() = default;
  /// components[m][x] for m = 0..min(src.cap, tgt.cap). Validates shape and
  /// that the stored degree reaches the determining degree.
  SimplicialMap(SSetPtr source, SSetPtr target, Components components);

  const SSetPtr& source() const { return source_; }
  const SSetPtr& target() const { return target_; }
  int degree() const { return static_cast<int>(components_.size()) - 1; }
  const Components& components() const { return components_; }
  int operator()(int m, int x) const { return components_[m][x]; }

  /// Components materialized through degree d (extending source and target).
  SimplicialMap extended(int d) const;

  /// First violation of face/degeneracy compatibility, if any.
  std::optional<std::string> checkSimplicial() const;
  bool injective() const;
  bool surjective() const;

 private:
  SSetPtr source_, target_;
  Components components_;
};

/// Extend components known through comps.size()-1 up to degree d, using
/// f(s_j y) = s_j f(y) and unique fillers in the target. Both objects must be
/// materialized through d.
Components extendComponents(const SimplicialSet& src, const SimplicialSet& tgt, Components comps, int d);

/// g o f; throws PreconditionError when f.target and g.source differ.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity(const SSetPtr& x);
/// The unique map to a terminal object.
SimplicialMap toTerminal(const SSetPtr& x, const SSetPtr& terminal);
SimplicialMap fromInitial(const SSetPtr& empty, const SSetPtr& x);
/// Same simplicial set: equal stored data through the larger cap (one degree
/// further when the policies differ).
bool sameObject(const SSetPtr& a, const SSetPtr& b);
/// Equality of maps with the same source and target.
bool sameMap(const SimplicialMap& f, const SimplicialMap& g);

/// Bring both objects to caps where maps between them are determined; converts
/// policies (via detection) when neither bounds the maps.
struct Aligned {
  SSetPtr source, target;
  int degree;
};
Aligned alignForMaps(const SSetPtr& src, const SSetPtr& tgt);

}  // namespace sset

namespace sset {

/// Whether X_m -> (cosk_{m-1} X)_m is a bijection (materializes X through m).
bool comparisonBijective(const SSetPtr& x, int m);

/// Number of compatible (m+1)-tuples of (m-1)-cells, i.e. |(cosk_{m-1} X)_m|.
std::uint64_t matchingCount(const SSetPtr& x, int m);

/// Least n for which the comparison is bijective in every degree n+1..window.
/// Exact for coskeletal objects; skeletal inputs are checked through a finite
/// window and a note is recorded.
std::optional<int> detectCoskeletalDegree(const SSetPtr& x);
/// Least n with no nondegenerate cells in degrees n+1..window.
std::optional<int> detectSkeletalDegree(const SSetPtr& x);

/// Same simplicial set re-expressed with the other extension policy; throws
/// CapError when detection fails.
SSetPtr asCoskeletal(const SSetPtr& x);
SSetPtr asSkeletal(const SSetPtr& x);

}  // namespace sset
