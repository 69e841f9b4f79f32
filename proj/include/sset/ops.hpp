#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sset/core.hpp"

namespace sset {

struct Coproduct {
  SSetPtr object;
  std::vector<SimplicialMap> injections;
};

struct Product {
  SSetPtr object;
  SimplicialMap first, second;
};

struct Pullback {
  SSetPtr object;
  SimplicialMap first, second;
};

struct Pushout {
  SSetPtr object;
  SimplicialMap left, right;  // B -> P, C -> P
};

struct Quotient {
  SSetPtr object;
  Components projection;  // through the cap of the input
};

struct Image {
  SSetPtr object;
  SimplicialMap inclusion;      // image -> target
  SimplicialMap corestriction;  // source -> image
};

/// Re-express all inputs under one extension policy (coskeletal preferred when
/// any input is coskeletal); throws CapError when impossible.
std::vector<SSetPtr> unifyPolicies(const std::vector<SSetPtr>& xs, bool preferCoskeletal);

Coproduct coproduct(const std::vector<SSetPtr>& xs);
Product product(const SSetPtr& x, const SSetPtr& y);
/// The d-skeleton of X x Y, computed without materializing higher degrees.
Product productSkeleton(const SSetPtr& x, const SSetPtr& y, int d);
Pullback pullback(const SimplicialMap& f, const SimplicialMap& g);
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g);
/// Pushout along a monomorphism, computed degreewise (P_m = C_m u B_m - A_m).
/// Finite inputs give a skeletal result; otherwise the result is coskeletal of
/// degree one above the inputs, checked one degree further (CapError if not).
Pushout pushoutAlongMono(const SimplicialMap& mono, const SimplicialMap& g);
/// X / ~ for the simplicial equivalence relation generated by (degree, a, b);
/// X must be skeletal. Representatives are least indices.
Quotient quotientByPairs(const SSetPtr& x, const std::vector<std::tuple<int, int, int>>& pairs);

SSetPtr skeleton(const SSetPtr& x, int n);
SSetPtr coskeleton(const SSetPtr& x, int n);
/// Degrees <= n as an n-truncated object (stored with skeletal policy).
SSetPtr truncate(const SSetPtr& x, int n);
/// Unit X -> cosk_n X.
SimplicialMap coskeletonUnit(const SSetPtr& x, int n);
/// Counit sk_n X -> X.
SimplicialMap skeletonInclusion(const SSetPtr& x, int n);

struct Classification {
  bool isFiniteComplex = false;
  bool isLean = false;
  std::optional<int> coskeletalDegree;
  std::optional<int> skeletalDegree;
  std::vector<int> nondegenerateCounts;
  std::vector<int> cellCounts;
  std::vector<std::string> notes;
};
Classification classify(const SSetPtr& x);

SSetPtr toSkeletal(const SSetPtr& x);
SSetPtr toCoskeletal(const SSetPtr& x);

/// Image of f; the source must be skeletal (or convertible), or f injective.
Image image(const SimplicialMap& f);
/// Simplicial subset spanned by the marked cells (must be closed under faces
/// and degeneracies through the cap); keeps the policy of x when x is skeletal.
Image subobject(const SSetPtr& x, const std::vector<std::vector<char>>& marked);
/// Fiber of f over the vertex y of its target.
Pullback fiber(const SimplicialMap& f, int y);

/// Constant maps and the diagonal.
SimplicialMap constantMap(const SSetPtr& source, const SSetPtr& target, int vertex);
SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g, const Product& p);
SimplicialMap productMap(const SimplicialMap& f, const SimplicialMap& g, const Product& src, const Product& tgt);
/// Copairing out of a coproduct.
SimplicialMap copairing(const Coproduct& c, const std::vector<SimplicialMap>& legs, const SSetPtr& target);
/// Induced map out of a pushout.
SimplicialMap pushoutMap(const Pushout& p, const SimplicialMap& onB, const SimplicialMap& onC);
/// Map from components known through some degree, extended to the
/// determining degree of the pair.
SimplicialMap finishMap(const SSetPtr& src, const SSetPtr& tgt, Components comps);

/// Induced map into a pullback.
SimplicialMap pullbackMap(const Pullback& p, const SimplicialMap& toB, const SimplicialMap& toC);

}  // namespace sset
