#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sset {

/// A category with finitely many arrows, stored by composition table.
struct FiniteCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt;
  std::vector<int> ident;  // per object
  /// comp[g][f] = g o f when tgt(f) == src(g), else -1.
  std::vector<std::vector<int>> comp;

  int objectCount() const { return static_cast<int>(objects.size()); }
  int arrowCount() const { return static_cast<int>(arrows.size()); }
  int compose(int g, int f) const { return comp[g][f]; }

  /// First violated law (closure, unit, associativity), if any.
  std::optional<std::string> validate() const;
  bool isGroupoid() const;
  std::optional<int> inverse(int f) const;
  bool isIsomorphism(int f) const { return inverse(f).has_value(); }
  /// No nonidentity isomorphisms.
  bool isGaunt() const;
};

struct Functor {
  const FiniteCategory* source = nullptr;
  const FiniteCategory* target = nullptr;
  std::vector<int> onObjects;
  std::vector<int> onArrows;

  std::optional<std::string> validate() const;
  bool fullyFaithful() const;
  bool essentiallySurjective() const;
  bool isEquivalence() const { return fullyFaithful() && essentiallySurjective(); }
};

/// All functors between two finite categories (brute force, budget-charged).
std::vector<Functor> allFunctors(const FiniteCategory& c, const FiniteCategory& d);

namespace cat {
/// One-object group Z/n.
FiniteCategory cyclicGroup(int n);
/// One-object group given by a multiplication table (identity = element 0).
FiniteCategory groupFromTable(const std::string& name, const std::vector<std::vector<int>>& mult);
FiniteCategory kleinFour();
/// Poset on n elements; leq[i][j] iff i <= j (must be a partial order).
FiniteCategory poset(const std::string& name, const std::vector<std::vector<bool>>& leq);
/// The ordinal [n] = {0 < 1 < ... < n}.
FiniteCategory linearOrder(int n);
FiniteCategory discrete(int n);
/// Codiscrete groupoid on n objects (exactly one arrow between any two).
FiniteCategory codiscreteGroupoid(int n);
/// Product category; objects and arrows are pairs in row-major order.
FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b);
/// One object with a single nonidentity idempotent e, e o e = e.
FiniteCategory idempotentMonoid();
/// Every poset on at most n elements, up to relabeling not removed.
std::vector<FiniteCategory> allPosets(int n);
/// The shipped corpus of small categories.
std::vector<FiniteCategory> zoo();
}  // namespace cat

}  // namespace sset
