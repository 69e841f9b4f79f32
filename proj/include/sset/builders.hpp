#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sset/category.hpp"
#include "sset/core.hpp"

namespace sset {

using Word = std::vector<int>;

/// Generic builder: cells of degree m are the words in `cells[m]`; faces and
/// degeneracies act on words and must land in the listed sets.
SSetPtr fromWords(Extension ext, const std::vector<std::vector<Word>>& cells,
                  const std::function<Word(int m, int i, const Word&)>& face,
                  const std::function<Word(int m, int j, const Word&)>& degen,
                  const std::function<std::string(int m, const Word&)>& name);

SSetPtr emptySet();
SSetPtr point();
SSetPtr delta(int n);
SSetPtr boundary(int n);
SSetPtr horn(int n, int k);
SSetPtr spine(int t);
SSetPtr jNerve(int t);
/// Two 2-simplices glued along an edge with their long edges collapsed.
SSetPtr walkingH();
SSetPtr rKanTwo(int n);
SSetPtr nerve(const FiniteCategory& c);
/// Constant simplicial set on n points.
SSetPtr discreteSet(int n);

/// Copy of x with nondegenerate cells renamed; degenerate cells become s{j}(..).
SSetPtr renamed(const SSetPtr& x, const std::function<std::string(int m, int cell)>& nondegName);

/// Simplicial subset of Delta^n generated by the listed faces (vertex lists).
SSetPtr subcomplexOfDelta(int n, const std::vector<std::vector<int>>& generators);

enum class StandardKind { Delta, Boundary, Horn, Spine, JNerve, WalkingH, RKanTwo };
SSetPtr buildStandard(StandardKind kind, const std::vector<int>& params);
StandardKind parseStandardKind(const std::string& s);

/// Map induced by a functor on nerves.
class SimplicialMap;
SimplicialMap nerveMap(const Functor& f, const SSetPtr& source, const SSetPtr& target);

/// Inclusion of the vertex named `vertex` (a map Delta^0 -> X).
SimplicialMap vertexInclusion(const SSetPtr& x, int vertex);
/// The unique map from the empty simplicial set.
SimplicialMap emptyInclusion(const SSetPtr& x);
/// The map Delta^m -> X classifying the m-cell x.
SimplicialMap yonedaMap(const SSetPtr& x, int m, int cell);

/// Inclusion of a simplicial subset of Delta^n (face lists) into Delta^n.
SimplicialMap deltaSubInclusion(const SSetPtr& sub, int n);
/// Map Delta^p -> Delta^n induced by a monotone map [p] -> [n].
SimplicialMap deltaMap(const std::vector<int>& theta, int n);

}  // namespace sset
