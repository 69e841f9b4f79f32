#include "sset/homotopy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sset/builders.hpp"
#include "sset/ops.hpp"

namespace sset {

Flavor parseFlavor(const std::string& s) {
  if (s == "kq") return Flavor::KQ;
  if (s == "joyal") return Flavor::Joyal;
  throw PreconditionError("unknown flavor '" + s + "' (expected kq or joyal)");
}

std::string toString(Flavor f) { return f == Flavor::KQ ? "kq" : "joyal"; }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int totallyDegenerate(const SimplicialSet& x, int m, int vertex) {
  std::vector<int> theta(m + 1, 0);
  return x.applyOperator(theta, 0, vertex);
}

std::string seqName(int n, int skip) {
  std::string s;
  for (int k = 0; k <= n; ++k)
    if (k != skip) s += std::to_string(k);
  return s;
}

}  // namespace

Pi0 pi0(const SSetPtr& x) {
  auto X = extendTo(x, 1);
  UnionFind uf(X->size(0));
  for (int e = 0; e < X->size(1); ++e) uf.unite(X->face(1, 0, e), X->face(1, 1, e));
  Pi0 r;
  r.componentOf.assign(X->size(0), -1);
  std::map<int, int> label;
  for (int v = 0; v < X->size(0); ++v) {
    auto [it, fresh] = label.emplace(uf.find(v), r.count);
    if (fresh) ++r.count;
    r.componentOf[v] = it->second;
  }
  return r;
}

bool homotopic(const SimplicialMap& f, const SimplicialMap& g, Flavor flavor, const std::optional<SimplicialMap>& rel) {
  if (!sameObject(f.source(), g.source()) || !sameObject(f.target(), g.target()))
    throw PreconditionError("homotopic: maps have different sources or targets");
  const SSetPtr& target = f.target();
  if (flavor == Flavor::KQ && !isKanComplex(target)) throw PreconditionError("homotopic (kq): target is not a Kan complex");
  if (flavor == Flavor::Joyal && !isQuasiCategory(target))
    throw PreconditionError("homotopic (joyal): target is not a quasi-category");
  if (rel && !sameObject(rel->target(), f.source())) throw PreconditionError("homotopic: rel is not a subobject of the source");

  auto I = flavor == Flavor::KQ ? delta(1) : walkingH();
  const int e0 = 0;
  const int e1 = flavor == Flavor::KQ ? 1 : *I->find(0, "R");
  auto P = product(f.source(), I);
  auto al = alignForMaps(P.object, target);
  const int D = al.degree;
  auto first = P.first.extended(D), second = P.second.extended(D);
  auto fe = f.extended(D), ge = g.extended(D);
  auto Ie = extendTo(I, D);
  std::vector<std::vector<char>> inRel(D + 1);
  for (int m = 0; m <= D; ++m) inRel[m].assign(fe.source()->size(m), 0);
  if (rel) {
    auto re = rel->extended(D);
    for (int m = 0; m <= D; ++m)
      for (int a = 0; a < re.source()->size(m); ++a) inRel[m][re(m, a)] = 1;
  }
  Components fixed(D + 1);
  for (int m = 0; m <= D; ++m) {
    const int c0 = totallyDegenerate(*Ie, m, e0), c1 = totallyDegenerate(*Ie, m, e1);
    fixed[m].assign(extendTo(al.source, D)->size(m), -1);
    for (int z = 0; z < static_cast<int>(fixed[m].size()); ++z) {
      const int x = first(m, z), t = second(m, z);
      int v = -1;
      if (t == c0) v = fe(m, x);
      if (t == c1) {
        if (v >= 0 && v != ge(m, x)) return false;
        v = ge(m, x);
      }
      if (inRel[m][x]) {
        if (v >= 0 && v != fe(m, x)) return false;
        v = fe(m, x);
      }
      fixed[m][z] = v;
    }
  }
  bool found = false;
  MapSearch spec{al.source, al.target, D, std::move(fixed), nullptr, nullptr, false};
  enumerateMaps(spec, [&](const Components&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<int> HomotopyClassTable::classOfCell(int cell) const {
  auto it = std::lower_bound(representatives.begin(), representatives.end(), cell);
  if (it == representatives.end() || *it != cell) return std::nullopt;
  return classOf[it - representatives.begin()];
}

HomotopyClassTable piN(const PointedObject& p, int n) {
  if (n < 1) throw PreconditionError("piN needs n >= 1");
  if (p.base < 0 || p.base >= p.space->size(0)) throw PreconditionError("base point is not a vertex");
  if (!isKanComplex(p.space)) throw PreconditionError("homotopy groups need a Kan complex");
  auto X = extendTo(p.space, n + 1);
  std::vector<int> b(n + 2);
  for (int k = 0; k <= n + 1; ++k) b[k] = totallyDegenerate(*X, k, p.base);

  HomotopyClassTable t;
  t.degree = n;
  for (int x = 0; x < X->size(n); ++x) {
    bool sphere = true;
    for (int i = 0; i <= n && sphere; ++i) sphere = X->face(n, i, x) == b[n - 1];
    if (sphere) t.representatives.push_back(x);
  }
  const int r = static_cast<int>(t.representatives.size());
  std::vector<int> faces(n + 2, b[n]);
  UnionFind uf(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      charge();
      faces[n] = t.representatives[i];
      faces[n + 1] = t.representatives[j];
      if (!X->cellsWithFaces(n + 1, faces).empty()) uf.unite(i, j);
    }
  t.classOf.assign(r, -1);
  std::map<int, int> label;
  for (int i = 0; i < r; ++i) {
    auto [it, fresh] = label.emplace(uf.find(i), static_cast<int>(t.classRep.size()));
    if (fresh) t.classRep.push_back(t.representatives[i]);
    t.classOf[i] = it->second;
  }
  t.identity = *t.classOfCell(b[n]);

  // x * y = d_n z for z with d_{n-1} z = x, d_{n+1} z = y, other faces at the base
  const int k = t.order();
  t.multiplication.assign(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      std::set<int> products;
      std::vector<int> fc(n + 2, b[n]);
      fc[n - 1] = t.classRep[a];
      fc[n + 1] = t.classRep[c];
      for (int w = 0; w < r; ++w) {
        charge();
        fc[n] = t.representatives[w];
        if (!X->cellsWithFaces(n + 1, fc).empty()) products.insert(t.classOf[w]);
      }
      if (products.size() != 1)
        throw InvariantError("homotopy group product is not well defined (" + std::to_string(products.size()) +
                             " candidate classes)");
      t.multiplication[a][c] = *products.begin();
    }
  return t;
}

bool isWeakEquivalenceKan(const SimplicialMap& f) {
  if (!isKanComplex(f.source()) || !isKanComplex(f.target()))
    throw PreconditionError("weak equivalence test needs Kan complexes");
  auto fe = f.extended(1);
  auto ps = pi0(f.source()), pt = pi0(f.target());
  if (ps.count != pt.count) return false;
  std::vector<int> onComponents(ps.count, -1);
  for (int v = 0; v < fe.source()->size(0); ++v) {
    int& slot = onComponents[ps.componentOf[v]];
    const int image = pt.componentOf[fe(0, v)];
    if (slot >= 0 && slot != image) throw InvariantError("map is not constant on components");
    slot = image;
  }
  if (std::set<int>(onComponents.begin(), onComponents.end()).size() != onComponents.size()) return false;

  auto cs = detectCoskeletalDegree(f.source()), ct = detectCoskeletalDegree(f.target());
  if (!cs || !ct) throw PreconditionError("weak equivalence test needs lean Kan complexes");
  const int top = std::max({*cs, *ct, 1});
  auto fx = f.extended(top);
  std::map<std::pair<int, int>, HomotopyClassTable> targetTables;
  for (int v = 0; v < fx.source()->size(0); ++v)
    for (int n = 1; n <= top; ++n) {
      auto src = piN({f.source(), v}, n);
      const int w = fx(0, v);
      auto it = targetTables.find({w, n});
      if (it == targetTables.end()) it = targetTables.emplace(std::make_pair(w, n), piN({f.target(), w}, n)).first;
      const auto& tgt = it->second;
      if (src.order() != tgt.order()) return false;
      std::vector<char> hit(tgt.order(), 0);
      for (int c = 0; c < src.order(); ++c) {
        auto image = tgt.classOfCell(fx(n, src.classRep[c]));
        if (!image) throw InvariantError("image of a sphere is not a sphere");
        if (hit[*image]) return false;
        hit[*image] = 1;
      }
    }
  return true;
}

QCatMapSpace qcatMapSpace(const SSetPtr& x, int from, int to, int minCap) {
  if (!isQuasiCategory(x)) throw PreconditionError("mapping spaces need a quasi-category");
  if (from < 0 || to < 0 || from >= x->size(0) || to >= x->size(0)) throw PreconditionError("not a vertex");
  auto paths = mappingSpace(delta(1), x, minCap);
  auto ends = mappingSpace(boundary(1), x, paths.cap);
  auto restrict = precompose(deltaSubInclusion(boundary(1), 1), paths, ends);
  auto b = boundary(1);
  Components comps(1, std::vector<int>(2));
  comps[0][*b->find(0, "0")] = from;
  comps[0][*b->find(0, "1")] = to;
  auto al = alignForMaps(b, x);
  comps[0].resize(b->size(0));
  SimplicialMap pair(al.source, al.target, extendComponents(*extendTo(al.source, al.degree), *extendTo(al.target, al.degree),
                                                            comps, al.degree));
  const int k = ends.vertexOf(pair);
  auto fib = fiber(restrict, k);
  return {fib.object, fib, paths};
}

bool isEquivalenceEdge(const SSetPtr& x, int edge) {
  auto X = extendTo(x, 1);
  if (edge < 0 || edge >= X->size(1)) throw PreconditionError("not an edge");
  auto J = jNerve(1);
  int e = -1;
  for (int c = 0; c < J->size(1) && e < 0; ++c)
    if (J->face(1, 1, c) == 0 && J->face(1, 0, c) == 1) e = c;
  auto star = point();
  LiftingSquare sq{yonedaMap(J, 1, e), toTerminal(x, star), yonedaMap(x, 1, edge), toTerminal(J, star)};
  return hasLift(sq);
}

DKReport isDKEquivalenceQCat(const SimplicialMap& f) {
  const SSetPtr &X = f.source(), &Y = f.target();
  if (!isQuasiCategory(X) || !isQuasiCategory(Y)) throw PreconditionError("DK equivalence test needs quasi-categories");
  DKReport r;
  const int c = std::max(asCoskeletal(X)->cap(), asCoskeletal(Y)->cap());
  auto fe = f.extended(1);
  auto Y1 = extendTo(Y, 1);

  r.fullyFaithful = true;
  for (int a = 0; a < fe.source()->size(0) && r.fullyFaithful; ++a)
    for (int b = 0; b < fe.source()->size(0) && r.fullyFaithful; ++b) {
      auto mx = qcatMapSpace(X, a, b, c);
      auto my = qcatMapSpace(Y, fe(0, a), fe(0, b), c);
      auto post = postcompose(f, mx.paths, my.paths);
      auto induced =
          pullbackMap(my.fiber, compose(post, mx.fiber.first), toTerminal(mx.fiber.object, my.fiber.second.target()));
      if (!isWeakEquivalenceKan(induced)) {
        r.fullyFaithful = false;
        r.detail.push_back("map(" + X->name(0, a) + "," + X->name(0, b) + ") -> map(" + Y->name(0, fe(0, a)) + "," +
                           Y->name(0, fe(0, b)) + ") is not a weak equivalence");
      }
    }

  r.essentiallySurjective = true;
  std::set<int> hit;
  for (int v = 0; v < fe.source()->size(0); ++v) hit.insert(fe(0, v));
  for (int w = 0; w < Y1->size(0); ++w) {
    bool reached = hit.count(w) > 0;
    for (int e = 0; e < Y1->size(1) && !reached; ++e)
      if (Y1->face(1, 0, e) == w && hit.count(Y1->face(1, 1, e)) && isEquivalenceEdge(Y, e)) reached = true;
    if (!reached) {
      r.essentiallySurjective = false;
      r.detail.push_back("vertex " + Y1->name(0, w) + " is not equivalent to an image vertex");
      break;
    }
  }
  r.verdict = r.fullyFaithful && r.essentiallySurjective;
  return r;
}

int countFillers(const SSetPtr& x, const SimplicialMap& sphere) {
  const int n = sphere.source()->cap() + 1;
  if (n < 1) throw PreconditionError("countFillers needs a sphere boundary(n) -> X with n >= 1");
  auto s = sphere.extended(n - 1);
  std::vector<int> faces(n + 1);
  for (int i = 0; i <= n; ++i) {
    auto cell = s.source()->find(n - 1, seqName(n, i));
    if (!cell) throw PreconditionError("countFillers: source is not boundary(" + std::to_string(n) + ")");
    faces[i] = s(n - 1, *cell);
  }
  auto X = extendTo(x, n);
  if (n == 1) {
    int count = 0;
    for (int e = 0; e < X->size(1); ++e) count += X->face(1, 0, e) == faces[0] && X->face(1, 1, e) == faces[1];
    return count;
  }
  return static_cast<int>(X->cellsWithFaces(n, faces).size());
}

bool isMinimal(const SSetPtr& x) {
  if (!isQuasiCategory(x)) throw PreconditionError("minimality is tested on quasi-categories");
  const int N = x->cap();
  auto X = extendTo(x, N);
  for (int m = 0; m <= N; ++m) {
    std::map<std::vector<int>, std::vector<int>> byBoundary;
    for (int c = 0; c < X->size(m); ++c) {
      std::vector<int> key;
      for (int i = 0; m > 0 && i <= m; ++i) key.push_back(X->face(m, i, c));
      byBoundary[key].push_back(c);
    }
    std::optional<SimplicialMap> rel;
    if (m > 0) rel = deltaSubInclusion(boundary(m), m);
    for (auto& [key, cells] : byBoundary)
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
          if (homotopic(yonedaMap(X, m, cells[i]), yonedaMap(X, m, cells[j]), Flavor::Joyal, rel)) return false;
  }
  return true;
}

bool isLeanStratifiedKan(const SimplicialMap& f) {
  if (!classify(f.source()).isLean) return false;
  if (!classifyMap(f, MapKind::InnerFibration).holds) return false;
  for (int p = 0; p < f.target()->size(0); ++p)
    if (!isKanComplex(fiber(f, p).object)) return false;
  return true;
}

}  // namespace sset
