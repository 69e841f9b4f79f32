#include "sset/ops.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sset/builders.hpp"

namespace sset {

namespace {

std::uint64_t pairKey(int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

}  // namespace

SimplicialMap finishMap(const SSetPtr& src, const SSetPtr& tgt, Components comps) {
  auto al = alignForMaps(src, tgt);
  int d = std::max(al.degree, static_cast<int>(comps.size()) - 1);
  auto S = extendTo(al.source, d);
  auto T = extendTo(al.target, d);
  if (static_cast<int>(comps.size()) - 1 > d) comps.resize(d + 1);
  return SimplicialMap(S, T, extendComponents(*S, *T, std::move(comps), d));
}

std::vector<SSetPtr> unifyPolicies(const std::vector<SSetPtr>& xs, bool preferCoskeletal) {
  bool anyS = false, anyC = false;
  for (auto& x : xs) (x->skeletal() ? anyS : anyC) = true;
  if (!anyS || !anyC) return xs;
  auto convertAll = [&](bool toCosk) {
    std::vector<SSetPtr> out;
    for (auto& x : xs) out.push_back(toCosk ? asCoskeletal(x) : asSkeletal(x));
    return out;
  };
  try {
    return convertAll(preferCoskeletal);
  } catch (const CapError&) {
  }
  try {
    return convertAll(!preferCoskeletal);
  } catch (const CapError&) {
  }
  throw CapError("inputs mix skeletal and coskeletal policies that cannot be reconciled");
}

Coproduct coproduct(const std::vector<SSetPtr>& xs0) {
  if (xs0.empty()) return {emptySet(), {}};
  bool anyC = false;
  for (auto& x : xs0) anyC = anyC || x->coskeletal();
  auto xs = unifyPolicies(xs0, anyC);
  const Extension ext = xs[0]->extension();
  int c = 0;
  for (auto& x : xs) c = std::max(c, x->cap());
  if (ext == Extension::Coskeletal) c = std::max(c, 1);
  for (auto& x : xs) x = extendTo(x, c);
  std::vector<Level> levels(c + 1);
  std::vector<std::vector<int>> offset(xs.size(), std::vector<int>(c + 1));
  for (int m = 0; m <= c; ++m) {
    int total = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      offset[k][m] = total;
      total += xs[k]->size(m);
    }
    Level& L = levels[m];
    L.names.reserve(total);
    if (m > 0) L.faces.assign(m + 1, {});
    if (m < c) L.degens.assign(m + 1, {});
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const auto& X = *xs[k];
      for (int x = 0; x < X.size(m); ++x) L.names.push_back(std::to_string(k) + ":" + X.name(m, x));
      for (int i = 0; m > 0 && i <= m; ++i)
        for (int x = 0; x < X.size(m); ++x) L.faces[i].push_back(offset[k][m - 1] + X.face(m, i, x));
    }
  }
  for (int m = 0; m < c; ++m)
    for (std::size_t k = 0; k < xs.size(); ++k)
      for (int j = 0; j <= m; ++j)
        for (int x = 0; x < xs[k]->size(m); ++x) {
          int tot = 0;
          for (std::size_t l = 0; l < k; ++l) tot += xs[l]->size(m + 1);
          levels[m].degens[j].push_back(tot + xs[k]->degen(m, j, x));
        }
  auto obj = SimplicialSet::make(ext, std::move(levels));
  Coproduct out{obj, {}};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Components comps(c + 1);
    for (int m = 0; m <= c; ++m) {
      comps[m].resize(xs[k]->size(m));
      for (int x = 0; x < xs[k]->size(m); ++x) comps[m][x] = offset[k][m] + x;
    }
    out.injections.emplace_back(xs[k], obj, std::move(comps));
  }
  return out;
}

namespace {

Product productThrough(const SSetPtr& X, const SSetPtr& Y, int c, Extension ext) {
  std::vector<Level> levels(c + 1);
  for (int m = 0; m <= c; ++m) {
    const int nx = X->size(m), ny = Y->size(m);
    Level& L = levels[m];
    L.names.reserve(static_cast<std::size_t>(nx) * ny);
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) L.names.push_back("(" + X->name(m, x) + "," + Y->name(m, y) + ")");
    charge(static_cast<std::uint64_t>(nx) * ny);
    if (m > 0) {
      const int py = Y->size(m - 1);
      L.faces.assign(m + 1, std::vector<int>(static_cast<std::size_t>(nx) * ny));
      for (int i = 0; i <= m; ++i)
        for (int x = 0; x < nx; ++x)
          for (int y = 0; y < ny; ++y) L.faces[i][x * ny + y] = X->face(m, i, x) * py + Y->face(m, i, y);
    }
    if (m < c) {
      const int qy = Y->size(m + 1);
      L.degens.assign(m + 1, std::vector<int>(static_cast<std::size_t>(nx) * ny));
      for (int j = 0; j <= m; ++j)
        for (int x = 0; x < nx; ++x)
          for (int y = 0; y < ny; ++y) L.degens[j][x * ny + y] = X->degen(m, j, x) * qy + Y->degen(m, j, y);
    }
  }
  auto obj = SimplicialSet::make(ext, std::move(levels));
  Components p1(c + 1), p2(c + 1);
  for (int m = 0; m <= c; ++m) {
    const int nx = X->size(m), ny = Y->size(m);
    p1[m].resize(static_cast<std::size_t>(nx) * ny);
    p2[m].resize(static_cast<std::size_t>(nx) * ny);
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) {
        p1[m][x * ny + y] = x;
        p2[m][x * ny + y] = y;
      }
  }
  return {obj, SimplicialMap(obj, X, std::move(p1)), SimplicialMap(obj, Y, std::move(p2))};
}

}  // namespace

Product product(const SSetPtr& x, const SSetPtr& y) {
  auto u = unifyPolicies({x, y}, x->coskeletal() || y->coskeletal());
  const Extension ext = u[0]->extension();
  const int c = ext == Extension::Skeletal ? u[0]->cap() + u[1]->cap() : std::max(u[0]->cap(), u[1]->cap());
  return productThrough(extendTo(u[0], c), extendTo(u[1], c), c, ext);
}

Product productSkeleton(const SSetPtr& x, const SSetPtr& y, int d) {
  auto X = extendTo(x, d), Y = extendTo(y, d);
  auto p = productThrough(X, Y, d, Extension::Skeletal);
  return p;
}

Pullback pullback(const SimplicialMap& f0, const SimplicialMap& g0) {
  if (!sameObject(f0.target(), g0.target())) throw PreconditionError("pullback: maps have different targets");
  SSetPtr B, C;
  Extension ext;
  int c;
  try {
    auto u = unifyPolicies({f0.source(), g0.source(), f0.target()}, true);
    if (!u[0]->coskeletal()) throw CapError("no coskeletal form");
    B = u[0];
    C = u[1];
    ext = Extension::Coskeletal;
    c = std::max({u[0]->cap(), u[1]->cap(), u[2]->cap()});
  } catch (const CapError&) {
    B = asSkeletal(f0.source());
    C = asSkeletal(g0.source());
    ext = Extension::Skeletal;
    c = B->cap() + C->cap();
  }
  auto f = f0.extended(c);
  auto g = g0.extended(c);
  B = extendTo(B, c);
  C = extendTo(C, c);
  std::vector<std::vector<std::pair<int, int>>> cells(c + 1);
  std::vector<std::unordered_map<std::uint64_t, int>> index(c + 1);
  for (int m = 0; m <= c; ++m) {
    std::unordered_map<int, std::vector<int>> byImage;
    for (int z = 0; z < C->size(m); ++z) byImage[g(m, z)].push_back(z);
    for (int b = 0; b < B->size(m); ++b) {
      auto it = byImage.find(f(m, b));
      if (it == byImage.end()) continue;
      for (int z : it->second) {
        charge();
        index[m].emplace(pairKey(b, z), static_cast<int>(cells[m].size()));
        cells[m].push_back({b, z});
      }
    }
  }
  std::vector<Level> levels(c + 1);
  for (int m = 0; m <= c; ++m) {
    Level& L = levels[m];
    const int n = static_cast<int>(cells[m].size());
    for (auto [b, z] : cells[m]) L.names.push_back("(" + B->name(m, b) + "," + C->name(m, z) + ")");
    if (m > 0) {
      L.faces.assign(m + 1, std::vector<int>(n));
      for (int i = 0; i <= m; ++i)
        for (int k = 0; k < n; ++k)
          L.faces[i][k] = index[m - 1].at(pairKey(B->face(m, i, cells[m][k].first), C->face(m, i, cells[m][k].second)));
    }
    if (m < c) {
      L.degens.assign(m + 1, std::vector<int>(n));
      for (int j = 0; j <= m; ++j)
        for (int k = 0; k < n; ++k)
          L.degens[j][k] = index[m + 1].at(pairKey(B->degen(m, j, cells[m][k].first), C->degen(m, j, cells[m][k].second)));
    }
  }
  auto obj = SimplicialSet::make(ext, std::move(levels));
  Components p1(c + 1), p2(c + 1);
  for (int m = 0; m <= c; ++m)
    for (auto [b, z] : cells[m]) {
      p1[m].push_back(b);
      p2[m].push_back(z);
    }
  return {obj, finishMap(obj, B, std::move(p1)), finishMap(obj, C, std::move(p2))};
}

Quotient quotientByPairs(const SSetPtr& X, const std::vector<std::tuple<int, int, int>>& pairs) {
  if (!X->skeletal()) throw PreconditionError("quotients are formed on skeletal objects");
  const int c = X->cap();
  std::vector<std::vector<int>> parent(c + 1);
  for (int m = 0; m <= c; ++m) {
    parent[m].resize(X->size(m));
    std::iota(parent[m].begin(), parent[m].end(), 0);
  }
  auto find = [&](int m, int a) {
    while (parent[m][a] != a) {
      parent[m][a] = parent[m][parent[m][a]];
      a = parent[m][a];
    }
    return a;
  };
  std::vector<std::tuple<int, int, int>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [m, a, b] = work.back();
    work.pop_back();
    charge();
    int ra = find(m, a), rb = find(m, b);
    if (ra == rb) continue;
    if (ra < rb)
      parent[m][rb] = ra;
    else
      parent[m][ra] = rb;
    for (int i = 0; m > 0 && i <= m; ++i) work.emplace_back(m - 1, X->face(m, i, a), X->face(m, i, b));
    for (int j = 0; m < c && j <= m; ++j) work.emplace_back(m + 1, X->degen(m, j, a), X->degen(m, j, b));
  }
  Components proj(c + 1);
  std::vector<std::vector<int>> reps(c + 1);
  for (int m = 0; m <= c; ++m) {
    proj[m].resize(X->size(m));
    std::vector<int> newIndex(X->size(m), -1);
    for (int x = 0; x < X->size(m); ++x) {
      int r = find(m, x);
      if (r == x) {
        newIndex[x] = static_cast<int>(reps[m].size());
        reps[m].push_back(x);
      }
      proj[m][x] = newIndex[r];
    }
  }
  std::vector<Level> levels(c + 1);
  for (int m = 0; m <= c; ++m) {
    Level& L = levels[m];
    const int n = static_cast<int>(reps[m].size());
    for (int r : reps[m]) L.names.push_back(X->name(m, r));
    if (m > 0) {
      L.faces.assign(m + 1, std::vector<int>(n));
      for (int i = 0; i <= m; ++i)
        for (int k = 0; k < n; ++k) L.faces[i][k] = proj[m - 1][X->face(m, i, reps[m][k])];
    }
    if (m < c) {
      L.degens.assign(m + 1, std::vector<int>(n));
      for (int j = 0; j <= m; ++j)
        for (int k = 0; k < n; ++k) L.degens[j][k] = proj[m + 1][X->degen(m, j, reps[m][k])];
    }
  }
  return {SimplicialSet::make(Extension::Skeletal, std::move(levels)), std::move(proj)};
}

Pushout pushout(const SimplicialMap& f0, const SimplicialMap& g0) {
  if (!sameObject(f0.source(), g0.source())) throw PreconditionError("pushout: maps have different sources");
  SSetPtr A, B, C;
  try {
    A = asSkeletal(f0.source());
    B = asSkeletal(f0.target());
    C = asSkeletal(g0.target());
  } catch (const CapError&) {
    throw CapError("pushouts are computed for finite (skeletal) inputs");
  }
  const int c = std::max({A->cap(), B->cap(), C->cap()});
  auto f = f0.extended(c);
  auto g = g0.extended(c);
  auto co = coproduct({extendTo(B, c), extendTo(C, c)});
  std::vector<std::tuple<int, int, int>> rel;
  for (int m = 0; m <= c; ++m)
    for (int a = 0; a < f.source()->size(m); ++a)
      if (!f.source()->isDegenerate(m, a)) rel.emplace_back(m, co.injections[0](m, f(m, a)), co.injections[1](m, g(m, a)));
  auto q = quotientByPairs(co.object, rel);
  auto P = q.object;
  Components l(c + 1), r(c + 1);
  for (int m = 0; m <= c; ++m) {
    for (int b = 0; b < co.injections[0].source()->size(m); ++b) l[m].push_back(q.projection[m][co.injections[0](m, b)]);
    for (int z = 0; z < co.injections[1].source()->size(m); ++z) r[m].push_back(q.projection[m][co.injections[1](m, z)]);
  }
  return {P, SimplicialMap(co.injections[0].source(), P, std::move(l)),
          SimplicialMap(co.injections[1].source(), P, std::move(r))};
}

Pushout pushoutAlongMono(const SimplicialMap& i0, const SimplicialMap& g0) {
  if (!sameObject(i0.source(), g0.source())) throw PreconditionError("pushout: maps have different sources");
  if (!i0.injective()) throw PreconditionError("pushoutAlongMono: the first map is not injective");
  try {
    asSkeletal(i0.source());
    asSkeletal(i0.target());
    asSkeletal(g0.target());
    return pushout(i0, g0);
  } catch (const CapError&) {
  }
  int c = 0;
  for (auto& x : {i0.source(), i0.target(), g0.target()}) {
    auto cx = asCoskeletal(x);
    c = std::max(c, detectCoskeletalDegree(cx).value_or(cx->cap()));
  }
  const int D = c + 1, top = D + 1;
  auto i = i0.extended(top), g = g0.extended(top);
  auto B = i.target(), C = g.target();
  // cell index of P: C cells first, then B cells outside the image
  std::vector<std::vector<int>> bIndex(top + 1);
  std::vector<std::vector<int>> fromA(top + 1);
  std::vector<Level> levels(top + 1);
  for (int m = 0; m <= top; ++m) {
    fromA[m].assign(B->size(m), -1);
    for (int a = 0; a < i.source()->size(m); ++a) fromA[m][i(m, a)] = a;
    for (int z = 0; z < C->size(m); ++z) levels[m].names.push_back(C->name(m, z));
    bIndex[m].assign(B->size(m), -1);
    for (int b = 0; b < B->size(m); ++b)
      if (fromA[m][b] < 0) {
        bIndex[m][b] = static_cast<int>(levels[m].names.size());
        levels[m].names.push_back(B->name(m, b) + "'");
      }
  }
  auto legB = [&](int m, int b) { return fromA[m][b] >= 0 ? g(m, fromA[m][b]) : bIndex[m][b]; };
  for (int m = 0; m <= top; ++m) {
    Level& L = levels[m];
    const int n = L.size();
    if (m > 0) {
      L.faces.assign(m + 1, std::vector<int>(n));
      for (int k = 0; k <= m; ++k) {
        for (int z = 0; z < C->size(m); ++z) L.faces[k][z] = C->face(m, k, z);
        for (int b = 0; b < B->size(m); ++b)
          if (bIndex[m][b] >= 0) L.faces[k][bIndex[m][b]] = legB(m - 1, B->face(m, k, b));
      }
    }
    if (m < top) {
      L.degens.assign(m + 1, std::vector<int>(n));
      for (int k = 0; k <= m; ++k) {
        for (int z = 0; z < C->size(m); ++z) L.degens[k][z] = C->degen(m, k, z);
        for (int b = 0; b < B->size(m); ++b)
          if (bIndex[m][b] >= 0) L.degens[k][bIndex[m][b]] = legB(m + 1, B->degen(m, k, b));
      }
    }
  }
  auto full = SimplicialSet::make(Extension::Skeletal, levels);
  if (!comparisonBijective(full, top))
    throw CapError("pushout is not " + std::to_string(D) + "-coskeletal", top);
  levels.pop_back();
  levels.back().degens.clear();
  auto P = SimplicialSet::make(Extension::Coskeletal, std::move(levels));
  Components l(D + 1), r(D + 1);
  for (int m = 0; m <= D; ++m) {
    for (int b = 0; b < B->size(m); ++b) l[m].push_back(legB(m, b));
    for (int z = 0; z < C->size(m); ++z) r[m].push_back(z);
  }
  return {P, finishMap(B, P, std::move(l)), finishMap(C, P, std::move(r))};
}

namespace {
SSetPtr withData(const SSetPtr& x, int n, Extension ext) {
  auto X = extendTo(x, n);
  std::vector<Level> levels;
  for (int m = 0; m <= n; ++m) levels.push_back(X->level(m));
  levels[n].degens.clear();
  return SimplicialSet::make(ext, std::move(levels));
}
}  // namespace

SSetPtr skeleton(const SSetPtr& x, int n) {
  if (n < 0) throw PreconditionError("negative degree");
  if (x->skeletal() && n >= x->cap()) return x;
  return withData(x, n, Extension::Skeletal);
}

SSetPtr coskeleton(const SSetPtr& x, int n) {
  if (n < 0) throw PreconditionError("negative degree");
  if (x->coskeletal() && n >= x->cap()) return x;
  return withData(x, n, Extension::Coskeletal);
}

SSetPtr truncate(const SSetPtr& x, int n) {
  if (n < 0) throw PreconditionError("negative degree");
  return withData(x, n, Extension::Skeletal);
}

SimplicialMap coskeletonUnit(const SSetPtr& x, int n) {
  auto C = coskeleton(x, n);
  auto X = extendTo(x, n);
  Components comps(n + 1);
  for (int m = 0; m <= n; ++m) {
    comps[m].resize(X->size(m));
    std::iota(comps[m].begin(), comps[m].end(), 0);
  }
  return finishMap(x, C, std::move(comps));
}

SimplicialMap skeletonInclusion(const SSetPtr& x, int n) {
  auto S = skeleton(x, n);
  Components comps(n + 1);
  for (int m = 0; m <= std::min(n, S->cap()); ++m) {
    comps[m].resize(S->size(m));
    std::iota(comps[m].begin(), comps[m].end(), 0);
  }
  comps.resize(std::min(n, S->cap()) + 1);
  return finishMap(S, x, std::move(comps));
}

Classification classify(const SSetPtr& x) {
  Classification r;
  r.coskeletalDegree = detectCoskeletalDegree(x);
  r.skeletalDegree = detectSkeletalDegree(x);
  r.isLean = x->coskeletal() || r.coskeletalDegree.has_value();
  r.isFiniteComplex = x->skeletal() || r.skeletalDegree.has_value();
  for (int m = 0; m <= x->cap(); ++m) {
    r.cellCounts.push_back(x->size(m));
    r.nondegenerateCounts.push_back(x->nondegenerateCount(m));
  }
  if (x->skeletal() && r.coskeletalDegree)
    r.notes.push_back("coskeletal degree checked through degree " + std::to_string(x->cap() + 3));
  if (x->coskeletal() && r.skeletalDegree)
    r.notes.push_back("skeletal degree checked through degree " + std::to_string(x->cap() + 2));
  if (auto d = x->cachedProperty("skeletalUndetermined"))
    r.notes.push_back("skeletal degree undetermined: degree " + std::to_string(*d) + " is too large to materialize");
  return r;
}

SSetPtr toSkeletal(const SSetPtr& x) { return asSkeletal(x); }
SSetPtr toCoskeletal(const SSetPtr& x) { return asCoskeletal(x); }

Image subobject(const SSetPtr& x, const std::vector<std::vector<char>>& marked) {
  const int c = static_cast<int>(marked.size()) - 1;
  if (c < 0) throw PreconditionError("subobject needs degree 0 data");
  auto X = extendTo(x, c);
  std::vector<std::vector<int>> keep(c + 1), newIndex(c + 1);
  for (int m = 0; m <= c; ++m) {
    if (static_cast<int>(marked[m].size()) != X->size(m)) throw PreconditionError("subobject mask has wrong size");
    newIndex[m].assign(X->size(m), -1);
    for (int a = 0; a < X->size(m); ++a)
      if (marked[m][a]) {
        newIndex[m][a] = static_cast<int>(keep[m].size());
        keep[m].push_back(a);
      }
  }
  std::vector<Level> levels(c + 1);
  for (int m = 0; m <= c; ++m) {
    Level& L = levels[m];
    const int n = static_cast<int>(keep[m].size());
    for (int a : keep[m]) L.names.push_back(X->name(m, a));
    if (m > 0) {
      L.faces.assign(m + 1, std::vector<int>(n));
      for (int i = 0; i <= m; ++i)
        for (int k = 0; k < n; ++k) {
          int y = newIndex[m - 1][X->face(m, i, keep[m][k])];
          if (y < 0) throw InvariantError("subobject is not closed under faces");
          L.faces[i][k] = y;
        }
    }
    if (m < c) {
      L.degens.assign(m + 1, std::vector<int>(n));
      for (int j = 0; j <= m; ++j)
        for (int k = 0; k < n; ++k) {
          int y = newIndex[m + 1][X->degen(m, j, keep[m][k])];
          if (y < 0) throw InvariantError("subobject is not closed under degeneracies");
          L.degens[j][k] = y;
        }
    }
  }
  auto S = SimplicialSet::make(Extension::Skeletal, std::move(levels));
  Components inc(c + 1);
  for (int m = 0; m <= c; ++m) inc[m] = keep[m];
  return {S, finishMap(S, X, std::move(inc)), SimplicialMap()};
}

Image image(const SimplicialMap& f) {
  SSetPtr src;
  try {
    src = asSkeletal(f.source());
  } catch (const CapError&) {
    if (f.injective()) return {f.source(), f, identity(f.source())};
    throw CapError("image of a map out of a non-finite object is not represented");
  }
  const int c = src->cap();
  auto g = f.extended(c);
  auto T = g.target();
  std::vector<std::vector<char>> marked(c + 1);
  for (int m = 0; m <= c; ++m) {
    marked[m].assign(T->size(m), 0);
    for (int y : g.components()[m]) marked[m][y] = 1;
  }
  auto im = subobject(T, marked);
  std::vector<std::unordered_map<int, int>> back(c + 1);
  for (int m = 0; m <= c; ++m)
    for (int k = 0; k < im.object->size(m); ++k) back[m][im.inclusion(m, k)] = k;
  Components co(c + 1);
  for (int m = 0; m <= c; ++m)
    for (int y : g.components()[m]) co[m].push_back(back[m].at(y));
  im.corestriction = SimplicialMap(extendTo(src, c), im.object, std::move(co));
  im.inclusion = finishMap(im.object, f.target(), im.inclusion.components());
  return im;
}

Pullback fiber(const SimplicialMap& f, int y) { return pullback(f, vertexInclusion(f.target(), y)); }

SimplicialMap constantMap(const SSetPtr& source, const SSetPtr& target, int vertex) {
  auto al = alignForMaps(source, target);
  Components comps(al.degree + 1);
  for (int m = 0; m <= al.degree; ++m) {
    std::vector<int> theta(m + 1, 0);
    comps[m].assign(al.source->size(m), al.target->applyOperator(theta, 0, vertex));
  }
  return SimplicialMap(al.source, al.target, std::move(comps));
}

namespace {
/// Components into P from components into its two legs, via the cone maps.
Components intoPairs(const SimplicialMap& p1, const SimplicialMap& p2, const Components& a, const Components& b, int d) {
  Components out(d + 1);
  for (int m = 0; m <= d; ++m) {
    std::unordered_map<std::uint64_t, int> idx;
    for (int k = 0; k < p1.source()->size(m); ++k) idx.emplace(pairKey(p1(m, k), p2(m, k)), k);
    out[m].resize(a[m].size());
    for (std::size_t z = 0; z < a[m].size(); ++z) {
      auto it = idx.find(pairKey(a[m][z], b[m][z]));
      if (it == idx.end()) throw PreconditionError("legs do not form a cone");
      out[m][z] = it->second;
    }
  }
  return out;
}
}  // namespace

SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g, const Product& p) {
  const int d = std::min(p.first.degree(), p.second.degree());
  auto fe = f.extended(d), ge = g.extended(d);
  return finishMap(fe.source(), p.object, intoPairs(p.first, p.second, fe.components(), ge.components(), d));
}

SimplicialMap productMap(const SimplicialMap& f, const SimplicialMap& g, const Product& src, const Product& tgt) {
  return pairing(compose(f, src.first), compose(g, src.second), tgt);
}

SimplicialMap pullbackMap(const Pullback& p, const SimplicialMap& toB, const SimplicialMap& toC) {
  const int d = std::min(p.first.degree(), p.second.degree());
  auto fe = toB.extended(d), ge = toC.extended(d);
  return finishMap(fe.source(), p.object, intoPairs(p.first, p.second, fe.components(), ge.components(), d));
}

SimplicialMap copairing(const Coproduct& c, const std::vector<SimplicialMap>& legs, const SSetPtr& target) {
  if (legs.size() != c.injections.size()) throw PreconditionError("copairing needs one leg per summand");
  const int d = c.object->cap();
  Components comps(d + 1);
  for (int m = 0; m <= d; ++m) comps[m].assign(c.object->size(m), -1);
  for (std::size_t k = 0; k < legs.size(); ++k) {
    auto leg = legs[k].extended(d);
    auto inj = c.injections[k].extended(d);
    for (int m = 0; m <= d; ++m)
      for (int x = 0; x < inj.source()->size(m); ++x) comps[m][inj(m, x)] = leg(m, x);
  }
  return finishMap(c.object, target, std::move(comps));
}

SimplicialMap pushoutMap(const Pushout& p, const SimplicialMap& onB, const SimplicialMap& onC) {
  const int d = p.object->cap();
  auto l = p.left.extended(d), r = p.right.extended(d);
  auto b = onB.extended(d), c = onC.extended(d);
  if (!sameObject(b.target(), c.target())) throw PreconditionError("pushout legs have different targets");
  Components comps(d + 1);
  for (int m = 0; m <= d; ++m) {
    comps[m].assign(p.object->size(m), -1);
    for (int x = 0; x < l.source()->size(m); ++x) {
      int& slot = comps[m][l(m, x)];
      if (slot >= 0 && slot != b(m, x)) throw PreconditionError("legs do not form a cocone");
      slot = b(m, x);
    }
    for (int x = 0; x < r.source()->size(m); ++x) {
      int& slot = comps[m][r(m, x)];
      if (slot >= 0 && slot != c(m, x)) throw PreconditionError("legs do not form a cocone");
      slot = c(m, x);
    }
    for (int v : comps[m])
      if (v < 0) throw EngineDefect("pushout legs are not jointly surjective");
  }
  return finishMap(p.object, b.target(), std::move(comps));
}

}  // namespace sset
