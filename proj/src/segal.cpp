#include "sset/segal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "sset/builders.hpp"
#include "sset/homotopy.hpp"
#include "sset/lifting.hpp"

namespace sset {

namespace {

std::string joinNames(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + ")";
}

/// A discrete simplicial set with the given vertex names (1-coskeletal).
SSetPtr discreteRow(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  std::vector<Level> levels(2);
  levels[0].names = names;
  levels[0].degens.assign(1, std::vector<int>(n));
  std::iota(levels[0].degens[0].begin(), levels[0].degens[0].end(), 0);
  for (auto& a : names) levels[1].names.push_back("s0(" + a + ")");
  levels[1].faces.assign(2, levels[0].degens[0]);
  return SimplicialSet::make(Extension::Coskeletal, std::move(levels));
}

SimplicialMap discreteRowMap(const SSetPtr& a, const SSetPtr& b, std::vector<int> f) {
  return SimplicialMap(a, b, Components{f, f});
}

/// The i-th coface [t-1] -> [t] and j-th codegeneracy [t+1] -> [t] as vertex lists.
std::vector<int> coface(int t, int i) {
  std::vector<int> v;
  for (int k = 0; k <= t; ++k)
    if (k != i) v.push_back(k);
  return v;
}

std::vector<int> codegeneracy(int t, int j) {
  std::vector<int> v;
  for (int k = 0; k <= t; ++k) {
    v.push_back(k);
    if (k == j) v.push_back(k);
  }
  return v;
}

SimplicialMap jMap(const std::vector<int>& phi, int n) {
  return finishMap(jNerve(static_cast<int>(phi.size()) - 1), jNerve(n), Components{phi});
}

std::vector<int> flatten(const Components& c) {
  std::vector<int> v;
  for (auto& row : c) {
    v.push_back(-1);
    v.insert(v.end(), row.begin(), row.end());
  }
  return v;
}

/// Components at inner degree n of a row map, for every n through d.
std::vector<std::vector<int>> innerComps(const SimplicialMap& f, int d) {
  auto fe = f.extended(d);
  return fe.components();
}

/// Outer operator row t -> row 1 picking the edge (i, i+1).
SimplicialMap outerEdge(const BSetPtr& x, int t, int i) {
  std::optional<SimplicialMap> acc;
  int cur = t;
  for (int j = t; j >= 0; --j) {
    if (j == i || j == i + 1) continue;
    auto d = x->outerFace(cur, j);
    acc = acc ? compose(d, *acc) : d;
    --cur;
  }
  return acc ? *acc : identity(x->row(t));
}

Image subobjectWithPolicy(const Image& im, Extension ext, const SSetPtr& ambient) {
  if (ext == Extension::Skeletal) return im;
  std::vector<Level> levels;
  for (int m = 0; m <= im.object->cap(); ++m) levels.push_back(im.object->level(m));
  levels.back().degens.clear();
  auto obj = SimplicialSet::make(ext, std::move(levels));
  auto incl = finishMap(obj, ambient, im.inclusion.components());
  return {obj, incl, identity(obj)};
}

BisimplicialSubobject subBisimplicial(const BSetPtr& x, const std::function<bool(int t, int n, int cell)>& keep) {
  const int T = x->outerCap(), N = x->innerCap();
  std::vector<Image> rows;
  for (int t = 0; t <= T; ++t) {
    auto R = x->row(t);
    std::vector<std::vector<char>> marks(N + 1);
    for (int n = 0; n <= N; ++n) {
      marks[n].resize(R->size(n));
      for (int c = 0; c < R->size(n); ++c) marks[n][c] = keep(t, n, c) ? 1 : 0;
    }
    rows.push_back(subobjectWithPolicy(subobject(R, marks), R->extension(), R));
  }
  auto restrictAlong = [&](const SimplicialMap& f, int a, int b) {
    auto ia = innerComps(rows[a].inclusion, N), ib = innerComps(rows[b].inclusion, N), fc = innerComps(f, N);
    Components comps(N + 1);
    for (int n = 0; n <= N; ++n) {
      std::unordered_map<int, int> back;
      for (std::size_t k = 0; k < ib[n].size(); ++k) back.emplace(ib[n][k], static_cast<int>(k));
      for (int c : ia[n]) {
        auto it = back.find(fc[n][c]);
        if (it == back.end()) throw InvariantError("marked cells are not closed under outer operators");
        comps[n].push_back(it->second);
      }
    }
    return SimplicialMap(rows[a].object, rows[b].object, std::move(comps));
  };
  std::vector<std::vector<SimplicialMap>> faces(T + 1), degens(T + 1);
  for (int t = 0; t <= T; ++t) {
    if (t > 0)
      for (int i = 0; i <= t; ++i) faces[t].push_back(restrictAlong(x->outerFace(t, i), t, t - 1));
    if (t < T)
      for (int j = 0; j <= t; ++j) degens[t].push_back(restrictAlong(x->outerDegen(t, j), t, t + 1));
  }
  std::vector<SSetPtr> objs;
  std::vector<SimplicialMap> incl;
  for (auto& r : rows) {
    objs.push_back(r.object);
    incl.push_back(r.inclusion);
  }
  auto sub = std::make_shared<const BisimplicialSet>(x->outerExtension(), objs, faces, degens);
  return {sub, BisimplicialMap{sub, x, incl}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Bisimplicial sets
// ---------------------------------------------------------------------------

BisimplicialSet::BisimplicialSet(Extension outer, std::vector<SSetPtr> rows, std::vector<std::vector<SimplicialMap>> faces,
                                 std::vector<std::vector<SimplicialMap>> degens)
    : outer_(outer), rows_(std::move(rows)), faces_(std::move(faces)), degens_(std::move(degens)) {
  const int T = outerCap();
  if (T < 0) throw PreconditionError("a bisimplicial set needs row 0");
  faces_.resize(T + 1);
  degens_.resize(T + 1);
  int N = 0;
  for (auto& r : rows_) N = std::max(N, r->cap());
  for (auto& r : rows_) r = extendTo(r, N);
  for (int t = 0; t <= T; ++t) {
    if (static_cast<int>(faces_[t].size()) != (t == 0 ? 0 : t + 1)) throw PreconditionError("wrong number of outer faces");
    if (static_cast<int>(degens_[t].size()) != (t == T ? 0 : t + 1))
      throw PreconditionError("wrong number of outer degeneracies");
    for (auto& f : faces_[t]) {
      if (!sameObject(f.source(), rows_[t]) || !sameObject(f.target(), rows_[t - 1]))
        throw PreconditionError("outer face has the wrong endpoints");
      f = SimplicialMap(rows_[t], rows_[t - 1], f.extended(N).components());
    }
    for (auto& s : degens_[t]) {
      if (!sameObject(s.source(), rows_[t]) || !sameObject(s.target(), rows_[t + 1]))
        throw PreconditionError("outer degeneracy has the wrong endpoints");
      s = SimplicialMap(rows_[t], rows_[t + 1], s.extended(N).components());
    }
  }
}

int BisimplicialSet::innerCap() const { return rows_.front()->cap(); }

std::optional<std::string> BisimplicialSet::checkIdentities() const {
  const int T = outerCap();
  for (int t = 0; t <= T; ++t) {
    if (auto e = rows_[t]->checkIdentities()) return "row " + std::to_string(t) + ": " + *e;
    for (auto& f : faces_[t])
      if (auto e = f.checkSimplicial()) return "outer face of row " + std::to_string(t) + ": " + *e;
    for (auto& s : degens_[t])
      if (auto e = s.checkSimplicial()) return "outer degeneracy of row " + std::to_string(t) + ": " + *e;
  }
  auto fail = [](const std::string& what, int t, int i, int j) {
    return what + " fails at t=" + std::to_string(t) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
  };
  for (int t = 2; t <= T; ++t)
    for (int i = 0; i <= t; ++i)
      for (int j = i + 1; j <= t; ++j)
        if (!sameMap(compose(faces_[t - 1][i], faces_[t][j]), compose(faces_[t - 1][j - 1], faces_[t][i])))
          return fail("d_i d_j = d_{j-1} d_i", t, i, j);
  for (int t = 0; t < T; ++t)
    for (int j = 0; j <= t; ++j)
      for (int i = 0; i <= t + 1; ++i) {
        auto lhs = compose(faces_[t + 1][i], degens_[t][j]);
        SimplicialMap rhs;
        if (i < j) rhs = compose(degens_[t - 1][j - 1], faces_[t][i]);
        else if (i == j || i == j + 1) rhs = identity(rows_[t]);
        else rhs = compose(degens_[t - 1][j], faces_[t][i - 1]);
        if (!sameMap(lhs, rhs)) return fail("d_i s_j", t, i, j);
      }
  for (int t = 0; t + 1 < T; ++t)
    for (int i = 0; i <= t; ++i)
      for (int j = i; j <= t; ++j)
        if (!sameMap(compose(degens_[t + 1][i], degens_[t][j]), compose(degens_[t + 1][j + 1], degens_[t][i])))
          return fail("s_i s_j = s_{j+1} s_i", t, i, j);
  return std::nullopt;
}

std::optional<std::string> BisimplicialMap::check() const {
  const int T = std::min(source->outerCap(), target->outerCap());
  if (static_cast<int>(rows.size()) != T + 1) return "one row map per outer degree is required";
  for (int t = 0; t <= T; ++t) {
    if (!sameObject(rows[t].source(), source->row(t)) || !sameObject(rows[t].target(), target->row(t)))
      return "row map " + std::to_string(t) + " has the wrong endpoints";
    if (auto e = rows[t].checkSimplicial()) return "row map " + std::to_string(t) + ": " + *e;
    if (t > 0)
      for (int i = 0; i <= t; ++i)
        if (!sameMap(compose(target->outerFace(t, i), rows[t]), compose(rows[t - 1], source->outerFace(t, i))))
          return "row maps do not commute with outer face " + std::to_string(i) + " at t=" + std::to_string(t);
    if (t < T)
      for (int j = 0; j <= t; ++j)
        if (!sameMap(compose(target->outerDegen(t, j), rows[t]), compose(rows[t + 1], source->outerDegen(t, j))))
          return "row maps do not commute with outer degeneracy " + std::to_string(j) + " at t=" + std::to_string(t);
  }
  return std::nullopt;
}

BSetPtr externalProduct(const SSetPtr& x, const SSetPtr& y, int outerCap) {
  SSetPtr X = x;
  if (x->skeletal()) {
    try {
      X = asCoskeletal(x);
    } catch (const CapError&) {
    }
  }
  const int T = std::max(outerCap, X->cap());
  X = extendTo(X, T);
  const int N = y->cap();
  std::vector<SSetPtr> rows;
  for (int t = 0; t <= T; ++t) {
    const int nx = X->size(t);
    std::vector<Level> levels(N + 1);
    for (int n = 0; n <= N; ++n) {
      const int ny = y->size(n);
      Level& L = levels[n];
      for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) L.names.push_back(X->name(t, a) + "|" + y->name(n, b));
      if (n > 0) {
        const int prev = y->size(n - 1);
        L.faces.assign(n + 1, std::vector<int>(nx * ny));
        for (int i = 0; i <= n; ++i)
          for (int a = 0; a < nx; ++a)
            for (int b = 0; b < ny; ++b) L.faces[i][a * ny + b] = a * prev + y->face(n, i, b);
      }
      if (n < N) {
        const int next = y->size(n + 1);
        L.degens.assign(n + 1, std::vector<int>(nx * ny));
        for (int j = 0; j <= n; ++j)
          for (int a = 0; a < nx; ++a)
            for (int b = 0; b < ny; ++b) L.degens[j][a * ny + b] = a * next + y->degen(n, j, b);
      }
    }
    rows.push_back(SimplicialSet::make(y->extension(), std::move(levels)));
  }
  auto outerMap = [&](int from, int to, const std::function<int(int)>& op) {
    Components comps(N + 1);
    for (int n = 0; n <= N; ++n) {
      const int ny = y->size(n);
      for (int a = 0; a < X->size(from); ++a)
        for (int b = 0; b < ny; ++b) comps[n].push_back(op(a) * ny + b);
    }
    return SimplicialMap(rows[from], rows[to], std::move(comps));
  };
  std::vector<std::vector<SimplicialMap>> faces(T + 1), degens(T + 1);
  for (int t = 0; t <= T; ++t) {
    if (t > 0)
      for (int i = 0; i <= t; ++i) faces[t].push_back(outerMap(t, t - 1, [&](int a) { return X->face(t, i, a); }));
    if (t < T)
      for (int j = 0; j <= t; ++j) degens[t].push_back(outerMap(t, t + 1, [&](int a) { return X->degen(t, j, a); }));
  }
  return std::make_shared<const BisimplicialSet>(X->extension(), rows, faces, degens);
}

BSetPtr discreteNerve(const FiniteCategory& c) {
  auto N = nerve(c);
  const int T = N->cap();
  std::vector<SSetPtr> rows;
  for (int t = 0; t <= T; ++t) rows.push_back(discreteRow(N->level(t).names));
  std::vector<std::vector<SimplicialMap>> faces(T + 1), degens(T + 1);
  for (int t = 0; t <= T; ++t) {
    if (t > 0)
      for (int i = 0; i <= t; ++i) faces[t].push_back(discreteRowMap(rows[t], rows[t - 1], N->level(t).faces[i]));
    if (t < T)
      for (int j = 0; j <= t; ++j) degens[t].push_back(discreteRowMap(rows[t], rows[t + 1], N->level(t).degens[j]));
  }
  return std::make_shared<const BisimplicialSet>(N->extension(), rows, faces, degens);
}

BisimplicialMap discreteNerveMap(const Functor& f, const BSetPtr& source, const BSetPtr& target) {
  const int T = std::min(source->outerCap(), target->outerCap());
  auto nm = nerveMap(f, nerve(*f.source), nerve(*f.target)).extended(T);
  BisimplicialMap m{source, target, {}};
  for (int t = 0; t <= T; ++t) m.rows.push_back(discreteRowMap(source->row(t), target->row(t), nm.components()[t]));
  if (auto e = m.check()) throw InvariantError(*e);
  return m;
}

Matching matchingObject(const BSetPtr& x, int t) {
  if (t < 0) throw PreconditionError("negative outer degree");
  if (t == 0) {
    auto star = point();
    return {star, toTerminal(x->row(0), star), {}};
  }
  auto X = extendOuter(x, t - 1);
  const int N0 = X->innerCap();
  const bool cosk = X->row(t - 1)->coskeletal();
  const int D = cosk ? N0 : (t + 1) * N0;
  auto R = extendTo(X->row(t - 1), D);
  std::vector<std::vector<std::vector<int>>> d(t);  // d[i][n][y]: outer face of row t-1
  if (t >= 2)
    for (int i = 0; i < t; ++i) d[i] = innerComps(X->outerFace(t - 1, i), D);
  std::vector<std::vector<std::vector<int>>> tuples(D + 1);
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> idx(D + 1);
  for (int n = 0; n <= D; ++n) {
    const int sz = R->size(n);
    std::vector<std::unordered_map<int, std::vector<int>>> byFace0;
    if (t >= 2) {
      byFace0.resize(1);
      for (int y = 0; y < sz; ++y) byFace0[0][d[0][n][y]].push_back(y);
    }
    std::vector<int> cur(t + 1);
    std::vector<int> all(sz);
    std::iota(all.begin(), all.end(), 0);
    std::function<void(int)> rec = [&](int j) {
      if (j > t) {
        idx[n].emplace(cur, static_cast<int>(tuples[n].size()));
        tuples[n].push_back(cur);
        return;
      }
      charge();
      const std::vector<int>* cand = &all;
      static const std::vector<int> none;
      if (j >= 1 && t >= 2) {
        auto it = byFace0[0].find(d[j - 1][n][cur[0]]);
        cand = it == byFace0[0].end() ? &none : &it->second;
      }
      for (int y : *cand) {
        bool ok = true;
        for (int i = 0; i < j && ok && t >= 2; ++i) ok = d[i][n][y] == d[j - 1][n][cur[i]];
        if (!ok) continue;
        cur[j] = y;
        rec(j + 1);
      }
    };
    rec(0);
  }
  std::vector<Level> levels(D + 1);
  for (int n = 0; n <= D; ++n) {
    Level& L = levels[n];
    const int cnt = static_cast<int>(tuples[n].size());
    for (auto& tp : tuples[n]) {
      std::vector<std::string> parts;
      for (int y : tp) parts.push_back(R->name(n, y));
      L.names.push_back(joinNames(parts));
    }
    auto look = [&](int m, const std::vector<int>& v) {
      auto it = idx[m].find(v);
      if (it == idx[m].end()) throw InvariantError("matching object is not closed under inner operators");
      return it->second;
    };
    if (n > 0) {
      L.faces.assign(n + 1, std::vector<int>(cnt));
      for (int i = 0; i <= n; ++i)
        for (int k = 0; k < cnt; ++k) {
          std::vector<int> v(t + 1);
          for (int j = 0; j <= t; ++j) v[j] = R->face(n, i, tuples[n][k][j]);
          L.faces[i][k] = look(n - 1, v);
        }
    }
    if (n < D) {
      L.degens.assign(n + 1, std::vector<int>(cnt));
      for (int s = 0; s <= n; ++s)
        for (int k = 0; k < cnt; ++k) {
          std::vector<int> v(t + 1);
          for (int j = 0; j <= t; ++j) v[j] = R->degen(n, s, tuples[n][k][j]);
          L.degens[s][k] = look(n + 1, v);
        }
    }
  }
  auto M = SimplicialSet::make(cosk ? Extension::Coskeletal : Extension::Skeletal, std::move(levels));
  Matching out;
  out.object = M;
  for (int j = 0; j <= t; ++j) {
    Components comps(D + 1);
    for (int n = 0; n <= D; ++n)
      for (auto& tp : tuples[n]) comps[n].push_back(tp[j]);
    out.projections.push_back(SimplicialMap(M, R, std::move(comps)));
  }
  if (t <= X->outerCap()) {
    auto Rt = extendTo(X->row(t), D);
    std::vector<std::vector<std::vector<int>>> f(t + 1);
    for (int i = 0; i <= t; ++i) f[i] = innerComps(X->outerFace(t, i), D);
    Components comps(D + 1);
    for (int n = 0; n <= D; ++n)
      for (int z = 0; z < Rt->size(n); ++z) {
        std::vector<int> v(t + 1);
        for (int i = 0; i <= t; ++i) v[i] = f[i][n][z];
        auto it = idx[n].find(v);
        if (it == idx[n].end()) throw InvariantError("outer faces do not form a matching tuple");
        comps[n].push_back(it->second);
      }
    out.comparison = SimplicialMap(Rt, M, std::move(comps));
  } else {
    out.comparison = identity(M);
  }
  return out;
}

BSetPtr extendOuter(const BSetPtr& x, int t) {
  if (t <= x->outerCap()) return x;
  if (x->outerExtension() == Extension::Skeletal)
    throw CapError("outer rows above the cap of an outer-skeletal object are not materialized", t);
  BSetPtr cur = x;
  while (cur->outerCap() < t) {
    const int s = cur->outerCap() + 1;
    auto M = matchingObject(cur, s);
    std::vector<SSetPtr> rows = cur->rows();
    rows.push_back(M.object);
    std::vector<std::vector<SimplicialMap>> faces(s + 1), degens(s + 1);
    for (int r = 0; r < s; ++r) {
      if (r > 0)
        for (int i = 0; i <= r; ++i) faces[r].push_back(cur->outerFace(r, i));
      if (r + 1 < s)
        for (int j = 0; j <= r; ++j) degens[r].push_back(cur->outerDegen(r, j));
    }
    faces[s] = M.projections;
    const int D = M.object->cap();
    std::vector<std::vector<int>> proj(s + 1);
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> idx(D + 1);
    std::vector<std::vector<std::vector<int>>> pc(s + 1);
    for (int i = 0; i <= s; ++i) pc[i] = innerComps(M.projections[i], D);
    for (int n = 0; n <= D; ++n)
      for (int k = 0; k < M.object->size(n); ++k) {
        std::vector<int> v(s + 1);
        for (int i = 0; i <= s; ++i) v[i] = pc[i][n][k];
        idx[n].emplace(v, k);
      }
    for (int j = 0; j < s; ++j) {
      // d_i s_j by the simplicial identities, all landing in row s-1
      std::vector<SimplicialMap> parts;
      for (int i = 0; i <= s; ++i) {
        if (i == j || i == j + 1) parts.push_back(identity(rows[s - 1]));
        else if (i < j) parts.push_back(compose(degens[s - 2][j - 1], faces[s - 1][i]));
        else parts.push_back(compose(degens[s - 2][j], faces[s - 1][i - 1]));
      }
      std::vector<std::vector<std::vector<int>>> ec(s + 1);
      for (int i = 0; i <= s; ++i) ec[i] = innerComps(parts[i], D);
      auto src = extendTo(rows[s - 1], D);
      Components comps(D + 1);
      for (int n = 0; n <= D; ++n)
        for (int z = 0; z < src->size(n); ++z) {
          std::vector<int> v(s + 1);
          for (int i = 0; i <= s; ++i) v[i] = ec[i][n][z];
          comps[n].push_back(idx[n].at(v));
        }
      degens[s - 1].push_back(SimplicialMap(src, M.object, std::move(comps)));
    }
    cur = std::make_shared<const BisimplicialSet>(x->outerExtension(), rows, faces, degens);
  }
  return cur;
}

SSetPtr rowAt(const BSetPtr& x, int t) { return extendOuter(x, t)->row(t); }

SSetPtr column(const BSetPtr& x, int n) {
  const int T = x->outerCap();
  std::vector<Level> levels(T + 1);
  for (int t = 0; t <= T; ++t) {
    auto R = extendTo(x->row(t), n);
    Level& L = levels[t];
    for (int c = 0; c < R->size(n); ++c) L.names.push_back(R->name(n, c));
    if (t > 0)
      for (int i = 0; i <= t; ++i) L.faces.push_back(x->outerFace(t, i).extended(n).components()[n]);
    if (t < T)
      for (int j = 0; j <= t; ++j) L.degens.push_back(x->outerDegen(t, j).extended(n).components()[n]);
  }
  return SimplicialSet::make(x->outerExtension(), std::move(levels));
}

SSetPtr ev0(const BSetPtr& x) { return column(x, 0); }

// ---------------------------------------------------------------------------
// Sing and J
// ---------------------------------------------------------------------------

Sing singJ(const SSetPtr& x) {
  if (!isQuasiCategory(x)) throw PreconditionError("Sing needs a quasi-category");
  SSetPtr X;
  try {
    X = asCoskeletal(x);
  } catch (const CapError&) {
    throw PreconditionError("Sing needs a lean input");
  }
  const int C = detectCoskeletalDegree(X).value_or(X->cap());
  Sing s;
  s.cap = C;
  s.target = extendTo(coskeleton(X, C), C);
  s.domains.resize(C + 1);
  s.maps.resize(C + 1);
  std::vector<std::vector<std::unordered_map<std::vector<int>, int, VecHash>>> index(C + 1);
  for (int t = 0; t <= C; ++t) {
    index[t].resize(C + 1);
    for (int n = 0; n <= C; ++n) {
      s.domains[t].push_back(product(delta(t), jNerve(n)));
      MapSearch spec;
      spec.source = extendTo(s.domains[t][n].object, C);
      spec.target = s.target;
      spec.degree = C;
      std::vector<Components> found;
      enumerateMaps(spec, [&](const Components& c) {
        Components cc(c.begin(), c.begin() + C + 1);
        index[t][n].emplace(flatten(cc), static_cast<int>(found.size()));
        found.push_back(std::move(cc));
        return true;
      });
      s.maps[t].push_back(std::move(found));
    }
  }
  // precompose every cell of (t, n) along h: domain(t2, n2) -> domain(t, n)
  auto along = [&](const SimplicialMap& h, int t, int n, int t2, int n2) {
    auto he = h.extended(C);
    std::vector<int> out;
    for (auto& f : s.maps[t][n]) {
      Components g(C + 1);
      for (int m = 0; m <= C; ++m) {
        g[m].resize(he.components()[m].size());
        for (std::size_t a = 0; a < g[m].size(); ++a) g[m][a] = f[m][he.components()[m][a]];
      }
      auto it = index[t2][n2].find(flatten(g));
      if (it == index[t2][n2].end()) throw InvariantError("precomposite is not a listed map");
      out.push_back(it->second);
    }
    return out;
  };
  auto innerOp = [&](int t, const std::vector<int>& phi, int n, int n2) {
    return along(productMap(identity(delta(t)), jMap(phi, n), s.domains[t][n2], s.domains[t][n]), t, n, t, n2);
  };
  auto outerOp = [&](const std::vector<int>& theta, int t, int t2, int n) {
    return along(productMap(deltaMap(theta, t), identity(jNerve(n)), s.domains[t2][n], s.domains[t][n]), t, n, t2, n);
  };
  std::vector<SSetPtr> rows;
  for (int t = 0; t <= C; ++t) {
    std::vector<Level> levels(C + 1);
    for (int n = 0; n <= C; ++n) {
      Level& L = levels[n];
      for (std::size_t k = 0; k < s.maps[t][n].size(); ++k) L.names.push_back("f" + std::to_string(k));
      if (n > 0)
        for (int i = 0; i <= n; ++i) L.faces.push_back(innerOp(t, coface(n, i), n, n - 1));
      if (n < C)
        for (int j = 0; j <= n; ++j) L.degens.push_back(innerOp(t, codegeneracy(n, j), n, n + 1));
    }
    rows.push_back(SimplicialSet::make(Extension::Coskeletal, std::move(levels)));
  }
  std::vector<std::vector<SimplicialMap>> faces(C + 1), degens(C + 1);
  for (int t = 0; t <= C; ++t) {
    if (t > 0)
      for (int i = 0; i <= t; ++i) {
        Components comps(C + 1);
        for (int n = 0; n <= C; ++n) comps[n] = outerOp(coface(t, i), t, t - 1, n);
        faces[t].push_back(SimplicialMap(rows[t], rows[t - 1], std::move(comps)));
      }
    if (t < C)
      for (int j = 0; j <= t; ++j) {
        Components comps(C + 1);
        for (int n = 0; n <= C; ++n) comps[n] = outerOp(codegeneracy(t, j), t, t + 1, n);
        degens[t].push_back(SimplicialMap(rows[t], rows[t + 1], std::move(comps)));
      }
  }
  s.object = std::make_shared<const BisimplicialSet>(Extension::Coskeletal, rows, faces, degens);
  return s;
}

SimplicialMap evSingComparison(const Sing& s) {
  auto E = ev0(s.object);
  const int C = s.cap;
  Components comps(C + 1);
  for (int t = 0; t <= C; ++t) {
    const auto& P = s.domains[t][0];
    auto first = P.first.extended(C);
    auto D = extendTo(delta(t), C);
    int top = -1;
    for (int k = 0; k < first.source()->size(t); ++k)
      if (!D->isDegenerate(t, first(t, k))) top = k;
    if (top < 0) throw InvariantError("no top simplex in Δ^t × J^0");
    for (auto& f : s.maps[t][0]) comps[t].push_back(f[t][top]);
  }
  return SimplicialMap(E, s.target, std::move(comps));
}

Image boundaryJ(int k) {
  if (k < 0) throw PreconditionError("negative dimension");
  const int d = k + 1;
  auto J = extendTo(jNerve(d), d);
  std::vector<std::vector<char>> marks(d + 1);
  for (int m = 0; m <= d; ++m) {
    marks[m].resize(J->size(m));
    for (int c = 0; c < J->size(m); ++c) {
      auto v = J->vertices(m, c);
      std::vector<char> seen(d + 1, 0);
      for (int a : v) seen[a] = 1;
      marks[m][c] = std::count(seen.begin(), seen.end(), 1) <= d ? 1 : 0;
    }
  }
  return subobjectWithPolicy(subobject(J, marks), Extension::Coskeletal, J);
}

BisimplicialSubobject localizationMap(LocalizationKind kind, int t, int n, int outerCap) {
  if (n < 0) throw PreconditionError("negative inner degree");
  auto Dn = delta(n);
  auto inBoundary = [&](int m, int cell) {
    auto v = extendTo(Dn, m)->vertices(m, cell);
    std::vector<char> seen(n + 1, 0);
    for (int a : v) seen[a] = 1;
    return std::count(seen.begin(), seen.end(), 1) <= n;
  };
  if (kind == LocalizationKind::Segal) {
    if (t < 2) throw PreconditionError("Segal maps need t >= 2");
    const int T = outerCap < 0 ? t : outerCap;
    auto Dt = extendTo(delta(t), T);
    auto X = externalProduct(delta(t), Dn, T);
    auto inSpine = [&](int a, int cell) {
      auto v = Dt->vertices(a, cell);
      return v.back() - v.front() <= 1;
    };
    return subBisimplicial(X, [&](int a, int m, int cell) {
      const int ny = Dn->size(m);
      return inSpine(a, cell / ny) || inBoundary(m, cell % ny);
    });
  }
  const int T = outerCap < 0 ? 1 : outerCap;
  auto J = extendTo(jNerve(1), T);
  auto X = externalProduct(jNerve(1), Dn, T);
  return subBisimplicial(X, [&](int a, int m, int cell) {
    const int ny = Dn->size(m);
    auto v = J->vertices(a, cell / ny);
    const bool atZero = std::all_of(v.begin(), v.end(), [](int z) { return z == 0; });
    return atZero || inBoundary(m, cell % ny);
  });
}

// ---------------------------------------------------------------------------
// Classification and Reedy/Segal/completeness checks
// ---------------------------------------------------------------------------

BisimplicialClassification classifyBisimplicial(const BSetPtr& x) {
  BisimplicialClassification r;
  std::optional<int> inner = 0;
  for (auto& row : x->rows()) {
    auto d = detectCoskeletalDegree(row);
    if (!d) {
      inner.reset();
      break;
    }
    inner = std::max(*inner, *d);
  }
  r.innerDegree = inner;
  if (!inner) r.notes.push_back("some row is not coskeletal");
  if (x->outerExtension() == Extension::Skeletal) {
    r.notes.push_back("outer direction is skeletal");
  } else {
    const int T = x->outerCap();
    auto X = extendOuter(x, T + 1);
    int t0 = 0;
    for (int t = T + 1; t >= 1; --t)
      if (!isIsomorphism(matchingObject(X, t).comparison)) {
        t0 = t;
        break;
      }
    r.outerDegree = t0;
  }
  r.doublyLean = r.innerDegree.has_value() && r.outerDegree.has_value();
  return r;
}

bool isReedyFibrantDesk(const BSetPtr& x) {
  for (int t = 0; t <= x->outerCap(); ++t) {
    auto M = matchingObject(x, t);
    if (!classifyMap(M.comparison, MapKind::KanFibration).holds) return false;
  }
  return true;
}

namespace {
void requireReedy(const BSetPtr& x, const char* who) {
  if (!isReedyFibrantDesk(x)) throw PreconditionError(std::string(who) + ": input is not Reedy fibrant");
}
}  // namespace

bool checkSegal(const BSetPtr& x) {
  requireReedy(x, "Segal check");
  const int top = std::max(2, x->outerCap());
  auto X = extendOuter(x, top);
  auto d0 = X->outerFace(1, 0), d1 = X->outerFace(1, 1);
  for (int t = 2; t <= top; ++t) {
    SimplicialMap seg = outerEdge(X, t, 0);
    SimplicialMap end = d0;
    for (int k = 1; k < t; ++k) {
      auto pb = pullback(end, d1);
      seg = pullbackMap(pb, seg, outerEdge(X, t, k));
      end = compose(d0, pb.second);
    }
    if (!isWeakEquivalenceKan(seg)) return false;
  }
  return true;
}

bool checkComplete(const BSetPtr& x) {
  requireReedy(x, "completeness check");
  auto X = extendOuter(x, 1);
  const int N = X->innerCap();
  const int D = X->outerCap();
  auto J = extendTo(jNerve(1), D);
  std::vector<SSetPtr> cols;
  for (int n = 0; n <= N; ++n) cols.push_back(column(X, n));
  std::vector<std::vector<Components>> maps(N + 1);
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index(N + 1);
  for (int n = 0; n <= N; ++n) {
    MapSearch spec;
    spec.source = J;
    spec.target = cols[n];
    spec.degree = D;
    enumerateMaps(spec, [&](const Components& c) {
      index[n].emplace(flatten(c), static_cast<int>(maps[n].size()));
      maps[n].push_back(c);
      return true;
    });
  }
  auto columnOp = [&](int n, int n2, bool isFace, int i, const Components& f) {
    Components g(D + 1);
    for (int t = 0; t <= D; ++t) {
      const auto& R = X->row(t);
      g[t].resize(f[t].size());
      for (std::size_t a = 0; a < f[t].size(); ++a) g[t][a] = isFace ? R->face(n, i, f[t][a]) : R->degen(n, i, f[t][a]);
    }
    auto it = index[n2].find(flatten(g));
    if (it == index[n2].end()) throw InvariantError("inner operator leaves the J-points");
    return it->second;
  };
  std::vector<Level> levels(N + 1);
  for (int n = 0; n <= N; ++n) {
    Level& L = levels[n];
    for (std::size_t k = 0; k < maps[n].size(); ++k) L.names.push_back("j" + std::to_string(k));
    if (n > 0)
      for (int i = 0; i <= n; ++i) {
        L.faces.emplace_back();
        for (auto& f : maps[n]) L.faces.back().push_back(columnOp(n, n - 1, true, i, f));
      }
    if (n < N)
      for (int j = 0; j <= n; ++j) {
        L.degens.emplace_back();
        for (auto& f : maps[n]) L.degens.back().push_back(columnOp(n, n + 1, false, j, f));
      }
  }
  auto row0 = X->row(0);
  auto Z = SimplicialSet::make(row0->extension(), std::move(levels));
  Components comps(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int v = 0; v < row0->size(n); ++v) {
      Components g(D + 1);
      int cell = v;
      for (int t = 0; t <= D; ++t) {
        if (t > 0) cell = X->outerDegen(t - 1, t - 1)(n, cell);
        g[t].assign(J->size(t), cell);
      }
      auto it = index[n].find(flatten(g));
      if (it == index[n].end()) throw InvariantError("constant J-point missing");
      comps[n].push_back(it->second);
    }
  auto c = SimplicialMap(row0, Z, std::move(comps));
  if (!isKanComplex(Z)) throw PreconditionError("completeness check: the J-point object is not a Kan complex");
  return isWeakEquivalenceKan(c);
}

Pullback cssMapSpace(const BSetPtr& x, int from, int to) {
  auto X = extendOuter(x, 1);
  auto r0 = X->row(0);
  if (from < 0 || to < 0 || from >= r0->size(0) || to >= r0->size(0)) throw PreconditionError("vertex out of range");
  auto P = product(r0, r0);
  auto ends = pairing(X->outerFace(1, 1), X->outerFace(1, 0), P);
  int v = -1;
  for (int k = 0; k < P.object->size(0) && v < 0; ++k)
    if (P.first(0, k) == from && P.second(0, k) == to) v = k;
  return fiber(ends, v);
}

CssDKReport isDKEquivalenceCSS(const BisimplicialMap& f) {
  for (auto [obj, role] : {std::pair{f.source, "source"}, std::pair{f.target, "target"}}) {
    if (!isReedyFibrantDesk(obj)) throw PreconditionError(std::string(role) + " fails the Reedy fibrancy check");
    if (!checkSegal(obj)) throw PreconditionError(std::string(role) + " fails the Segal check");
    if (!checkComplete(obj)) throw PreconditionError(std::string(role) + " fails the completeness check");
  }
  if (f.rows.size() < 2) throw PreconditionError("DK check needs row maps through outer degree 1");
  CssDKReport r;
  auto X = f.source, Y = f.target;
  const auto& f0 = f.rows[0];
  auto px = pi0(X->row(0)), py = pi0(Y->row(0));
  std::vector<char> hit(py.count, 0);
  for (int v = 0; v < X->row(0)->size(0); ++v) hit[py.componentOf[f0(0, v)]] = 1;
  r.essentiallySurjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  if (!r.essentiallySurjective) r.detail.push_back("a component of Y_{0,•} is not hit");
  r.fullyFaithful = true;
  const int nv = X->row(0)->size(0);
  for (int a = 0; a < nv && r.fullyFaithful; ++a)
    for (int b = 0; b < nv && r.fullyFaithful; ++b) {
      auto mx = cssMapSpace(X, a, b);
      auto my = cssMapSpace(Y, f0(0, a), f0(0, b));
      auto induced = pullbackMap(my, compose(f.rows[1], mx.first), toTerminal(mx.object, my.second.target()));
      if (!isWeakEquivalenceKan(induced)) {
        r.fullyFaithful = false;
        r.detail.push_back("map(" + X->row(0)->name(0, a) + ", " + X->row(0)->name(0, b) +
                           ") is not carried by a weak equivalence");
      }
    }
  r.verdict = r.essentiallySurjective && r.fullyFaithful;
  return r;
}

bool rowwiseWeakEquivalence(const BisimplicialMap& f) {
  for (auto& m : f.rows)
    if (!isWeakEquivalenceKan(m)) return false;
  return true;
}

}  // namespace sset
