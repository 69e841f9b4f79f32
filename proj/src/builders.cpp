#include "sset/builders.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "sset/ops.hpp"

namespace sset {

SSetPtr fromWords(Extension ext, const std::vector<std::vector<Word>>& cells,
                  const std::function<Word(int, int, const Word&)>& face,
                  const std::function<Word(int, int, const Word&)>& degen,
                  const std::function<std::string(int, const Word&)>& name) {
  const int cap = static_cast<int>(cells.size()) - 1;
  std::vector<std::unordered_map<Word, int, VecHash>> index(cap + 1);
  for (int m = 0; m <= cap; ++m)
    for (int x = 0; x < static_cast<int>(cells[m].size()); ++x) index[m].emplace(cells[m][x], x);
  auto lookup = [&](int m, const Word& w) {
    auto it = index[m].find(w);
    if (it == index[m].end()) throw InvariantError("word builder: image cell missing in degree " + std::to_string(m));
    return it->second;
  };
  std::vector<Level> levels(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    const int n = static_cast<int>(cells[m].size());
    Level& L = levels[m];
    L.names.reserve(n);
    for (auto& w : cells[m]) L.names.push_back(name(m, w));
    if (m > 0) {
      L.faces.assign(m + 1, std::vector<int>(n));
      for (int x = 0; x < n; ++x)
        for (int i = 0; i <= m; ++i) L.faces[i][x] = lookup(m - 1, face(m, i, cells[m][x]));
    }
    if (m < cap) {
      L.degens.assign(m + 1, std::vector<int>(n));
      for (int x = 0; x < n; ++x)
        for (int j = 0; j <= m; ++j) L.degens[j][x] = lookup(m + 1, degen(m, j, cells[m][x]));
    }
  }
  return SimplicialSet::make(ext, std::move(levels));
}

namespace {

Word dropAt(const Word& w, int i) {
  Word r = w;
  r.erase(r.begin() + i);
  return r;
}
Word repeatAt(const Word& w, int j) {
  Word r = w;
  r.insert(r.begin() + j, w[j]);
  return r;
}

std::string seqName(int n, const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (n > 9 && k) s += ".";
    s += std::to_string(w[k]);
  }
  return s;
}

void monotoneSequences(int len, int maxv, std::vector<Word>& out) {
  Word cur(len);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= maxv; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
}

template <class F>
SSetPtr memo(const std::string& key, F&& build) {
  static std::mutex mu;
  static std::map<std::string, SSetPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SSetPtr x = build();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, x).first->second;
}

}  // namespace

SSetPtr subcomplexOfDelta(int n, const std::vector<std::vector<int>>& generators) {
  if (n < 0) throw PreconditionError("negative dimension");
  std::vector<std::vector<char>> gens;
  int cap = 0;
  for (auto& g : generators) {
    std::vector<char> mask(n + 1, 0);
    for (int v : g) {
      if (v < 0 || v > n) throw PreconditionError("generator vertex out of range");
      mask[v] = 1;
    }
    gens.push_back(mask);
    cap = std::max(cap, static_cast<int>(std::count(mask.begin(), mask.end(), 1)) - 1);
  }
  std::vector<std::vector<Word>> cells(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    std::vector<Word> all;
    monotoneSequences(m + 1, n, all);
    for (auto& w : all) {
      bool in = false;
      for (auto& g : gens) {
        bool inside = true;
        for (int v : w) inside = inside && g[v];
        in = in || inside;
      }
      if (in) cells[m].push_back(w);
    }
  }
  return fromWords(Extension::Skeletal, cells, [](int, int i, const Word& w) { return dropAt(w, i); },
                   [](int, int j, const Word& w) { return repeatAt(w, j); },
                   [n](int, const Word& w) { return seqName(n, w); });
}

SSetPtr emptySet() {
  return memo("empty", [] { return SimplicialSet::make(Extension::Skeletal, {Level{}}); });
}

SSetPtr point() { return delta(0); }

SSetPtr delta(int n) {
  if (n < 0) throw PreconditionError("negative dimension");
  return memo("delta" + std::to_string(n), [n] {
    std::vector<int> all(n + 1);
    std::iota(all.begin(), all.end(), 0);
    return subcomplexOfDelta(n, {all});
  });
}

SSetPtr boundary(int n) {
  if (n < 0) throw PreconditionError("negative dimension");
  if (n == 0) return emptySet();
  return memo("boundary" + std::to_string(n), [n] {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i <= n; ++i) {
      std::vector<int> g;
      for (int v = 0; v <= n; ++v)
        if (v != i) g.push_back(v);
      gens.push_back(g);
    }
    return subcomplexOfDelta(n, gens);
  });
}

SSetPtr horn(int n, int k) {
  if (n < 1) throw PreconditionError("horn needs n >= 1");
  if (k < 0 || k > n) throw PreconditionError("horn index out of range");
  return memo("horn" + std::to_string(n) + "." + std::to_string(k), [n, k] {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i <= n; ++i) {
      if (i == k) continue;
      std::vector<int> g;
      for (int v = 0; v <= n; ++v)
        if (v != i) g.push_back(v);
      gens.push_back(g);
    }
    return subcomplexOfDelta(n, gens);
  });
}

SSetPtr spine(int t) {
  if (t < 0) throw PreconditionError("negative dimension");
  if (t == 0) return delta(0);
  return memo("spine" + std::to_string(t), [t] {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < t; ++i) gens.push_back({i, i + 1});
    return subcomplexOfDelta(t, gens);
  });
}

SSetPtr jNerve(int t) {
  if (t < 0) throw PreconditionError("negative dimension");
  return memo("jNerve" + std::to_string(t), [t] {
    std::vector<std::vector<Word>> cells(2);
    for (int a = 0; a <= t; ++a) cells[0].push_back({a});
    for (int a = 0; a <= t; ++a)
      for (int b = 0; b <= t; ++b) cells[1].push_back({a, b});
    return fromWords(Extension::Coskeletal, cells, [](int, int i, const Word& w) { return dropAt(w, i); },
                     [](int, int j, const Word& w) { return repeatAt(w, j); },
                     [t](int, const Word& w) { return seqName(t, w); });
  });
}

SSetPtr discreteSet(int n) {
  if (n < 0) throw PreconditionError("negative size");
  std::vector<std::vector<Word>> cells(2);
  for (int a = 0; a < n; ++a) {
    cells[0].push_back({a});
    cells[1].push_back({a, a});
  }
  return fromWords(Extension::Coskeletal, cells, [](int, int i, const Word& w) { return dropAt(w, i); },
                   [](int, int j, const Word& w) { return repeatAt(w, j); },
                   [](int m, const Word& w) { return m == 0 ? std::to_string(w[0]) : "s0(" + std::to_string(w[0]) + ")"; });
}

namespace {

std::string degenerateName(const SimplicialSet& x, int m, int cell, const std::vector<std::vector<std::string>>& names) {
  int j = x.degeneracyIndex(m, cell);
  return "s" + std::to_string(j) + "(" + names[m - 1][x.face(m, j, cell)] + ")";
}

}  // namespace

SSetPtr renamed(const SSetPtr& x, const std::function<std::string(int, int)>& nondegName) {
  std::vector<std::vector<std::string>> names(x->cap() + 1);
  std::vector<Level> levels;
  for (int m = 0; m <= x->cap(); ++m) {
    names[m].resize(x->size(m));
    for (int c = 0; c < x->size(m); ++c)
      names[m][c] = x->isDegenerate(m, c) ? degenerateName(*x, m, c, names) : nondegName(m, c);
    Level L = x->level(m);
    L.names = names[m];
    levels.push_back(std::move(L));
  }
  return SimplicialSet::make(x->extension(), std::move(levels));
}

SSetPtr walkingH() {
  return memo("walkingH", [] {
    auto d2 = delta(2);
    auto co = coproduct({d2, d2});
    auto X = co.object;
    auto cell = [&](int copy, const std::string& seq) {
      int m = static_cast<int>(seq.size()) - 1;
      return co.injections[copy](m, *d2->find(m, seq));
    };
    // copy 0 = tau on (L,R,L), copy 1 = sigma on (R,L,R); f = tau.01 = sigma.12
    std::vector<std::tuple<int, int, int>> rel = {
        {1, cell(0, "01"), cell(1, "12")}, {1, cell(0, "02"), cell(0, "00")}, {1, cell(1, "02"), cell(1, "00")}};
    auto q = quotientByPairs(X, rel);
    std::map<std::pair<int, int>, std::string> label = {
        {{0, q.projection[0][cell(0, "0")]}, "L"},      {{0, q.projection[0][cell(0, "1")]}, "R"},
        {{1, q.projection[1][cell(0, "01")]}, "f"},     {{1, q.projection[1][cell(0, "12")]}, "g2"},
        {{1, q.projection[1][cell(1, "01")]}, "g1"},    {{2, q.projection[2][cell(0, "012")]}, "tau"},
        {{2, q.projection[2][cell(1, "012")]}, "sigma"}};
    return renamed(q.object, [&](int m, int c) {
      auto it = label.find({m, c});
      if (it == label.end()) throw EngineDefect("unexpected nondegenerate cell in H");
      return it->second;
    });
  });
}

SSetPtr rKanTwo(int n) {
  if (n < 0) throw PreconditionError("negative dimension");
  return memo("rKanTwo" + std::to_string(n), [n] {
    std::vector<std::vector<Word>> maps(n + 2);
    std::vector<std::map<Word, int>> mapIndex(n + 2);
    for (int m = 0; m <= n + 1; ++m) {
      monotoneSequences(n + 1, m, maps[m]);
      for (int k = 0; k < static_cast<int>(maps[m].size()); ++k) mapIndex[m][maps[m][k]] = k;
    }
    for (int m = 0; m <= n; ++m)
      if (maps[m].size() > 20) throw PreconditionError("rKanTwo(" + std::to_string(n) + ") is too large to store explicitly");
    std::vector<std::vector<Word>> cells(n + 1);
    for (int m = 0; m <= n; ++m) {
      const int k = static_cast<int>(maps[m].size());
      for (long v = 0; v < (1L << k); ++v) {
        Word w(k);
        for (int b = 0; b < k; ++b) w[b] = (v >> (k - 1 - b)) & 1;
        cells[m].push_back(w);
      }
    }
    auto face = [&](int m, int i, const Word& w) {
      Word r(maps[m - 1].size());
      for (std::size_t p = 0; p < r.size(); ++p) {
        Word phi = maps[m - 1][p];
        for (int& v : phi) v = v < i ? v : v + 1;
        r[p] = w[mapIndex[m].at(phi)];
      }
      return r;
    };
    auto degen = [&](int m, int j, const Word& w) {
      Word r(maps[m + 1].size());
      for (std::size_t p = 0; p < r.size(); ++p) {
        Word phi = maps[m + 1][p];
        for (int& v : phi) v = v <= j ? v : v - 1;
        r[p] = w[mapIndex[m].at(phi)];
      }
      return r;
    };
    return fromWords(Extension::Coskeletal, cells, face, degen, [](int, const Word& w) {
      std::string s;
      for (int b : w) s += static_cast<char>('0' + b);
      return s;
    });
  });
}

SSetPtr nerve(const FiniteCategory& c) {
  if (auto err = c.validate()) throw PreconditionError("invalid category '" + c.name + "': " + *err);
  std::vector<std::vector<Word>> cells(3);
  for (int a = 0; a < c.objectCount(); ++a) cells[0].push_back({a});
  for (int f = 0; f < c.arrowCount(); ++f) cells[1].push_back({f});
  for (int f = 0; f < c.arrowCount(); ++f)
    for (int g = 0; g < c.arrowCount(); ++g)
      if (c.tgt[f] == c.src[g]) cells[2].push_back({f, g});
  auto face = [&c](int m, int i, const Word& w) -> Word {
    if (m == 1) return {i == 0 ? c.tgt[w[0]] : c.src[w[0]]};
    if (i == 0) return dropAt(w, 0);
    if (i == m) return dropAt(w, m - 1);
    Word r = dropAt(w, i);
    r[i - 1] = c.comp[w[i]][w[i - 1]];
    return r;
  };
  auto degen = [&c](int m, int j, const Word& w) -> Word {
    if (m == 0) return {c.ident[w[0]]};
    int obj = j == 0 ? c.src[w[0]] : c.tgt[w[j - 1]];
    Word r = w;
    r.insert(r.begin() + j, c.ident[obj]);
    return r;
  };
  auto name = [&c](int m, const Word& w) {
    if (m == 0) return c.objects[w[0]];
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) s += "|";
      s += c.arrows[w[k]];
    }
    return s;
  };
  return fromWords(Extension::Coskeletal, cells, face, degen, name);
}

StandardKind parseStandardKind(const std::string& s) {
  static const std::map<std::string, StandardKind> kinds = {
      {"delta", StandardKind::Delta},   {"boundary", StandardKind::Boundary}, {"horn", StandardKind::Horn},
      {"spine", StandardKind::Spine},   {"jNerve", StandardKind::JNerve},     {"walkingH", StandardKind::WalkingH},
      {"rKanTwo", StandardKind::RKanTwo}};
  auto it = kinds.find(s);
  if (it == kinds.end()) throw PreconditionError("unknown standard complex '" + s + "'");
  return it->second;
}

SSetPtr buildStandard(StandardKind kind, const std::vector<int>& p) {
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw PreconditionError("expected " + std::to_string(k) + " integer parameter(s)");
  };
  switch (kind) {
    case StandardKind::Delta: need(1); return delta(p[0]);
    case StandardKind::Boundary: need(1); return boundary(p[0]);
    case StandardKind::Horn: need(2); return horn(p[0], p[1]);
    case StandardKind::Spine: need(1); return spine(p[0]);
    case StandardKind::JNerve: need(1); return jNerve(p[0]);
    case StandardKind::WalkingH: need(0); return walkingH();
    case StandardKind::RKanTwo: need(1); return rKanTwo(p[0]);
  }
  throw PreconditionError("unknown standard complex");
}

SimplicialMap nerveMap(const Functor& F, const SSetPtr& source, const SSetPtr& target) {
  if (auto err = F.validate()) throw PreconditionError("invalid functor: " + *err);
  const auto& C = *F.source;
  const auto& D = *F.target;
  Components comps(3);
  for (int m = 0; m <= 2; ++m) {
    comps[m].resize(source->size(m));
    for (int x = 0; x < source->size(m); ++x) {
      std::string nm;
      if (m == 0) {
        auto idx = std::find(C.objects.begin(), C.objects.end(), source->name(0, x)) - C.objects.begin();
        nm = D.objects[F.onObjects[idx]];
      } else {
        std::string s = source->name(m, x);
        std::size_t start = 0;
        while (true) {
          auto bar = s.find('|', start);
          std::string a = s.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
          auto idx = std::find(C.arrows.begin(), C.arrows.end(), a) - C.arrows.begin();
          if (!nm.empty()) nm += "|";
          nm += D.arrows[F.onArrows[idx]];
          if (bar == std::string::npos) break;
          start = bar + 1;
        }
      }
      auto y = target->find(m, nm);
      if (!y) throw EngineDefect("nerve map: image chain missing");
      comps[m][x] = *y;
    }
  }
  return SimplicialMap(source, target, std::move(comps));
}

SimplicialMap yonedaMap(const SSetPtr& x0, int m, int cell) {
  auto X = extendTo(x0, m);
  if (cell < 0 || cell >= X->size(m)) throw PreconditionError("cell index out of range");
  auto D = delta(m);
  Components comps(m + 1);
  for (int p = 0; p <= m; ++p) {
    comps[p].resize(D->size(p));
    for (int s = 0; s < D->size(p); ++s) {
      Word theta = D->vertices(p, s);
      comps[p][s] = X->applyOperator(theta, m, cell);
    }
  }
  auto det = determiningDegree(*D, *X);
  comps.resize(std::max(*det, 0) + 1);
  return SimplicialMap(D, X, std::move(comps));
}

SimplicialMap vertexInclusion(const SSetPtr& x, int vertex) { return yonedaMap(x, 0, vertex); }

SimplicialMap emptyInclusion(const SSetPtr& x) { return fromInitial(emptySet(), x); }

SimplicialMap deltaSubInclusion(const SSetPtr& sub, int n) {
  auto D = delta(n);
  Components comps(sub->cap() + 1);
  for (int m = 0; m <= sub->cap(); ++m) {
    comps[m].resize(sub->size(m));
    for (int x = 0; x < sub->size(m); ++x) {
      auto y = D->find(m, sub->name(m, x));
      if (!y) throw PreconditionError("not a simplicial subset of Delta^" + std::to_string(n));
      comps[m][x] = *y;
    }
  }
  return SimplicialMap(sub, D, std::move(comps));
}

SimplicialMap deltaMap(const std::vector<int>& theta, int n) {
  const int p = static_cast<int>(theta.size()) - 1;
  for (int i = 0; i <= p; ++i)
    if (theta[i] < 0 || theta[i] > n || (i && theta[i] < theta[i - 1])) throw PreconditionError("not a monotone map");
  auto P = delta(p);
  auto N = extendTo(delta(n), p);
  std::vector<int> top(n + 1);
  std::iota(top.begin(), top.end(), 0);
  const int topCell = *N->find(n, seqName(n, top));
  Components comps(p + 1);
  for (int m = 0; m <= p; ++m) {
    comps[m].resize(P->size(m));
    for (int x = 0; x < P->size(m); ++x) {
      Word v = P->vertices(m, x);
      for (int& a : v) a = theta[a];
      comps[m][x] = N->applyOperator(v, n, topCell);
    }
  }
  return SimplicialMap(P, N, std::move(comps));
}

}  // namespace sset
