#include "sset/pro.hpp"

#include <algorithm>
#include <unordered_map>

#include "sset/builders.hpp"
#include "sset/ops.hpp"

namespace sset {

namespace {

/// A map h: B -> Y with h o b = g, if one exists (first in search order).
std::optional<SimplicialMap> factorThrough(const SimplicialMap& g, const SimplicialMap& b) {
  auto star = point();
  LiftingSquare sq{b, toTerminal(g.target(), star), g, toTerminal(b.target(), star)};
  auto r = solveLifting(sq, 1);
  if (!r.exists()) return std::nullopt;
  return r.fillers.front();
}

SimplicialMap invertMap(const SimplicialMap& g) {
  const SSetPtr &X = g.source(), &Y = g.target();
  int d = g.degree();
  if (auto det = determiningDegree(*Y, *X)) d = std::max(d, *det);
  else d = std::max(d, alignForMaps(Y, X).degree);
  auto ge = g.extended(d);
  Components inv(d + 1);
  for (int m = 0; m <= d; ++m) {
    inv[m].assign(ge.target()->size(m), -1);
    for (std::size_t x = 0; x < ge.components()[m].size(); ++x) inv[m][ge(m, static_cast<int>(x))] = static_cast<int>(x);
    for (int v : inv[m])
      if (v < 0) throw PreconditionError("map is not invertible");
  }
  return SimplicialMap(ge.target(), ge.source(), std::move(inv));
}

bool sameLevels(const ProObject& a, const ProObject& b) {
  if (!(a.index() == b.index())) return false;
  for (int i = 0; i < a.index().size(); ++i)
    if (!sameObject(a.level(i), b.level(i))) return false;
  return true;
}

/// fam[m][z][a]: level-a component of the family of the m-cell z of u (u
/// materialized through d). Through `built` the cells of u are in the order of
/// the least level, as produced by underlying(); above it they are recovered
/// from degeneracies and faces.
std::vector<std::vector<std::vector<int>>> families(const ProObject& c, int built, const SSetPtr& u, int d) {
  const int n = c.index().size(), bot = c.bottom();
  auto U = extendTo(u, d);
  std::vector<SSetPtr> lv(n);
  std::vector<SimplicialMap> fromBottom(n);
  const int stored = std::min(built, d);
  for (int a = 0; a < n; ++a) {
    lv[a] = extendTo(c.level(a), d);
    fromBottom[a] = c.bond(bot, a).extended(stored);
  }
  std::vector<std::vector<std::vector<int>>> fam(d + 1);
  for (int m = 0; m <= d; ++m) {
    fam[m].resize(U->size(m), std::vector<int>(n));
    for (int z = 0; z < U->size(m); ++z) {
      if (m <= stored) {
        for (int a = 0; a < n; ++a) fam[m][z][a] = fromBottom[a](m, z);
      } else if (U->isDegenerate(m, z)) {
        const int j = U->degeneracyIndex(m, z);
        const int y = U->face(m, j, z);
        for (int a = 0; a < n; ++a) fam[m][z][a] = lv[a]->degen(m - 1, j, fam[m - 1][y][a]);
      } else {
        for (int a = 0; a < n; ++a) {
          std::vector<int> faces(m + 1);
          for (int i = 0; i <= m; ++i) faces[i] = fam[m - 1][U->face(m, i, z)][a];
          auto cells = lv[a]->cellsWithFaces(m, faces);
          if (cells.size() != 1) throw InvariantError("limit cell has no unique component above the cap");
          fam[m][z][a] = cells[0];
        }
      }
    }
  }
  return fam;
}

std::string joinNames(const std::vector<std::string>& parts) {
  if (parts.size() == 1) return parts[0];
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Index posets and pro-objects
// ---------------------------------------------------------------------------

std::optional<std::string> IndexPoset::validate() const {
  const int n = size();
  if (n == 0) return "index poset is empty";
  if (static_cast<int>(leq.size()) != n) return "order relation has wrong size";
  for (auto& row : leq)
    if (static_cast<int>(row.size()) != n) return "order relation has wrong size";
  for (int a = 0; a < n; ++a) {
    if (!leq[a][a]) return "order is not reflexive at " + elements[a];
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) return "order is not antisymmetric on " + elements[a] + ", " + elements[b];
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          return "order is not transitive on " + elements[a] + ", " + elements[b] + ", " + elements[c];
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool lower = false;
      for (int c = 0; c < n && !lower; ++c) lower = leq[c][a] && leq[c][b];
      if (!lower) return "index is not codirected: " + elements[a] + " and " + elements[b] + " have no lower bound";
    }
  return std::nullopt;
}

int IndexPoset::bottom() const {
  for (int a = 0; a < size(); ++a)
    if (std::all_of(leq[a].begin(), leq[a].end(), [](bool v) { return v; })) return a;
  throw InvariantError("index poset has no least element");
}

std::optional<int> IndexPoset::find(const std::string& name) const {
  auto it = std::find(elements.begin(), elements.end(), name);
  if (it == elements.end()) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

IndexPoset IndexPoset::tower(int n) {
  if (n < 0) throw PreconditionError("tower bound must be nonnegative");
  IndexPoset p;
  p.kind = Kind::Tower;
  p.towerBound = n;
  for (int a = 0; a <= n; ++a) p.elements.push_back(std::to_string(a));
  p.leq.assign(n + 1, std::vector<bool>(n + 1));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) p.leq[a][b] = a >= b;
  return p;
}

IndexPoset IndexPoset::single() { return tower(0); }

ProObject::ProObject(IndexPoset index, std::vector<SSetPtr> levels, std::map<std::pair<int, int>, SimplicialMap> bonds)
    : index_(std::move(index)), levels_(std::move(levels)), bonds_(std::move(bonds)) {
  if (auto err = index_.validate()) throw PreconditionError(*err);
  const int n = index_.size();
  if (static_cast<int>(levels_.size()) != n) throw PreconditionError("one level per index element is required");
  for (auto& [key, b] : bonds_) {
    auto [a, c] = key;
    if (a < 0 || c < 0 || a >= n || c >= n || !index_.leq[a][c])
      throw PreconditionError("bond given for an incomparable pair");
  }
  for (int a = 0; a < n; ++a) {
    if (!bonds_.count({a, a})) bonds_.emplace(std::make_pair(a, a), sset::identity(levels_[a]));
    for (int b = 0; b < n; ++b) {
      if (!index_.leq[a][b]) continue;
      auto it = bonds_.find({a, b});
      const std::string pair = index_.elements[a] + "<=" + index_.elements[b];
      if (it == bonds_.end()) throw PreconditionError("missing bond " + pair);
      if (!sameObject(it->second.source(), levels_[a]) || !sameObject(it->second.target(), levels_[b]))
        throw PreconditionError("bond " + pair + " has the wrong endpoints");
      if (auto err = it->second.checkSimplicial()) throw InvariantError("bond " + pair + ": " + *err);
    }
    if (!sameMap(bonds_.at({a, a}), sset::identity(levels_[a])))
      throw InvariantError("bond at " + index_.elements[a] + " is not the identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || !index_.leq[a][b] || !index_.leq[b][c]) continue;
        if (!sameMap(compose(bonds_.at({b, c}), bonds_.at({a, b})), bonds_.at({a, c})))
          throw InvariantError("bonds do not compose at " + index_.elements[a] + "<=" + index_.elements[b] +
                               "<=" + index_.elements[c]);
      }
}

const SimplicialMap& ProObject::bond(int a, int b) const {
  auto it = bonds_.find({a, b});
  if (it == bonds_.end()) throw PreconditionError("no bond between incomparable elements");
  return it->second;
}

ProPtr constantPro(const SSetPtr& x) { return std::make_shared<const ProObject>(IndexPoset::single(), std::vector{x}, std::map<std::pair<int, int>, SimplicialMap>{}); }

ProPtr towerPro(const std::vector<SSetPtr>& levels, const std::vector<SimplicialMap>& down) {
  const int n = static_cast<int>(levels.size());
  if (n == 0 || static_cast<int>(down.size()) != n - 1) throw PreconditionError("a tower needs one bond per step");
  std::map<std::pair<int, int>, SimplicialMap> bonds;
  for (int a = 1; a < n; ++a) {
    bonds.emplace(std::make_pair(a, a - 1), down[a - 1]);
    for (int b = a - 2; b >= 0; --b) bonds.emplace(std::make_pair(a, b), compose(down[b], bonds.at({a, b + 1})));
  }
  return std::make_shared<const ProObject>(IndexPoset::tower(n - 1), levels, std::move(bonds));
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

ProMap ProMap::fromBottom(ProPtr source, ProPtr target, const SimplicialMap& bottom) {
  const int bi = source->bottom(), bj = target->bottom();
  if (!sameObject(bottom.source(), source->bottomLevel()) || !sameObject(bottom.target(), target->bottomLevel()))
    throw PreconditionError("map does not join the least levels");
  ProMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.bottom_ = bottom;
  const auto& I = f.source_->index();
  for (int j = 0; j < f.target_->index().size(); ++j) {
    auto gj = j == bj ? bottom : compose(f.target_->bond(bj, j), bottom);
    std::optional<Germ> germ;
    for (int i = 0; i < I.size() && !germ; ++i) {
      if (i == bi) {
        germ = Germ{i, gj};
      } else if (auto h = factorThrough(gj, f.source_->bond(bi, i))) {
        germ = Germ{i, *h};
      }
    }
    f.germs_.push_back(std::move(*germ));
  }
  return f;
}

ProMap ProMap::level(ProPtr source, ProPtr target, std::vector<SimplicialMap> components) {
  if (!(source->index() == target->index())) throw PreconditionError("level maps need a shared index");
  const auto& I = source->index();
  if (static_cast<int>(components.size()) != I.size()) throw PreconditionError("one component per index element");
  for (int a = 0; a < I.size(); ++a) {
    if (!sameObject(components[a].source(), source->level(a)) || !sameObject(components[a].target(), target->level(a)))
      throw PreconditionError("component at " + I.elements[a] + " has the wrong endpoints");
    for (int b = 0; b < I.size(); ++b) {
      if (a == b || !I.leq[a][b]) continue;
      if (!sameMap(compose(target->bond(a, b), components[a]), compose(components[b], source->bond(a, b))))
        throw InvariantError("components do not commute with the bond " + I.elements[a] + "<=" + I.elements[b]);
    }
  }
  const int bot = I.bottom();
  auto f = fromBottom(source, target, components[bot]);
  f.components_ = std::move(components);
  return f;
}

ProMap compose(const ProMap& g, const ProMap& f) {
  if (f.target() != g.source() && !sameLevels(*f.target(), *g.source()))
    throw PreconditionError("compose: pro-objects do not match");
  if (f.isLevel() && g.isLevel() && f.source()->index() == g.target()->index()) {
    std::vector<SimplicialMap> comps;
    for (std::size_t a = 0; a < f.components().size(); ++a) comps.push_back(compose(g.components()[a], f.components()[a]));
    return ProMap::level(f.source(), g.target(), std::move(comps));
  }
  return ProMap::fromBottom(f.source(), g.target(), compose(g.bottom(), f.bottom()));
}

ProMap identity(const ProPtr& c) {
  std::vector<SimplicialMap> comps;
  for (auto& x : c->levels()) comps.push_back(identity(x));
  return ProMap::level(c, c, std::move(comps));
}

bool sameProMap(const ProMap& f, const ProMap& g) { return sameMap(f.bottom(), g.bottom()); }

bool isProIsomorphism(const ProMap& f) { return isIsomorphism(f.bottom()); }

ProMap inverse(const ProMap& f) {
  if (!isProIsomorphism(f)) throw PreconditionError("map is not a pro-isomorphism");
  return ProMap::fromBottom(f.target(), f.source(), invertMap(f.bottom()));
}

// A finite codirected index has a least element; the colimit over the source
// index is attained there and so is the limit over the target index.
std::vector<ProMap> proHom(const ProPtr& c, const ProPtr& d) {
  std::vector<ProMap> out;
  for (auto& g : homSet(c->bottomLevel(), d->bottomLevel())) out.push_back(ProMap::fromBottom(c, d, g));
  return out;
}

LevelRepresentation levelRepresentation(const ProMap& f) {
  if (f.isLevel()) return {f, identity(f.source()), identity(f.target())};
  const ProObject &C = *f.source(), &D = *f.target();
  const auto &I = C.index(), &J = D.index();
  const int bi = I.bottom(), bj = J.bottom();
  struct Pair {
    int i, j;
    SimplicialMap h;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < J.size(); ++j) {
      auto gj = compose(D.bond(bj, j), f.bottom());
      if (i == bi) {
        pairs.push_back({i, j, gj});
      } else if (auto h = factorThrough(gj, C.bond(bi, i))) {
        pairs.push_back({i, j, *h});
      }
    }
  const int n = static_cast<int>(pairs.size());
  IndexPoset K;
  K.leq.assign(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    K.elements.push_back(I.elements[pairs[a].i] + "|" + J.elements[pairs[a].j]);
    for (int b = 0; b < n; ++b) {
      auto &p = pairs[a], &q = pairs[b];
      K.leq[a][b] = I.leq[p.i][q.i] && J.leq[p.j][q.j] &&
                    (a == b || sameMap(compose(D.bond(p.j, q.j), p.h), compose(q.h, C.bond(p.i, q.i))));
    }
  }
  if (auto err = K.validate()) throw EngineDefect("common index of a level representation: " + *err);
  std::vector<SSetPtr> src, tgt;
  std::map<std::pair<int, int>, SimplicialMap> sb, tb;
  std::vector<SimplicialMap> comps;
  for (int a = 0; a < n; ++a) {
    src.push_back(C.level(pairs[a].i));
    tgt.push_back(D.level(pairs[a].j));
    comps.push_back(pairs[a].h);
    for (int b = 0; b < n; ++b)
      if (a != b && K.leq[a][b]) {
        sb.emplace(std::make_pair(a, b), C.bond(pairs[a].i, pairs[b].i));
        tb.emplace(std::make_pair(a, b), D.bond(pairs[a].j, pairs[b].j));
      }
  }
  auto S = std::make_shared<const ProObject>(K, src, std::move(sb));
  auto T = std::make_shared<const ProObject>(K, tgt, std::move(tb));
  LevelRepresentation r{ProMap::level(S, T, std::move(comps)), ProMap::fromBottom(S, f.source(), identity(C.bottomLevel())),
                        ProMap::fromBottom(T, f.target(), identity(D.bottomLevel()))};
  if (!sameProMap(compose(f, r.sourceIso), compose(r.targetIso, r.level)))
    throw EngineDefect("level representation does not reproduce the map");
  return r;
}

MonoVerdict isProMono(const ProMap& f, MonoMode mode) {
  auto u = underlyingMap(f);
  const bool direct = u.injective();
  auto lifted = monoByLifting(f.bottom());
  if (direct != lifted.holds)
    throw EngineDefect("mono verdicts disagree: injectivity says " + std::string(direct ? "yes" : "no") +
                       ", lifting says " + (lifted.holds ? "yes" : "no"));
  MonoVerdict v;
  v.holds = direct;
  if (mode == MonoMode::Lifting) {
    v.witness = lifted.witness;
    v.detail = lifted.detail;
  } else if (!direct) {
    for (int m = 0; m <= u.degree() && v.detail.empty(); ++m) {
      std::unordered_map<int, int> seen;
      for (std::size_t x = 0; x < u.components()[m].size() && v.detail.empty(); ++x) {
        auto [it, fresh] = seen.emplace(u(m, static_cast<int>(x)), static_cast<int>(x));
        if (!fresh)
          v.detail = "cells '" + u.source()->name(m, it->second) + "' and '" + u.source()->name(m, static_cast<int>(x)) +
                     "' of degree " + std::to_string(m) + " have the same image";
      }
    }
  }
  return v;
}

MonoRepresentation monoLevelRepresentation(const ProMap& f) {
  auto v = isProMono(f, MonoMode::Lifting);
  if (!v.holds) {
    std::string w = v.witness ? v.witness->generator : "";
    throw PreconditionError("not a monomorphism (witness " + w + "): " + v.detail);
  }
  const ProObject& D = *f.target();
  const auto& J = D.index();
  const int bj = J.bottom();
  const int n = J.size();
  std::vector<Image> ims;
  for (int j = 0; j < n; ++j) ims.push_back(image(j == bj ? f.bottom() : compose(D.bond(bj, j), f.bottom())));
  std::vector<SSetPtr> levels;
  for (auto& im : ims) levels.push_back(im.object);
  std::map<std::pair<int, int>, SimplicialMap> bonds;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !J.leq[a][b]) continue;
      const SSetPtr &A = ims[a].object, &B = ims[b].object;
      int d = std::max(A->cap(), B->cap());
      if (auto det = determiningDegree(*A, *B)) d = std::max(d, *det);
      auto ia = ims[a].inclusion.extended(d), ib = ims[b].inclusion.extended(d);
      auto h = D.bond(a, b).extended(d);
      Components comps(d + 1);
      for (int m = 0; m <= d; ++m) {
        std::unordered_map<int, int> back;
        for (std::size_t y = 0; y < ib.components()[m].size(); ++y) back.emplace(ib(m, static_cast<int>(y)), static_cast<int>(y));
        for (std::size_t x = 0; x < ia.components()[m].size(); ++x) {
          auto it = back.find(h(m, ia(m, static_cast<int>(x))));
          if (it == back.end()) throw EngineDefect("bond does not preserve images");
          comps[m].push_back(it->second);
        }
      }
      bonds.emplace(std::make_pair(a, b), SimplicialMap(ia.source(), ib.source(), std::move(comps)));
    }
  auto S = std::make_shared<const ProObject>(J, levels, std::move(bonds));
  std::vector<SimplicialMap> incl;
  for (auto& im : ims) incl.push_back(im.inclusion);
  MonoRepresentation r{ProMap::level(S, f.target(), std::move(incl)),
                       ProMap::fromBottom(f.source(), S, ims[bj].corestriction)};
  if (!sameProMap(compose(r.level, r.comparison), f)) throw EngineDefect("mono representation does not factor the map");
  if (!isProIsomorphism(r.comparison)) throw EngineDefect("comparison to the repaired source is not an isomorphism");
  auto back = inverse(r.comparison);
  if (!sameProMap(compose(back, r.comparison), identity(f.source())) || !sameProMap(compose(r.comparison, back), identity(S)))
    throw EngineDefect("comparison inverse does not compose to identities");
  return r;
}

ProCompletion proCompleteLean(const SSetPtr& x, int towerBound) {
  if (towerBound < 0) throw PreconditionError("tower bound must be nonnegative");
  ProCompletion r;
  r.bound = towerBound;
  std::vector<SSetPtr> levels;
  std::vector<SimplicialMap> down;
  for (int k = 0; k <= towerBound; ++k) {
    levels.push_back(coskeleton(x, k));
    r.units.push_back(coskeletonUnit(x, k));
    if (k > 0) down.push_back(coskeletonUnit(levels[k], k - 1));
  }
  r.tower = towerPro(levels, down);
  r.coskeletalDegree = detectCoskeletalDegree(x);
  r.stabilized = r.coskeletalDegree && *r.coskeletalDegree <= towerBound;
  return r;
}

MappingSpace proMapSpace(const ProPtr& c, const SSetPtr& t, int minCap) {
  SSetPtr tc;
  try {
    tc = asCoskeletal(t);
  } catch (const CapError&) {
    throw PreconditionError("test object is not lean");
  }
  return mappingSpace(c->bottomLevel(), tc, minCap);
}

std::string toString(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

ProWeReport isProWeakEquivalence(const ProMap& f, const std::vector<SSetPtr>& tests, Flavor flavor) {
  ProWeReport r;
  bool unknown = false, no = false;
  for (std::size_t k = 0; k < tests.size(); ++k) {
    const auto& t = tests[k];
    const bool fibrant = flavor == Flavor::KQ ? isKanComplex(t) : isQuasiCategory(t);
    if (!fibrant)
      throw PreconditionError("test object " + std::to_string(k) + " is not " +
                              (flavor == Flavor::KQ ? "a Kan complex" : "a quasi-category"));
    const std::string label = "test " + std::to_string(k) + ": ";
    try {
      auto mc = proMapSpace(f.source(), t);
      auto md = proMapSpace(f.target(), t, mc.cap);
      if (md.cap != mc.cap) mc = proMapSpace(f.source(), t, md.cap);
      auto pre = precompose(f.bottom(), md, mc);
      bool ok = flavor == Flavor::KQ ? isWeakEquivalenceKan(pre) : isDKEquivalenceQCat(pre).verdict;
      no = no || !ok;
      r.detail.push_back(label + (ok ? "restriction of mapping spaces is an equivalence"
                                     : "restriction of mapping spaces is not an equivalence"));
    } catch (const BudgetExceeded&) {
      unknown = true;
      r.detail.push_back(label + "budget exhausted");
    }
  }
  r.verdict = no ? Tristate::No : unknown ? Tristate::Unknown : Tristate::Yes;
  return r;
}

// ---------------------------------------------------------------------------
// Underlying objects
// ---------------------------------------------------------------------------

SSetPtr underlying(const ProPtr& c) {
  const int n = c->index().size(), bot = c->bottom();
  bool allCosk = true;
  int cap = 0;
  for (auto& x : c->levels()) {
    allCosk = allCosk && x->coskeletal();
    cap = std::max(cap, x->cap());
  }
  const int D = allCosk ? cap : cap + 1;
  auto B = extendTo(c->bottomLevel(), D);
  std::vector<SSetPtr> lv(n);
  std::vector<SimplicialMap> fb(n);
  for (int a = 0; a < n; ++a) {
    lv[a] = extendTo(c->level(a), D);
    fb[a] = c->bond(bot, a).extended(D);
  }
  std::vector<std::vector<std::vector<int>>> fam(D + 1);
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> idx(D + 1);
  for (int m = 0; m <= D; ++m)
    for (int x = 0; x < B->size(m); ++x) {
      std::vector<int> v(n);
      for (int a = 0; a < n; ++a) v[a] = fb[a](m, x);
      idx[m].emplace(v, static_cast<int>(fam[m].size()));
      fam[m].push_back(std::move(v));
    }
  auto lookup = [&](int m, const std::vector<int>& v) {
    auto it = idx[m].find(v);
    if (it == idx[m].end()) throw InvariantError("limit is not closed under the simplicial operators");
    return it->second;
  };
  std::vector<Level> levels(D + 1);
  for (int m = 0; m <= D; ++m) {
    Level& L = levels[m];
    const int cnt = static_cast<int>(fam[m].size());
    for (auto& v : fam[m]) {
      std::vector<std::string> parts;
      for (int a = 0; a < n; ++a) parts.push_back(lv[a]->name(m, v[a]));
      L.names.push_back(joinNames(parts));
    }
    if (m > 0) {
      L.faces.assign(m + 1, std::vector<int>(cnt));
      for (int i = 0; i <= m; ++i)
        for (int z = 0; z < cnt; ++z) {
          std::vector<int> v(n);
          for (int a = 0; a < n; ++a) v[a] = lv[a]->face(m, i, fam[m][z][a]);
          L.faces[i][z] = lookup(m - 1, v);
        }
    }
    if (m < D) {
      L.degens.assign(m + 1, std::vector<int>(cnt));
      for (int j = 0; j <= m; ++j)
        for (int z = 0; z < cnt; ++z) {
          std::vector<int> v(n);
          for (int a = 0; a < n; ++a) v[a] = lv[a]->degen(m, j, fam[m][z][a]);
          L.degens[j][z] = lookup(m + 1, v);
        }
    }
  }
  auto U = SimplicialSet::make(allCosk ? Extension::Coskeletal : Extension::Skeletal, std::move(levels));
  if (!allCosk && U->nondegenerateCount(D) > 0)
    throw CapError("underlying object is not determined by a finite skeleton", D + 1);
  return U;
}

SimplicialMap underlyingMap(const ProMap& f) {
  auto UC = underlying(f.source()), UD = underlying(f.target());
  auto al = alignForMaps(UC, UD);
  const int d = std::max({al.degree, UC->cap(), UD->cap()});
  auto S = extendTo(al.source, d), T = extendTo(al.target, d);
  auto famC = families(*f.source(), UC->cap(), S, d);
  auto famD = families(*f.target(), UD->cap(), T, d);
  const int nj = f.target()->index().size();
  std::vector<SimplicialMap> germ;
  for (auto& g : f.germs()) germ.push_back(g.map.extended(d));
  Components comps(d + 1);
  for (int m = 0; m <= d; ++m) {
    std::unordered_map<std::vector<int>, int, VecHash> idx;
    for (std::size_t y = 0; y < famD[m].size(); ++y) idx.emplace(famD[m][y], static_cast<int>(y));
    for (auto& x : famC[m]) {
      std::vector<int> v(nj);
      for (int j = 0; j < nj; ++j) v[j] = germ[j](m, x[f.germs()[j].level]);
      auto it = idx.find(v);
      if (it == idx.end()) throw InvariantError("germ family is not compatible");
      comps[m].push_back(it->second);
    }
  }
  return SimplicialMap(S, T, std::move(comps));
}

}  // namespace sset
