#include "sset/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sset/builders.hpp"

namespace sset {

// ---------------------------------------------------------------------------
// Search engine
// ---------------------------------------------------------------------------

namespace {

struct Engine {
  const SimplicialSet& S;
  const SimplicialSet& T;
  const int D;
  const MapSearch& spec;
  const std::function<bool(const Components&)>& visit;

  Components f;
  std::vector<std::pair<int, int>> order;
  std::vector<std::vector<char>> used;
  std::uint64_t count = 0;
  bool stop = false;

  Engine(const SimplicialSet& s, const SimplicialSet& t, int d, const MapSearch& sp,
         const std::function<bool(const Components&)>& v)
      : S(s), T(t), D(d), spec(sp), visit(v) {
    f.resize(D + 1);
    used.resize(D + 1);
    for (int m = 0; m <= D; ++m) {
      f[m].assign(S.size(m), -1);
      if (spec.injective) used[m].assign(T.size(m), 0);
    }
    buildOrder();
  }

  // A cell is placed as soon as all of its faces are placed, so that every
  // constraint is checked at the earliest point. Ready cells of higher degree
  // go first; vertices are taken in index order when nothing else is ready.
  void buildOrder() {
    std::vector<std::vector<int>> missing(D + 1);
    std::vector<std::vector<std::vector<int>>> cofaces(D + 1);
    for (int m = 0; m <= D; ++m) {
      missing[m].assign(S.size(m), m == 0 ? 0 : m + 1);
      cofaces[m].resize(S.size(m));
    }
    for (int m = 1; m <= D; ++m)
      for (int x = 0; x < S.size(m); ++x)
        for (int i = 0; i <= m; ++i) cofaces[m - 1][S.face(m, i, x)].push_back(x);
    std::set<std::pair<int, int>> ready;
    auto place = [&](int m, int x) {
      order.emplace_back(m, x);
      if (m == D) return;
      for (int y : cofaces[m][x])
        if (--missing[m + 1][y] == 0) ready.emplace(-(m + 1), y);
    };
    for (int v = 0; v < S.size(0); ++v) {
      place(0, v);
      while (!ready.empty()) {
        auto c = *ready.begin();
        ready.erase(ready.begin());
        place(-c.first, c.second);
      }
    }
  }

  bool ok(int m, int x, int y) const {
    if (!spec.fixed.empty() && spec.fixed[m][x] >= 0 && spec.fixed[m][x] != y) return false;
    if (spec.projTarget && (*spec.projTarget)[m][y] != (*spec.projValue)[m][x]) return false;
    if (spec.injective && used[m][y]) return false;
    return true;
  }

  void tryValue(std::size_t k, int m, int x, int y) {
    charge();
    if (!ok(m, x, y)) return;
    f[m][x] = y;
    if (spec.injective) used[m][y] = 1;
    step(k + 1);
    if (spec.injective) used[m][y] = 0;
    f[m][x] = -1;
  }

  void step(std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      ++count;
      if (!visit(f)) stop = true;
      return;
    }
    const auto [m, x] = order[k];
    if (m == 0) {
      if (!spec.fixed.empty() && spec.fixed[0][x] >= 0) {
        tryValue(k, 0, x, spec.fixed[0][x]);
        return;
      }
      for (int y = 0; y < T.size(0) && !stop; ++y) tryValue(k, 0, x, y);
      return;
    }
    if (S.isDegenerate(m, x)) {
      int j = S.degeneracyIndex(m, x);
      tryValue(k, m, x, T.degen(m - 1, j, f[m - 1][S.face(m, j, x)]));
      return;
    }
    std::vector<int> fc(m + 1);
    for (int i = 0; i <= m; ++i) fc[i] = f[m - 1][S.face(m, i, x)];
    if (!spec.fixed.empty() && spec.fixed[m][x] >= 0) {
      int y = spec.fixed[m][x];
      for (int i = 0; i <= m; ++i)
        if (T.face(m, i, y) != fc[i]) return;
      tryValue(k, m, x, y);
      return;
    }
    for (int y : T.cellsWithFaces(m, fc)) {
      if (stop) return;
      tryValue(k, m, x, y);
    }
  }
};

void requireDegrees(const Components& c, int D, const char* what) {
  if (!c.empty() && static_cast<int>(c.size()) < D + 1)
    throw PreconditionError(std::string("map search: ") + what + " constraint does not reach the search degree");
}

Components flatten(const Components& c) {
  Components out(1);
  for (auto& row : c) {
    out[0].push_back(-2);
    out[0].insert(out[0].end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

std::uint64_t enumerateMaps(const MapSearch& spec, const std::function<bool(const Components&)>& visit) {
  auto al = alignForMaps(spec.source, spec.target);
  const int D = std::max(al.degree, spec.degree);
  auto S = extendTo(al.source, D);
  auto T = extendTo(al.target, D);
  requireDegrees(spec.fixed, D, "fixed-value");
  if (spec.projTarget) {
    requireDegrees(*spec.projTarget, D, "projection");
    requireDegrees(*spec.projValue, D, "projection");
  }
  Engine e(*S, *T, D, spec, visit);
  e.step(0);
  return e.count;
}

namespace {
int searchDegree(const SSetPtr& s, const SSetPtr& t) { return alignForMaps(s, t).degree; }

Components fixedFrom(const SimplicialMap& i, const SimplicialMap& top, int D, bool& consistent) {
  auto ie = i.extended(D);
  auto te = top.extended(D);
  Components fixed(D + 1);
  consistent = true;
  for (int m = 0; m <= D; ++m) {
    fixed[m].assign(ie.target()->size(m), -1);
    for (int a = 0; a < ie.source()->size(m); ++a) {
      int& slot = fixed[m][ie(m, a)];
      if (slot >= 0 && slot != te(m, a)) consistent = false;
      slot = te(m, a);
    }
  }
  return fixed;
}
}  // namespace

std::vector<SimplicialMap> homSet(const SSetPtr& x, const SSetPtr& y) {
  auto al = alignForMaps(x, y);
  std::vector<SimplicialMap> out;
  MapSearch spec{al.source, al.target, al.degree, {}, nullptr, nullptr, false};
  enumerateMaps(spec, [&](const Components& c) {
    out.emplace_back(al.source, al.target, c);
    return true;
  });
  return out;
}

std::uint64_t countMaps(const SSetPtr& x, const SSetPtr& y) {
  MapSearch spec{x, y, -1, {}, nullptr, nullptr, false};
  return enumerateMaps(spec, [](const Components&) { return true; });
}

std::uint64_t countTruncatedMaps(const SSetPtr& x, const SSetPtr& y, int n) {
  MapSearch spec{truncate(x, n), coskeleton(y, n), n, {}, nullptr, nullptr, false};
  return enumerateMaps(spec, [](const Components&) { return true; });
}

std::optional<SimplicialMap> findIsomorphism(const SSetPtr& x, const SSetPtr& y) {
  auto u = unifyPolicies({x, y}, x->coskeletal() || y->coskeletal());
  const int D = std::max(u[0]->cap(), u[1]->cap());
  auto S = extendTo(u[0], D), T = extendTo(u[1], D);
  for (int m = 0; m <= D; ++m)
    if (S->size(m) != T->size(m)) return std::nullopt;
  std::optional<SimplicialMap> found;
  MapSearch spec{S, T, D, {}, nullptr, nullptr, true};
  enumerateMaps(spec, [&](const Components& c) {
    found.emplace(S, T, c);
    return false;
  });
  return found;
}

bool isIsomorphism(const SimplicialMap& f) {
  int D = std::max(f.source()->cap(), f.target()->cap());
  if (f.source()->extension() != f.target()->extension()) D += 2;
  auto e = f.extended(D);
  for (int m = 0; m <= D; ++m) {
    if (e.source()->size(m) != e.target()->size(m)) return false;
    std::vector<char> seen(e.target()->size(m), 0);
    for (int y : e.components()[m]) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Lifting
// ---------------------------------------------------------------------------

std::optional<std::string> LiftingSquare::checkCommutes() const {
  if (!sameObject(left.source(), top.source())) return "top and left have different domains";
  if (!sameObject(left.target(), bottom.source())) return "bottom does not start at the codomain of the left map";
  if (!sameObject(top.target(), right.source())) return "top does not land in the domain of the right map";
  if (!sameObject(bottom.target(), right.target())) return "bottom and right have different codomains";
  if (!sameMap(compose(right, top), compose(bottom, left))) return "square does not commute";
  return std::nullopt;
}

LiftingResult solveLifting(const LiftingSquare& sq, std::size_t maxFillers) {
  if (auto err = sq.checkCommutes()) throw PreconditionError("lifting square: " + *err);
  const SSetPtr& B = sq.left.target();
  const SSetPtr& X = sq.right.source();
  const SSetPtr& Y = sq.right.target();
  const int D = std::max(searchDegree(B, X), searchDegree(B, Y));
  auto al = alignForMaps(B, X);
  auto S = extendTo(al.source, D), T = extendTo(al.target, D);
  bool consistent;
  Components fixed = fixedFrom(sq.left, sq.top, D, consistent);
  LiftingResult r;
  if (!consistent) return r;
  Components pc = sq.right.extended(D).components();
  Components bc = sq.bottom.extended(D).components();
  MapSearch spec{S, T, D, std::move(fixed), &pc, &bc, false};
  enumerateMaps(spec, [&](const Components& c) {
    r.fillers.emplace_back(S, T, c);
    return maxFillers == 0 || r.fillers.size() < maxFillers;
  });
  return r;
}

bool hasLift(const LiftingSquare& sq) { return solveLifting(sq, 1).exists(); }

GeneratorFamily parseGeneratorFamily(const std::string& s) {
  static const std::map<std::string, GeneratorFamily> m = {
      {"kanHorns", GeneratorFamily::KanHorns},       {"boundaries", GeneratorFamily::Boundaries},
      {"innerHorns", GeneratorFamily::InnerHorns},   {"joyalM", GeneratorFamily::JoyalM},
      {"rKanTwoFamily", GeneratorFamily::RKanTwoFamily}, {"twoToPoint", GeneratorFamily::TwoToPoint}};
  auto it = m.find(s);
  if (it == m.end()) throw PreconditionError("unknown generating set '" + s + "'");
  return it->second;
}

std::string toString(GeneratorFamily g) {
  switch (g) {
    case GeneratorFamily::KanHorns: return "kanHorns";
    case GeneratorFamily::Boundaries: return "boundaries";
    case GeneratorFamily::InnerHorns: return "innerHorns";
    case GeneratorFamily::JoyalM: return "joyalM";
    case GeneratorFamily::RKanTwoFamily: return "rKanTwoFamily";
    case GeneratorFamily::TwoToPoint: return "twoToPoint";
  }
  return "?";
}

std::vector<Generator> GeneratingSet::generators() const {
  std::vector<Generator> out;
  auto hornName = [](int m, int k) { return "horn(" + std::to_string(m) + "," + std::to_string(k) + ")"; };
  switch (family) {
    case GeneratorFamily::KanHorns:
    case GeneratorFamily::InnerHorns:
    case GeneratorFamily::JoyalM:
      for (int m = 1; m <= dimensionCap; ++m)
        for (int k = 0; k <= m; ++k) {
          if (family != GeneratorFamily::KanHorns && (k == 0 || k == m)) continue;
          out.push_back({hornName(m, k), deltaSubInclusion(horn(m, k), m)});
        }
      if (family == GeneratorFamily::JoyalM) out.push_back({"{0}->H", vertexInclusion(walkingH(), 0)});
      break;
    case GeneratorFamily::Boundaries:
      for (int m = 0; m <= dimensionCap; ++m)
        out.push_back({"boundary(" + std::to_string(m) + ")", deltaSubInclusion(boundary(m), m)});
      break;
    case GeneratorFamily::RKanTwoFamily:
      for (int n = 0; n <= std::min(dimensionCap, 2); ++n)
        out.push_back({"rKanTwo(" + std::to_string(n) + ")->*", toTerminal(rKanTwo(n), point())});
      break;
    case GeneratorFamily::TwoToPoint:
      out.push_back({"2->*", toTerminal(discreteSet(2), point())});
      break;
  }
  return out;
}

LiftingVerdict rlpAgainst(const SimplicialMap& p, const Generator& g) {
  const SimplicialMap& i = g.map;
  const SSetPtr& A = i.source();
  const SSetPtr& B = i.target();
  const SSetPtr& X = p.source();
  const SSetPtr& Y = p.target();
  LiftingVerdict v;
  auto alTop = alignForMaps(A, X);
  MapSearch topSpec{alTop.source, alTop.target, alTop.degree, {}, nullptr, nullptr, false};
  const int Db = searchDegree(B, Y);
  enumerateMaps(topSpec, [&](const Components& tc) {
    SimplicialMap top(alTop.source, alTop.target, tc);
    auto pTop = compose(p, top);
    bool consistent;
    Components fixed = fixedFrom(i, pTop, Db, consistent);
    if (!consistent) return true;
    auto alB = alignForMaps(B, Y);
    auto Bs = extendTo(alB.source, Db), Ys = extendTo(alB.target, Db);
    MapSearch botSpec{Bs, Ys, Db, std::move(fixed), nullptr, nullptr, false};
    enumerateMaps(botSpec, [&](const Components& bc) {
      SimplicialMap bottom(Bs, Ys, bc);
      LiftingSquare sq{i, p, top, bottom};
      ++v.squaresChecked;
      if (!hasLift(sq)) {
        v.holds = false;
        v.witness = LiftingWitness{g.name, sq};
        return false;
      }
      return true;
    });
    return v.holds;
  });
  return v;
}

LiftingVerdict hasRLP(const SimplicialMap& p, const GeneratingSet& gens) {
  LiftingVerdict total;
  for (auto& g : gens.generators()) {
    auto v = rlpAgainst(p, g);
    total.squaresChecked += v.squaresChecked;
    if (!v.holds) {
      total.holds = false;
      total.witness = v.witness;
      return total;
    }
  }
  return total;
}

LiftingVerdict hasLLP(const SimplicialMap& i, const GeneratingSet& gens) {
  LiftingVerdict total;
  for (auto& g : gens.generators()) {
    auto v = rlpAgainst(g.map, Generator{"left", i});
    total.squaresChecked += v.squaresChecked;
    if (!v.holds) {
      total.holds = false;
      total.witness = v.witness;
      if (total.witness) total.witness->generator = g.name;
      return total;
    }
  }
  return total;
}

int sweepBound(const SimplicialMap& p) {
  auto cs = detectCoskeletalDegree(p.source());
  auto ct = detectCoskeletalDegree(p.target());
  if (!cs || !ct) throw PreconditionError("horn sweep needs lean source and target");
  return std::max(*cs, *ct) + 2;
}

MapKind parseMapKind(const std::string& s) {
  static const std::map<std::string, MapKind> m = {{"kanFibration", MapKind::KanFibration},
                                                   {"trivialFibration", MapKind::TrivialFibration},
                                                   {"innerFibration", MapKind::InnerFibration},
                                                   {"categoricalFibration", MapKind::CategoricalFibration},
                                                   {"monomorphism", MapKind::Monomorphism}};
  auto it = m.find(s);
  if (it == m.end()) throw PreconditionError("unknown map kind '" + s + "'");
  return it->second;
}

std::string toString(MapKind k) {
  switch (k) {
    case MapKind::KanFibration: return "kanFibration";
    case MapKind::TrivialFibration: return "trivialFibration";
    case MapKind::InnerFibration: return "innerFibration";
    case MapKind::CategoricalFibration: return "categoricalFibration";
    case MapKind::Monomorphism: return "monomorphism";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> monotoneMaps(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n + 1);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos > n) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// The map A -> R_n 2 classifying phi: A_n -> 2.
SimplicialMap classifyingMap(const SSetPtr& a0, int n, const std::vector<int>& phi) {
  auto R = rKanTwo(n);
  auto A = extendTo(a0, n);
  Components comps(n + 1);
  for (int m = 0; m <= n; ++m) {
    auto thetas = monotoneMaps(n, m);
    comps[m].resize(A->size(m));
    for (int x = 0; x < A->size(m); ++x) {
      std::string bits;
      for (auto& th : thetas) bits += static_cast<char>('0' + phi[A->applyOperator(th, m, x)]);
      comps[m][x] = *R->find(m, bits);
    }
  }
  auto al = alignForMaps(A, R);
  comps.resize(al.degree + 1);
  return SimplicialMap(extendTo(al.source, al.degree), extendTo(R, al.degree), std::move(comps));
}

}  // namespace

MapClassification monoByLifting(const SimplicialMap& f) {
  MapClassification r;
  r.holds = true;
  const int N = f.source()->cap();
  auto fe = f.extended(N);
  auto star = point();
  for (int n = 0; n <= N && r.holds; ++n) {
    const int na = fe.source()->size(n);
    if (n <= 2) {
      auto toStar = toTerminal(rKanTwo(n), star);
      for (int a = 0; a < na && r.holds; ++a) {
        std::vector<int> phi(na, 0);
        phi[a] = 1;
        auto top = classifyingMap(fe.source(), n, phi);
        auto bottom = toTerminal(fe.target(), star);
        LiftingSquare sq{f, toStar, top, bottom};
        if (!hasLift(sq)) {
          r.holds = false;
          r.witness = LiftingWitness{"rKanTwo(" + std::to_string(n) + ")->*", sq};
          r.detail = "indicator of cell '" + fe.source()->name(n, a) + "' in degree " + std::to_string(n) +
                     " does not extend along the map";
        }
      }
    } else {
      // degree n only: the map of discrete sets A_n -> B_n against 2 -> *
      auto An = discreteSet(na), Bn = discreteSet(fe.target()->size(n));
      Components c(2);
      c[0] = fe.components()[n];
      c[1] = fe.components()[n];
      SimplicialMap fn(An, Bn, c);
      auto two = discreteSet(2);
      auto toStar = toTerminal(two, star);
      for (int a = 0; a < na && r.holds; ++a) {
        Components t(2);
        t[0].assign(na, 0);
        t[0][a] = 1;
        t[1] = t[0];
        SimplicialMap top(An, two, t);
        LiftingSquare sq{fn, toStar, top, toTerminal(Bn, star)};
        if (!hasLift(sq)) {
          r.holds = false;
          r.witness = LiftingWitness{"2->* in degree " + std::to_string(n), sq};
          r.detail = "indicator of cell '" + fe.source()->name(n, a) + "' in degree " + std::to_string(n) +
                     " does not extend along the map";
        }
      }
    }
  }
  if (r.holds) r.detail = "every indicator lifts in degrees 0.." + std::to_string(N);
  return r;
}

bool isKanComplex(const SSetPtr& x) {
  if (auto c = x->cachedProperty("kan")) return *c != 0;
  bool v = classifyMap(toTerminal(x, point()), MapKind::KanFibration).holds;
  x->cacheProperty("kan", v);
  return v;
}

bool isQuasiCategory(const SSetPtr& x) {
  if (auto c = x->cachedProperty("qcat")) return *c != 0;
  bool v = classifyMap(toTerminal(x, point()), MapKind::InnerFibration).holds;
  x->cacheProperty("qcat", v);
  return v;
}

MapClassification classifyMap(const SimplicialMap& p, MapKind kind) {
  MapClassification r;
  auto fromVerdict = [&](const LiftingVerdict& v) {
    r.holds = v.holds;
    r.witness = v.witness;
    r.detail = std::to_string(v.squaresChecked) + " squares checked";
  };
  switch (kind) {
    case MapKind::KanFibration:
      fromVerdict(hasRLP(p, {GeneratorFamily::KanHorns, sweepBound(p)}));
      break;
    case MapKind::TrivialFibration:
      fromVerdict(hasRLP(p, {GeneratorFamily::Boundaries, sweepBound(p)}));
      break;
    case MapKind::InnerFibration:
      fromVerdict(hasRLP(p, {GeneratorFamily::InnerHorns, sweepBound(p)}));
      break;
    case MapKind::CategoricalFibration:
      if (!isQuasiCategory(p.source()) || !isQuasiCategory(p.target()))
        throw PreconditionError("categorical fibrations are classified between quasi-categories only");
      fromVerdict(hasRLP(p, {GeneratorFamily::JoyalM, sweepBound(p)}));
      break;
    case MapKind::Monomorphism: {
      r = monoByLifting(p);
      bool direct = p.injective();
      if (direct != r.holds) throw EngineDefect("lifting-based and degreewise monomorphism tests disagree");
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Mapping spaces
// ---------------------------------------------------------------------------

namespace {
std::vector<int> codegeneracy(int n, int j) {
  std::vector<int> t(n + 2);
  for (int k = 0; k <= n + 1; ++k) t[k] = k <= j ? k : k - 1;
  return t;
}
std::vector<int> coface(int n, int i) {
  std::vector<int> t;
  for (int k = 0; k <= n; ++k)
    if (k != i) t.push_back(k);
  return t;
}

Components precomposeDelta(const Components& f, const SimplicialMap& dm, const SSetPtr& X, int c) {
  Components g(c + 1);
  for (int m = 0; m <= c; ++m) {
    const int nx = X->size(m);
    const int na = dm.source()->size(m);
    g[m].resize(static_cast<std::size_t>(na) * nx);
    for (int a = 0; a < na; ++a)
      for (int x = 0; x < nx; ++x) g[m][a * nx + x] = f[m][dm(m, a) * nx + x];
  }
  return g;
}
}  // namespace

MappingSpace mappingSpace(const SSetPtr& x, const SSetPtr& y) { return mappingSpace(x, y, 0); }

MappingSpace mappingSpace(const SSetPtr& x, const SSetPtr& y, int minCap) {
  MappingSpace ms;
  auto Yc = asCoskeletal(y);
  const int c = std::max(Yc->cap(), minCap);
  Yc = extendTo(Yc, c);
  auto X = extendTo(x, c);
  ms.source = X;
  ms.target = Yc;
  ms.cap = c;
  ms.maps.resize(c + 1);
  ms.index.resize(c + 1);
  for (int n = 0; n <= c; ++n) {
    ms.domains.push_back(productSkeleton(delta(n), X, c));
    MapSearch spec{ms.domains[n].object, Yc, c, {}, nullptr, nullptr, false};
    enumerateMaps(spec, [&](const Components& comps) {
      ms.index[n].emplace(flatten(comps)[0], static_cast<int>(ms.maps[n].size()));
      ms.maps[n].push_back(comps);
      return true;
    });
  }
  std::vector<Level> levels(c + 1);
  for (int n = 0; n <= c; ++n) {
    Level& L = levels[n];
    const int cnt = static_cast<int>(ms.maps[n].size());
    for (int k = 0; k < cnt; ++k) L.names.push_back(std::to_string(n) + ":" + std::to_string(k));
    if (n > 0) {
      L.faces.assign(n + 1, std::vector<int>(cnt));
      for (int i = 0; i <= n; ++i) {
        auto dm = deltaMap(coface(n, i), n).extended(c);
        for (int k = 0; k < cnt; ++k) L.faces[i][k] = ms.cellOf(n - 1, precomposeDelta(ms.maps[n][k], dm, X, c));
      }
    }
    if (n < c) {
      L.degens.assign(n + 1, std::vector<int>(cnt));
      for (int j = 0; j <= n; ++j) {
        auto dm = deltaMap(codegeneracy(n, j), n).extended(c);
        for (int k = 0; k < cnt; ++k) L.degens[j][k] = ms.cellOf(n + 1, precomposeDelta(ms.maps[n][k], dm, X, c));
      }
    }
  }
  ms.object = SimplicialSet::make(Extension::Coskeletal, std::move(levels));
  return ms;
}

int MappingSpace::cellOf(int n, const Components& comps) const {
  auto it = index[n].find(flatten(comps)[0]);
  if (it == index[n].end()) throw EngineDefect("mapping space: cell not found");
  return it->second;
}

SimplicialMap MappingSpace::cellMap(int n, int k) const { return SimplicialMap(domains[n].object, target, maps[n][k]); }

SimplicialMap MappingSpace::vertexMap(int k) const {
  Components comps(cap + 1);
  for (int m = 0; m <= cap; ++m) comps[m] = maps[0][k][m];
  return SimplicialMap(source, target, std::move(comps));
}

int MappingSpace::vertexOf(const SimplicialMap& f) const {
  auto e = f.extended(cap);
  Components comps(e.components().begin(), e.components().begin() + cap + 1);
  return cellOf(0, comps);
}

SimplicialMap postcompose(const SimplicialMap& g, const MappingSpace& from, const MappingSpace& to) {
  if (to.cap > from.cap) throw PreconditionError("postcompose: target mapping space has a larger cap");
  const int c = to.cap;
  auto ge = g.extended(from.cap);
  Components comps(c + 1);
  for (int n = 0; n <= c; ++n) {
    comps[n].resize(from.maps[n].size());
    for (std::size_t k = 0; k < from.maps[n].size(); ++k) {
      Components h(c + 1);
      for (int m = 0; m <= c; ++m) {
        h[m].resize(from.maps[n][k][m].size());
        for (std::size_t z = 0; z < h[m].size(); ++z) h[m][z] = ge(m, from.maps[n][k][m][z]);
      }
      comps[n][k] = to.cellOf(n, h);
    }
  }
  return SimplicialMap(from.object, to.object, std::move(comps));
}

SimplicialMap precompose(const SimplicialMap& h, const MappingSpace& from, const MappingSpace& to) {
  if (to.cap != from.cap) throw PreconditionError("precompose: mapping spaces need a common cap");
  const int c = to.cap;
  auto he = h.extended(c);
  Components comps(c + 1);
  for (int n = 0; n <= c; ++n) {
    comps[n].resize(from.maps[n].size());
    for (std::size_t k = 0; k < from.maps[n].size(); ++k) {
      const Components& f = from.maps[n][k];
      Components g(c + 1);
      for (int m = 0; m <= c; ++m) {
        const int nx = from.source->size(m), nx2 = to.source->size(m);
        const int na = static_cast<int>(f[m].size()) / std::max(nx, 1);
        g[m].resize(static_cast<std::size_t>(na) * nx2);
        for (int a = 0; a < na; ++a)
          for (int x = 0; x < nx2; ++x) g[m][a * nx2 + x] = f[m][a * nx + he(m, x)];
      }
      comps[n][k] = to.cellOf(n, g);
    }
  }
  return SimplicialMap(from.object, to.object, std::move(comps));
}

CornerMap pushoutProduct(const SimplicialMap& f, const SimplicialMap& g) {
  const SSetPtr &A = f.source(), &B = f.target(), &U = g.source(), &V = g.target();
  auto AU = product(A, U), BU = product(B, U), AV = product(A, V), BV = product(B, V);
  auto fU = productMap(f, identity(U), AU, BU);
  auto Ag = productMap(identity(A), g, AU, AV);
  auto po = pushout(fU, Ag);
  auto Bg = productMap(identity(B), g, BU, BV);
  auto fV = productMap(f, identity(V), AV, BV);
  return {pushoutMap(po, Bg, fV), po};
}

PowerMap pullbackPower(const SimplicialMap& g, const SimplicialMap& p) {
  const SSetPtr &U = g.source(), &V = g.target(), &X = p.source(), &Y = p.target();
  const int c = std::max(asCoskeletal(X)->cap(), asCoskeletal(Y)->cap());
  auto VX = mappingSpace(V, X, c), UX = mappingSpace(U, X, c), UY = mappingSpace(U, Y, c), VY = mappingSpace(V, Y, c);
  auto gX = precompose(g, VX, UX);
  auto pU = postcompose(p, UX, UY);
  auto gY = precompose(g, VY, UY);
  auto pV = postcompose(p, VX, VY);
  auto pb = pullback(pU, gY);
  return {pullbackMap(pb, gX, pV), pb};
}

PowerMap mapPullbackPower(const SimplicialMap& i, const SimplicialMap& p) { return pullbackPower(i, p); }

}  // namespace sset
