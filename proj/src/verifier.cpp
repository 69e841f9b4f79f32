#include "sset/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "sset/builders.hpp"

namespace sset {

namespace {

template <class F>
auto withBudget(std::uint64_t budget, F&& fn) -> std::optional<decltype(fn())> {
  ContextScope scope(budget);
  try {
    return fn();
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

Tristate fromBool(std::optional<bool> b) {
  if (!b) return Tristate::Unknown;
  return *b ? Tristate::Yes : Tristate::No;
}

Tristate both(Tristate a, Tristate b) {
  if (a == Tristate::No || b == Tristate::No) return Tristate::No;
  if (a == Tristate::Unknown || b == Tristate::Unknown) return Tristate::Unknown;
  return Tristate::Yes;
}

bool sameCounts(const SSetPtr& a, const SSetPtr& b, int through) {
  for (int m = 0; m <= through; ++m)
    if (cellCount(a, m) != cellCount(b, m)) return false;
  return true;
}

MapKind fibrationKind(Flavor f) { return f == Flavor::KQ ? MapKind::KanFibration : MapKind::CategoricalFibration; }

bool isFibrantObject(const SSetPtr& x, Flavor f) { return f == Flavor::KQ ? isKanComplex(x) : isQuasiCategory(x); }

std::string describe(const SimplicialMap& f) {
  std::string s = "map with " + std::to_string(cellCount(f.source(), 0)) + " -> " +
                   std::to_string(cellCount(f.target(), 0)) + " vertices, on vertices [";
  auto fe = f.extended(0);
  for (int v = 0; v < fe.source()->size(0); ++v) s += (v ? "," : "") + std::to_string(fe(0, v));
  return s + "]";
}

/// Membership of objects and maps in the marked classes of a presentation.
class Classes {
 public:
  Classes(const FibTestPresentation& p, Flavor flavor, std::uint64_t budget) : p_(p), flavor_(flavor), budget_(budget) {
    for (int t : p.tests) tests_.push_back(p.ambient.at(t));
    autos_.resize(tests_.size());
    for (std::size_t k = 0; k < tests_.size(); ++k)
      for (auto& h : homSet(tests_[k], tests_[k]))
        if (isIsomorphism(h)) autos_[k].push_back(h);
    for (std::size_t i = 0; i < p.fibrations.size(); ++i) {
      auto& m = p.fibrations[i];
      marks_.push_back({testOf(m.source()), testOf(m.target()),
                        std::find(p.trivialFibrations.begin(), p.trivialFibrations.end(), static_cast<int>(i)) !=
                            p.trivialFibrations.end()});
    }
  }

  const std::vector<SSetPtr>& tests() const { return tests_; }

  /// Index of a listed test object equal to x, or -1.
  int testOf(const SSetPtr& x) const {
    for (std::size_t k = 0; k < tests_.size(); ++k)
      if (sameObject(x, tests_[k])) return static_cast<int>(k);
    return -1;
  }

  struct Found {
    Tristate status = Tristate::No;
    int test = -1;
    std::optional<SimplicialMap> iso;  // x -> test
  };

  /// Iso search among the listed tests.
  Found findTest(const SSetPtr& x) const {
    Found r;
    if (int k = testOf(x); k >= 0) return {Tristate::Yes, k, identity(tests_[k])};
    bool unknown = false;
    for (std::size_t k = 0; k < tests_.size(); ++k) {
      if (!sameCounts(x, tests_[k], 1)) continue;
      auto iso = withBudget(budget_, [&] { return findIsomorphism(x, tests_[k]); });
      if (!iso) {
        unknown = true;
        continue;
      }
      if (*iso) return {Tristate::Yes, static_cast<int>(k), *iso};
    }
    r.status = unknown ? Tristate::Unknown : Tristate::No;
    return r;
  }

  Tristate isTestObject(const SSetPtr& x, std::string& why) const {
    auto f = findTest(x);
    if (f.status == Tristate::Yes) return Tristate::Yes;
    if (f.status == Tristate::Unknown) {
      why = "isomorphism search ran out of budget";
      return Tristate::Unknown;
    }
    if (!p_.inherited) {
      why = "undetermined membership: object is not isomorphic to a listed test";
      return Tristate::Unknown;
    }
    auto v = withBudget(budget_, [&] { return isFibrantObject(x, flavor_); });
    if (!v) why = "fibrancy check ran out of budget";
    return fromBool(v);
  }

  /// Whether f lies in the marked fibrations (or trivial fibrations).
  Tristate inClass(const SimplicialMap& f, bool trivial, std::string& why) const {
    auto s = findTest(f.source()), t = findTest(f.target());
    if (s.status == Tristate::Yes && t.status == Tristate::Yes) {
      auto lhs = compose(*t.iso, f);
      for (std::size_t i = 0; i < marks_.size(); ++i) {
        if (marks_[i].source != s.test || marks_[i].target != t.test) continue;
        if (trivial && !marks_[i].trivial) continue;
        for (auto& u : autos_[s.test])
          for (auto& v : autos_[t.test]) {
            auto rhs = compose(v, compose(p_.fibrations[i], compose(u, *s.iso)));
            if (sameMap(rhs, lhs)) return Tristate::Yes;
          }
      }
      why = std::string("not marked as a ") + (trivial ? "trivial fibration" : "fibration");
      return Tristate::No;
    }
    if (s.status == Tristate::Unknown || t.status == Tristate::Unknown) {
      why = "isomorphism search ran out of budget";
      return Tristate::Unknown;
    }
    if (!p_.inherited) {
      why = "undetermined membership: an endpoint is not isomorphic to a listed test";
      return Tristate::Unknown;
    }
    auto v = withBudget(budget_, [&] {
      if (!isFibrantObject(f.source(), flavor_) || !isFibrantObject(f.target(), flavor_)) return false;
      if (!classifyMap(f, fibrationKind(flavor_)).holds) return false;
      return !trivial || classifyMap(f, MapKind::TrivialFibration).holds;
    });
    if (!v) why = "classification ran out of budget";
    else if (!*v) why = std::string("not a ") + (trivial ? "trivial fibration" : "fibration") + " of the model structure";
    return fromBool(v);
  }


  /// Map(d, t) -> Map(c, t) is a weak equivalence for every listed test t.
  Tristate inducesEquivalences(const SimplicialMap& h, std::string& why) const {
    Tristate all = Tristate::Yes;
    for (std::size_t k = 0; k < tests_.size(); ++k) {
      auto v = withBudget(budget_, [&] {
        auto md = mappingSpace(h.target(), tests_[k]);
        auto mc = mappingSpace(h.source(), tests_[k], md.cap);
        if (mc.cap != md.cap) md = mappingSpace(h.target(), tests_[k], mc.cap);
        auto pre = precompose(h, md, mc);
        return flavor_ == Flavor::KQ ? isWeakEquivalenceKan(pre) : isDKEquivalenceQCat(pre).verdict;
      });
      if (!v) {
        why = "equivalence check against test " + std::to_string(k) + " ran out of budget";
        all = both(all, Tristate::Unknown);
      } else if (!*v) {
        why = "Map(-, test " + std::to_string(k) + ") is not carried to a weak equivalence";
        return Tristate::No;
      }
    }
    return all;
  }

 private:
  struct Mark {
    int source, target;
    bool trivial;
  };
  const FibTestPresentation& p_;
  Flavor flavor_;
  std::uint64_t budget_;
  std::vector<SSetPtr> tests_;
  std::vector<std::vector<SimplicialMap>> autos_;
  std::vector<Mark> marks_;
};

void settle(AxiomResult& r) {
  if (r.counterexample) r.verdict = Tristate::No;
  else if (!r.undetermined.empty()) r.verdict = Tristate::Unknown;
  else r.verdict = Tristate::Yes;
  r.summary = toString(r.verdict) + " (" + std::to_string(r.checks) + " checks";
  if (!r.undetermined.empty()) r.summary += ", " + std::to_string(r.undetermined.size()) + " undetermined";
  r.summary += ")";
}

}  // namespace

std::vector<MarkedGenerator> defaultGenerators(Flavor flavor, int cap) {
  std::vector<MarkedGenerator> out;
  for (auto& g : GeneratingSet{GeneratorFamily::Boundaries, cap}.generators()) out.push_back({g.name, g.map, false});
  const auto family = flavor == Flavor::KQ ? GeneratorFamily::KanHorns : GeneratorFamily::JoyalM;
  for (auto& g : GeneratingSet{family, cap}.generators()) out.push_back({g.name, g.map, true});
  return out;
}

std::optional<std::string> FibTestPresentation::validate() const {
  for (int t : tests)
    if (t < 0 || t >= static_cast<int>(ambient.size())) return "test index " + std::to_string(t) + " out of range";
  for (int i : trivialFibrations)
    if (i < 0 || i >= static_cast<int>(fibrations.size()))
      return "trivial fibration " + std::to_string(i) + " is not a listed fibration";
  auto isTest = [&](const SSetPtr& x) {
    return std::any_of(tests.begin(), tests.end(), [&](int t) { return sameObject(x, ambient[t]); });
  };
  for (std::size_t i = 0; i < fibrations.size(); ++i)
    if (!isTest(fibrations[i].source()) || !isTest(fibrations[i].target()))
      return "fibration " + std::to_string(i) + " does not join test objects";
  for (int t : tests) {
    auto id = identity(ambient[t]);
    bool found = false;
    for (int i : trivialFibrations) found = found || (sameObject(fibrations[i].source(), ambient[t]) &&
                                                      sameObject(fibrations[i].target(), ambient[t]) &&
                                                      sameMap(fibrations[i], id));
    if (!found) return "identity of test " + std::to_string(t) + " is not a marked trivial fibration";
  }
  for (auto& g : generators)
    if (!g.map.injective()) return "generator " + g.name + " is not a monomorphism";
  return std::nullopt;
}

FibTestPresentation inheritedPresentation(const std::vector<SSetPtr>& tests, Flavor flavor, int generatorCap,
                                          const std::vector<SSetPtr>& extraAmbient) {
  FibTestPresentation p;
  p.inherited = flavor;
  for (auto& t : tests) {
    if (!isFibrantObject(t, flavor)) throw PreconditionError("inherited test objects must be fibrant");
    p.tests.push_back(static_cast<int>(p.ambient.size()));
    p.ambient.push_back(t);
  }
  for (auto& a : extraAmbient) p.ambient.push_back(a);
  for (auto& s : tests)
    for (auto& t : tests)
      for (auto& f : homSet(s, t)) {
        if (!classifyMap(f, fibrationKind(flavor)).holds) continue;
        if (classifyMap(f, MapKind::TrivialFibration).holds)
          p.trivialFibrations.push_back(static_cast<int>(p.fibrations.size()));
        p.fibrations.push_back(f);
      }
  p.generators = defaultGenerators(flavor, generatorCap);
  return p;
}

bool AxiomReport::allPass() const {
  return axioms.size() == 5 &&
         std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.verdict == Tristate::Yes; });
}

AxiomReport verifyAxioms(const FibTestPresentation& p, Flavor flavor, std::uint64_t budget, std::uint64_t totalBudget) {
  if (auto e = p.validate()) throw PreconditionError("invalid presentation: " + *e);
  ContextScope total(totalBudget);
  AxiomReport rep;
  auto run = [&](int axiom, const std::function<void(AxiomResult&)>& body) {
    AxiomResult r;
    r.axiom = axiom;
    try {
      body(r);
    } catch (const BudgetExceeded&) {
      r.undetermined.push_back("total budget exhausted");
    }
    settle(r);
    rep.axioms.push_back(std::move(r));
  };
  rep.budgetPerCheck = budget;
  for (auto& g : p.generators) rep.generatorsUsed.push_back(g.name + (g.trivial ? " (trivial)" : ""));
  Classes cls(p, flavor, budget);
  const auto& T = cls.tests();
  std::vector<int> trivialIdx = p.trivialFibrations;

  // (1) terminal test object; t -> * is a fibration
  run(1, [&](AxiomResult& r) {
    int star = -1;
    for (std::size_t k = 0; k < T.size() && star < 0; ++k)
      if (isIsomorphism(toTerminal(T[k], point()))) star = static_cast<int>(k);
    if (star < 0) {
      r.counterexample = "no test object is terminal";
    } else {
      for (std::size_t k = 0; k < T.size() && !r.counterexample; ++k) {
        ++r.checks;
        std::string why;
        auto m = cls.inClass(toTerminal(T[k], T[star]), false, why);
        if (m == Tristate::No) r.counterexample = "test " + std::to_string(k) + " -> * : " + why;
        else if (m == Tristate::Unknown) r.undetermined.push_back("test " + std::to_string(k) + " -> * : " + why);
      }
    }
  });

  // (2) pullback-powers of marked fibrations along the generators
  run(2, [&](AxiomResult& r) {
    for (std::size_t i = 0; i < p.fibrations.size() && !r.counterexample; ++i) {
      const bool pTrivial = std::find(trivialIdx.begin(), trivialIdx.end(), static_cast<int>(i)) != trivialIdx.end();
      for (auto& g : p.generators) {
        ++r.checks;
        const std::string label = "fibration " + std::to_string(i) + " against " + g.name;
        auto pp = withBudget(budget, [&] { return pullbackPower(g.map, p.fibrations[i]); });
        if (!pp) {
          r.undetermined.push_back(label + ": pullback-power ran out of budget");
          continue;
        }
        std::string why;
        auto fib = cls.inClass(pp->map, false, why);
        if (fib == Tristate::Yes && (pTrivial || g.trivial)) fib = cls.inClass(pp->map, true, why);
        if (fib == Tristate::No) {
          r.counterexample = label + ": " + why;
          break;
        }
        if (fib == Tristate::Unknown) r.undetermined.push_back(label + ": " + why);
      }
    }
  });

  // (3) trivial fibration iff fibration inducing equivalences on Map(-, t)
  run(3, [&](AxiomResult& r) {
    for (std::size_t a = 0; a < T.size() && !r.counterexample; ++a)
      for (std::size_t b = 0; b < T.size() && !r.counterexample; ++b)
        for (auto& f : homSet(T[a], T[b])) {
          ++r.checks;
          std::string why, whyT, whyW;
          auto fib = cls.inClass(f, false, why);
          auto triv = cls.inClass(f, true, whyT);
          Tristate we = Tristate::No;
          if (fib != Tristate::No) we = cls.inducesEquivalences(f, whyW);
          const auto rhs = both(fib, we);
          const std::string label = "test " + std::to_string(a) + " -> test " + std::to_string(b) + " (" + describe(f) + ")";
          if (triv == Tristate::Unknown || rhs == Tristate::Unknown) {
            r.undetermined.push_back(label + ": " + (triv == Tristate::Unknown ? whyT : fib == Tristate::Unknown ? why : whyW));
            continue;
          }
          if ((triv == Tristate::Yes) != (rhs == Tristate::Yes)) {
            r.counterexample = label + (triv == Tristate::Yes ? ": marked trivial but " + (fib == Tristate::No ? why : whyW)
                                                              : ": a fibration inducing equivalences on every Map(-, t), not marked trivial");
            break;
          }
        }
  });

  // (4) pullbacks of trivial fibrations induce equivalences
  run(4, [&](AxiomResult& r) {
    for (int i : trivialIdx) {
      if (r.counterexample) break;
      const auto& q = p.fibrations[i];
      for (std::size_t a = 0; a < p.ambient.size() && !r.counterexample; ++a)
        for (auto& h : homSet(p.ambient[a], q.target())) {
          ++r.checks;
          const std::string label = "trivial fibration " + std::to_string(i) + " pulled back to ambient " + std::to_string(a);
          auto pb = withBudget(budget, [&] { return pullback(h, q); });
          if (!pb) {
            r.undetermined.push_back(label + ": pullback ran out of budget");
            continue;
          }
          std::string why;
          auto we = cls.inducesEquivalences(pb->first, why);
          if (we == Tristate::No) {
            r.counterexample = label + ": " + why;
            break;
          }
          if (we == Tristate::Unknown) r.undetermined.push_back(label + ": " + why);
        }
    }
  });

  // (5) every ambient object lifts against trivial fibrations
  run(5, [&](AxiomResult& r) {
    auto empty = emptySet();
    for (int i : trivialIdx) {
      if (r.counterexample) break;
      const auto& q = p.fibrations[i];
      for (std::size_t a = 0; a < p.ambient.size() && !r.counterexample; ++a)
        for (auto& h : homSet(p.ambient[a], q.target())) {
          ++r.checks;
          LiftingSquare sq{fromInitial(empty, p.ambient[a]), q, fromInitial(empty, q.source()), h};
          auto lift = withBudget(budget, [&] { return hasLift(sq); });
          const std::string label = "ambient " + std::to_string(a) + " against trivial fibration " + std::to_string(i);
          if (!lift) {
            r.undetermined.push_back(label + ": lifting ran out of budget");
          } else if (!*lift) {
            r.counterexample = label + ": " + describe(h) + " has no lift";
            r.square = sq;
            break;
          }
        }
    }
  });
  return rep;
}

GeneratingSets generatingSets(const FibTestPresentation& p, const AxiomReport& report) {
  if (!report.allPass()) throw PreconditionError("generating sets need a presentation passing every axiom");
  GeneratingSets g;
  for (std::size_t i = 0; i < p.fibrations.size(); ++i) {
    const auto& f = p.fibrations[i];
    auto pm = ProMap::fromBottom(constantPro(f.source()), constantPro(f.target()), f);
    g.fibrations.push_back(pm);
    if (std::find(p.trivialFibrations.begin(), p.trivialFibrations.end(), static_cast<int>(i)) != p.trivialFibrations.end())
      g.trivialFibrations.push_back(pm);
  }
  return g;
}

Closure closeUnderPullbackPowers(const std::vector<SSetPtr>& tests, const std::vector<MarkedGenerator>& generators,
                                 int cap) {
  Closure c;
  c.objects = tests;
  if (cap <= 0) return c;
  auto known = [&](const SSetPtr& x) {
    for (auto& y : c.objects) {
      if (sameObject(x, y)) return true;
      if (x->extension() == y->extension() && !sameCounts(x, y, 1)) continue;
      if (findIsomorphism(x, y)) return true;
    }
    return false;
  };
  std::vector<SSetPtr> frontier = tests;
  auto star = point();
  while (c.rounds < cap) {
    ++c.rounds;
    std::vector<SSetPtr> added;
    for (auto& t : frontier)
      for (auto& g : generators) {
        auto pp = pullbackPower(g.map, toTerminal(t, star));
        for (auto& cand : {pp.map.source(), pp.map.target()})
          if (!known(cand)) {
            c.objects.push_back(cand);
            added.push_back(cand);
          }
      }
    if (added.empty()) {
      c.fixpoint = true;
      break;
    }
    frontier = std::move(added);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Mapping cylinder
// ---------------------------------------------------------------------------

namespace {

/// copy[m][cell] = which of the two points of ∂I the cell sits over.
std::vector<std::vector<int>> copiesOf(const Coproduct& co, int d) {
  std::vector<std::vector<int>> out(d + 1);
  for (int m = 0; m <= d; ++m) {
    out[m].assign(cellCount(co.object, m), -1);
    for (int k = 0; k < 2; ++k) {
      auto inj = co.injections[k].extended(d);
      for (int x = 0; x < cellCount(inj.source(), m); ++x) out[m][inj(m, x)] = k;
    }
  }
  return out;
}

}  // namespace

CylinderFactorization mappingCylinderFactor(const SimplicialMap& f, Flavor flavor) {
  CylinderFactorization c;
  c.f = f;
  const SSetPtr X = f.source(), Y = f.target();
  c.interval = flavor == Flavor::KQ ? delta(1) : walkingH();
  if (flavor == Flavor::Joyal) {
    c.end0 = *c.interval->find(0, "L");
    c.end1 = *c.interval->find(0, "R");
  }
  const SSetPtr& I = c.interval;
  auto empty = emptySet();
  c.firstMono = fromInitial(empty, Y);
  c.firstTop = fromInitial(empty, X);
  c.first = pushoutAlongMono(c.firstMono, c.firstTop);

  auto dI = coproduct({point(), point()});
  auto bI = copairing(dI, {vertexInclusion(I, c.end0), vertexInclusion(I, c.end1)}, I);
  c.cylinderProduct = product(X, I);
  c.boundaryProduct = product(X, dI.object);
  c.secondMono = productMap(identity(X), bI, c.boundaryProduct, c.cylinderProduct);

  // X x ∂I -> X ⊔ Y: end 0 onto X, end 1 through f
  {
    const auto& B = c.boundaryProduct;
    const int d = std::max(B.object->cap(), c.first.object->cap());
    auto p1 = B.first.extended(d), p2 = B.second.extended(d);
    auto onX = c.first.right.extended(d), onY = c.first.left.extended(d), fe = f.extended(d);
    auto copy = copiesOf(dI, d);
    Components comps(d + 1);
    for (int m = 0; m <= d; ++m)
      for (int k = 0; k < cellCount(p1.source(), m); ++k) {
        const int x = p1(m, k);
        comps[m].push_back(copy[m][p2(m, k)] == 0 ? onX(m, x) : onY(m, fe(m, x)));
      }
    c.secondTop = finishMap(p1.source(), onX.target(), std::move(comps));
  }
  c.second = pushoutAlongMono(c.secondMono, c.secondTop);
  c.cylinder = c.second.object;
  c.j = compose(c.second.right, c.first.right);
  c.section = compose(c.second.right, c.first.left);
  auto rOnSum = pushoutMap(c.first, identity(Y), f);
  c.r = pushoutMap(c.second, compose(f, c.cylinderProduct.first), rOnSum);

  // homotopy from id to section o r over the cylinder coordinate
  c.homotopyDomain = product(c.cylinder, I);
  if (flavor == Flavor::KQ) {
    const auto& HD = c.homotopyDomain;
    const int d = std::max(HD.object->cap(), c.cylinder->cap());
    auto h1 = HD.first.extended(d), h2 = HD.second.extended(d);
    auto left = c.second.left.extended(d);
    auto q1 = c.cylinderProduct.first.extended(d), q2 = c.cylinderProduct.second.extended(d);
    auto Ie = extendTo(I, d);
    Components comps(d + 1);
    for (int m = 0; m <= d; ++m) {
      std::map<std::pair<int, int>, int> cellOf;
      std::vector<int> preimage(cellCount(c.cylinder, m), -1);
      for (int b = 0; b < cellCount(left.source(), m); ++b) {
        cellOf[{q1(m, b), q2(m, b)}] = b;
        if (preimage[left(m, b)] < 0) preimage[left(m, b)] = b;
      }
      std::map<std::vector<int>, int> intervalCell;
      for (int u = 0; u < cellCount(Ie, m); ++u) intervalCell[Ie->vertices(m, u)] = u;
      for (int k = 0; k < cellCount(h1.source(), m); ++k) {
        const int pcell = h1(m, k);
        const int b = preimage[pcell];
        if (b < 0) {
          comps[m].push_back(pcell);
          continue;
        }
        auto v = Ie->vertices(m, q2(m, b)), u = Ie->vertices(m, h2(m, k));
        for (std::size_t a = 0; a < v.size(); ++a) v[a] = std::max(v[a], u[a]);
        comps[m].push_back(left(m, cellOf.at({q1(m, b), intervalCell.at(v)})));
      }
    }
    c.homotopy = finishMap(h1.source(), c.cylinder, std::move(comps));
  } else {
    auto dHD = product(c.cylinder, dI.object);
    auto incl = productMap(identity(c.cylinder), bI, dHD, c.homotopyDomain);
    const int d = std::max(dHD.object->cap(), c.cylinder->cap());
    auto p1 = dHD.first.extended(d), p2 = dHD.second.extended(d);
    auto sr = compose(c.section, c.r).extended(d);
    auto copy = copiesOf(dI, d);
    Components comps(d + 1);
    for (int m = 0; m <= d; ++m)
      for (int k = 0; k < cellCount(p1.source(), m); ++k)
        comps[m].push_back(copy[m][p2(m, k)] == 0 ? p1(m, k) : sr(m, p1(m, k)));
    auto ends = finishMap(p1.source(), c.cylinder, std::move(comps));
    LiftingSquare sq{incl, toTerminal(c.cylinder, point()), ends, toTerminal(c.homotopyDomain.object, point())};
    auto res = solveLifting(sq, 1);
    if (res.exists()) c.homotopy = res.fillers.front();
  }
  return c;
}

std::optional<std::string> checkPushoutSquare(const SimplicialMap& mono, const SimplicialMap& g, const Pushout& p,
                                              const std::vector<SSetPtr>& samples) {
  if (!mono.injective()) return "left map is not a monomorphism";
  if (!sameMap(compose(p.left, mono), compose(p.right, g))) return "square does not commute";
  for (std::size_t z = 0; z < samples.size(); ++z) {
    const auto& Z = samples[z];
    std::vector<std::pair<SimplicialMap, SimplicialMap>> cocones;
    auto hb = homSet(mono.target(), Z), hc = homSet(g.target(), Z);
    for (auto& b : hb)
      for (auto& cc : hc)
        if (sameMap(compose(b, mono), compose(cc, g))) cocones.emplace_back(b, cc);
    auto hp = homSet(p.object, Z);
    if (hp.size() != cocones.size())
      return "sample " + std::to_string(z) + ": " + std::to_string(hp.size()) + " maps out of the pushout but " +
             std::to_string(cocones.size()) + " cocones";
    std::vector<char> hit(cocones.size(), 0);
    for (auto& h : hp) {
      auto b = compose(h, p.left), cc = compose(h, p.right);
      int found = -1;
      for (std::size_t k = 0; k < cocones.size() && found < 0; ++k)
        if (sameMap(b, cocones[k].first) && sameMap(cc, cocones[k].second)) found = static_cast<int>(k);
      if (found < 0 || hit[found]) return "sample " + std::to_string(z) + ": restriction is not a bijection";
      hit[found] = 1;
    }
  }
  return std::nullopt;
}

std::optional<std::string> validateFactorization(const CylinderFactorization& c) {
  if (!sameMap(compose(c.r, c.j), c.f)) return "r o j differs from f";
  if (!classifyMap(c.j, MapKind::Monomorphism).holds) return "j is not a monomorphism";
  const std::vector<SSetPtr> samples = {point(), discreteSet(2), jNerve(1), nerve(cat::cyclicGroup(2))};
  if (auto e = checkPushoutSquare(c.firstMono, c.firstTop, c.first, samples)) return "first square: " + *e;
  if (auto e = checkPushoutSquare(c.secondMono, c.secondTop, c.second, samples)) return "second square: " + *e;
  if (!sameMap(c.j, compose(c.second.right, c.first.right))) return "j is not the composite of the pushout legs";
  if (!sameMap(compose(c.r, c.section), identity(c.f.target()))) return "r o section is not the identity";
  if (!c.homotopy) return "no homotopy from the identity to section o r";
  if (auto e = c.homotopy->checkSimplicial()) return "homotopy: " + *e;
  const auto& HD = c.homotopyDomain;
  auto end = [&](int v) {
    return compose(*c.homotopy, pairing(identity(c.cylinder), constantMap(c.cylinder, c.interval, v), HD));
  };
  if (!sameMap(end(c.end0), identity(c.cylinder))) return "homotopy does not start at the identity";
  if (!sameMap(end(c.end1), compose(c.section, c.r))) return "homotopy does not end at section o r";
  return std::nullopt;
}

}  // namespace sset
