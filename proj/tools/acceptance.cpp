#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/homotopy.hpp"
#include "sset/lifting.hpp"
#include "sset/ops.hpp"
#include "sset/pro.hpp"
#include "sset/sampling.hpp"
#include "sset/segal.hpp"
#include "sset/verifier.hpp"

using namespace sset;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failures; the first few are kept for the report line.
struct Tally {
  std::size_t checks = 0, failures = 0;
  std::vector<std::string> first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first.size() < 3) first.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << checks << " checks, " << failures << " failures";
    for (auto& f : first) s << "; " << f;
    return {failures == 0, s.str()};
  }
};

SSetPtr nz(int n) { return nerve(cat::cyclicGroup(n)); }

std::string topName(int n) {
  std::string s;
  for (int k = 0; k <= n; ++k) s += std::to_string(k);
  return s;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Maps of n-truncated simplicial sets Y -> X by backtracking over cells,
/// checking faces and degeneracies directly on the stored tables.
std::uint64_t bruteTruncatedMaps(const SSetPtr& y0, const SSetPtr& x0, int n) {
  auto y = extendTo(y0, n), x = extendTo(x0, n);
  std::vector<std::pair<int, int>> order;
  for (int m = 0; m <= n; ++m)
    for (int c = 0; c < y->size(m); ++c) order.push_back({m, c});
  // degeneracy constraints landing on each cell: (j, z) with s_j z = cell
  std::vector<std::vector<std::vector<std::pair<int, int>>>> degenIn(n + 1);
  for (int m = 0; m <= n; ++m) degenIn[m].resize(y->size(m));
  for (int m = 0; m < n; ++m)
    for (int j = 0; j <= m; ++j)
      for (int z = 0; z < y->size(m); ++z) degenIn[m + 1][y->degen(m, j, z)].push_back({j, z});
  std::vector<std::vector<int>> val(n + 1);
  for (int m = 0; m <= n; ++m) val[m].assign(y->size(m), -1);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) {
      ++count;
      return;
    }
    auto [m, c] = order[k];
    for (int v = 0; v < x->size(m); ++v) {
      bool ok = true;
      for (int i = 0; i <= m && ok && m > 0; ++i) ok = x->face(m, i, v) == val[m - 1][y->face(m, i, c)];
      for (auto [j, z] : degenIn[m][c])
        if (ok) ok = x->degen(m - 1, j, val[m - 1][z]) == v;
      if (!ok) continue;
      val[m][c] = v;
      go(k + 1);
      val[m][c] = -1;
    }
  };
  go(0);
  return count;
}

/// The edge-path group of a one-vertex simplicial set whose 2-cells define a
/// total product on edges: e * e' = d1 s for the 2-cell s with d0 s = e, d2 s = e'.
/// Returns nullopt when the 2-cells do not define a group table.
std::optional<std::vector<std::vector<int>>> edgePathTable(const SSetPtr& x) {
  const int e = x->size(1);
  std::vector<std::vector<int>> t(e, std::vector<int>(e, -1));
  for (int s = 0; s < x->size(2); ++s) {
    const int a = x->face(2, 0, s), b = x->face(2, 2, s), c = x->face(2, 1, s);
    if (t[a][b] >= 0 && t[a][b] != c) return std::nullopt;
    t[a][b] = c;
  }
  for (auto& row : t)
    for (int v : row)
      if (v < 0) return std::nullopt;
  return t;
}

/// Fillers of the 2-horn (a, -, b) counted directly from the face tables.
int directInnerFillers(const SSetPtr& x, int d0, int d2) {
  int n = 0;
  for (int s = 0; s < x->size(2); ++s) n += x->face(2, 0, s) == d0 && x->face(2, 2, s) == d2;
  return n;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

Outcome identitySuite() {
  Tally t;
  std::mt19937 rng(101);
  std::vector<SSetPtr> builders{emptySet(), point(), walkingH(), rKanTwo(1), rKanTwo(2)};
  for (int n = 0; n <= 4; ++n) builders.push_back(delta(n));
  for (int n = 1; n <= 4; ++n) builders.push_back(boundary(n));
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) builders.push_back(horn(n, k));
  for (int n = 1; n <= 4; ++n) builders.push_back(spine(n));
  for (int n = 1; n <= 3; ++n) builders.push_back(jNerve(n));
  for (auto& c : cat::zoo()) builders.push_back(nerve(c));
  for (int n = 0; n <= 3; ++n) builders.push_back(discreteSet(n));
  int instances = 0;
  auto check = [&](const SSetPtr& x, const std::string& what) {
    ++instances;
    auto v = x->checkIdentities();
    t.expect(!v, what + ": " + v.value_or(""));
  };
  for (std::size_t k = 0; k < builders.size(); ++k) check(builders[k], "builder " + std::to_string(k));

  auto pool = sample::finitePool();
  pool.push_back(nz(2));
  pool.push_back(jNerve(1));
  auto pick = [&] { return pool[rng() % pool.size()]; };
  auto small = [&] { return sample::randomFinite(rng); };
  for (int r = 0; r < 40; ++r) {
    auto a = small(), b = small();
    check(product(a, b).object, "product");
    check(coproduct({a, b, pick()}).object, "coproduct");
    auto f = sample::randomMapInto(rng, a);
    auto g = sample::randomMap(rng, f.source(), b);
    if (g) {
      check(pushout(f, *g).object, "pushout");
      auto c = sample::randomMap(rng, small(), b);
      if (c) check(pullback(*g, *c).object, "pullback");
    }
    auto x = pick();
    const int n = 1 + static_cast<int>(rng() % 3);
    check(skeleton(x, n), "skeleton");
    check(coskeleton(x, n), "coskeleton");
    check(image(sample::randomMapInto(rng, x)).object, "image");
  }
  return t.outcome(std::to_string(instances) + " instances");
}

Outcome yonedaAndAdjunction() {
  Tally t;
  std::vector<SSetPtr> corpus{point(),    delta(1),      delta(2),   delta(3),      boundary(2), boundary(3),
                              horn(3, 1), spine(3),      jNerve(1),  walkingH(),    nz(2),       nz(3),
                              nerve(cat::linearOrder(2)), nerve(cat::kleinFour()), nerve(cat::idempotentMonoid())};
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& x = corpus[k];
    for (int n = 0; n <= 3; ++n) {
      const auto cells = static_cast<std::uint64_t>(cellCount(x, n));
      t.expect(countMaps(delta(n), x) == cells, "Hom(D" + std::to_string(n) + ", X" + std::to_string(k) + ")");
      auto dn = delta(n);
      const int top = *dn->find(n, topName(n));
      std::set<std::vector<std::vector<int>>> seen;
      for (int c = 0; c < static_cast<int>(cells); ++c) {
        auto y = yonedaMap(x, n, c);
        t.expect(y.extended(n)(n, top) == c, "yoneda cell");
        seen.insert(y.components());
      }
      t.expect(seen.size() == cells, "yoneda injective");
    }
  }
  std::vector<SSetPtr> sources{delta(2), boundary(2), boundary(3), horn(3, 1), jNerve(1), walkingH(), nz(2), spine(3)};
  std::vector<SSetPtr> targets{nz(2), nz(3), jNerve(1), delta(1), boundary(2), walkingH(), nerve(cat::linearOrder(2))};
  for (auto& y : sources)
    for (auto& x : targets)
      for (int n = 1; n <= 2; ++n) {
        const auto oracle = bruteTruncatedMaps(y, x, n);
        t.expect(countMaps(y, coskeleton(x, n)) == oracle, "cosk adjunction");
        t.expect(countMaps(skeleton(y, n), x) == oracle, "sk adjunction");
        t.expect(countTruncatedMaps(y, x, n) == oracle, "truncated count");
      }
  return t.outcome("corpus of " + std::to_string(corpus.size()) + " objects");
}

Outcome monoAgreement() {
  Tally t;
  std::mt19937 rng(303);
  auto pool = sample::finitePool();
  pool.push_back(nz(2));
  pool.push_back(jNerve(1));
  int monos = 0;
  for (int k = 0; k < 200; ++k) {
    auto f = sample::randomMapInto(rng, pool[rng() % pool.size()]);
    auto l = monoByLifting(f);
    t.expect(l.holds == f.injective(), "map " + std::to_string(k) + ": " + l.detail);
    monos += f.injective();
  }
  int proMonos = 0;
  for (int k = 0; k < 50; ++k) {
    auto f = k % 5 == 4 ? sample::randomProMono(rng, 4) : sample::randomProMap(rng, 4, k % 2 == 0);
    auto d = isProMono(f, MonoMode::Direct);
    auto l = isProMono(f, MonoMode::Lifting);
    t.expect(d.holds == l.holds, "pro-map " + std::to_string(k));
    t.expect(d.holds == f.bottom().injective(), "pro-map bottom " + std::to_string(k));
    proMonos += d.holds;
  }
  return t.outcome("200 maps (" + std::to_string(monos) + " monos), 50 pro-maps (" + std::to_string(proMonos) +
                   " monos)");
}

Outcome hAndM() {
  Tally t;
  auto h = classify(walkingH());
  t.expect(h.nondegenerateCounts == std::vector<int>{2, 3, 2}, "H nondegenerate counts");
  for (auto& c : cat::zoo()) {
    auto r = hasRLP(toTerminal(nerve(c), point()), GeneratingSet{GeneratorFamily::JoyalM, 3});
    t.expect(r.holds, "N(" + c.name + ") -> * against M");
  }
  auto d1 = hasRLP(toTerminal(delta(1), point()), GeneratingSet{GeneratorFamily::KanHorns, 2});
  t.expect(!d1.holds, "D1 passes the Kan horns");
  t.expect(d1.witness && d1.witness->generator == "horn(2,0)",
           "witness " + (d1.witness ? d1.witness->generator : std::string("none")));
  std::string w = d1.witness ? d1.witness->generator : "none";
  return t.outcome("H counts (2,3,2), " + std::to_string(cat::zoo().size()) + " nerves, witness " + w);
}

Outcome homotopyGroups() {
  Tally t;
  std::vector<FiniteCategory> groups{cat::cyclicGroup(2), cat::cyclicGroup(3), cat::kleinFour()};
  std::string orders;
  for (auto& g : groups) {
    auto x = nerve(g);
    auto oracle = edgePathTable(x);
    t.expect(oracle.has_value(), g.name + ": edge-path table");
    if (!oracle) continue;
    auto pi1 = piN({x, 0}, 1);
    orders += (orders.empty() ? "" : ",") + std::to_string(pi1.order());
    t.expect(pi1.order() == x->size(1), g.name + ": order");
    // classOf on edges must be an isomorphism of multiplication tables
    std::vector<int> cls(x->size(1), -1);
    std::set<int> image;
    for (int e = 0; e < x->size(1); ++e) {
      auto c = pi1.classOfCell(e);
      t.expect(c.has_value(), g.name + ": edge is a loop");
      if (c) cls[e] = *c, image.insert(*c);
    }
    t.expect(static_cast<int>(image.size()) == pi1.order(), g.name + ": bijective");
    for (int a = 0; a < x->size(1); ++a)
      for (int b = 0; b < x->size(1); ++b)
        if (cls[a] >= 0 && cls[b] >= 0)
          t.expect(pi1.multiplication[cls[a]][cls[b]] == cls[(*oracle)[a][b]], g.name + ": product");
    // the edge-path group is the group itself
    for (int a = 0; a < g.arrowCount(); ++a)
      for (int b = 0; b < g.arrowCount(); ++b)
        t.expect((*oracle)[a][b] == g.compose(a, b), g.name + ": table vs group");
    t.expect(pi1.identity == cls[x->degen(0, 0, 0)], g.name + ": identity");
    t.expect(piN({x, 0}, 2).order() == 1, g.name + ": pi2");
  }
  return t.outcome("orders " + orders);
}

Outcome proAdjunction() {
  Tally t;
  std::vector<std::pair<std::string, SSetPtr>> xs{{"boundary(3)", boundary(3)},
                                                   {"D2+D0", coproduct({delta(2), point()}).object}};
  std::vector<std::pair<std::string, SSetPtr>> ks{{"N(Z/2)", nz(2)}, {"J1", jNerve(1)}};
  std::string counts;
  for (auto& [xn, x] : xs)
    for (auto& [kn, k] : ks) {
      auto pc = proCompleteLean(x, 3);
      auto hom = homSet(x, k);
      auto ph = proHom(pc.tower, constantPro(k));
      counts += (counts.empty() ? "" : ",") + std::to_string(ph.size());
      t.expect(ph.size() == hom.size(), xn + " -> " + kn + ": counts");
      std::set<int> hit;
      for (auto& f : ph) {
        const Germ& g = f.germs().at(0);
        auto r = compose(g.map, pc.units[g.level]);
        int found = -1;
        for (std::size_t i = 0; i < hom.size(); ++i)
          if (sameMap(hom[i], r)) found = static_cast<int>(i);
        t.expect(found >= 0, xn + " -> " + kn + ": restriction");
        hit.insert(found);
      }
      t.expect(hit.size() == hom.size(), xn + " -> " + kn + ": bijection");
    }
  return t.outcome("|proHom| = " + counts);
}

Outcome monoRepair() {
  Tally t;
  std::mt19937 rng(707);
  int repaired = 0;
  for (int k = 0; k < 50; ++k) {
    auto g = sample::randomProMono(rng, 4);
    bool levelwise = true;
    for (auto& c : g.components()) levelwise = levelwise && c.injective();
    repaired += !levelwise;
    auto rg = monoLevelRepresentation(g);
    for (auto& c : rg.level.components()) t.expect(c.injective(), "case " + std::to_string(k) + ": level");
    t.expect(isProIsomorphism(rg.comparison), "case " + std::to_string(k) + ": comparison");
    auto u = underlyingMap(rg.level);
    auto orig = underlyingMap(g);
    t.expect(u.injective(), "case " + std::to_string(k) + ": underlying injective");
    const int d = std::max(u.degree(), orig.degree());
    auto ue = u.extended(d), oe = orig.extended(d);
    for (int m = 0; m <= d; ++m) {
      std::set<int> a(ue.components()[m].begin(), ue.components()[m].end());
      std::set<int> b(oe.components()[m].begin(), oe.components()[m].end());
      t.expect(a == b, "case " + std::to_string(k) + ": image in degree " + std::to_string(m));
    }
  }
  return t.outcome("50 pro-monos, " + std::to_string(repaired) + " with non-injective levels");
}

/// The nondegenerate edge e of x, as a map Delta^1 -> x, extends along Delta^1 -> J^1.
bool extendsToJ(const SSetPtr& x, int e) {
  auto j = jNerve(1);
  std::optional<SimplicialMap> incl;
  for (auto& f : homSet(delta(1), j))
    if (f.injective() && f.extended(0)(0, 0) == 0) incl = f;
  if (!incl) throw InvariantError("no inclusion Delta^1 -> J^1");
  LiftingSquare sq{*incl, toTerminal(x, point()), yonedaMap(x, 1, e), toTerminal(j, point())};
  return solveLifting(sq, 1).exists();
}

Outcome equivalenceEdges() {
  Tally t;
  auto z2 = nz(2);
  auto n1 = nerve(cat::linearOrder(1));
  int gen = -1, arrow = -1;
  for (int e = 0; e < z2->size(1); ++e)
    if (!z2->isDegenerate(1, e)) gen = e;
  for (int e = 0; e < n1->size(1); ++e)
    if (!n1->isDegenerate(1, e)) arrow = e;
  t.expect(gen >= 0 && arrow >= 0, "edges found");
  t.expect(extendsToJ(z2, gen), "generator of N(Z/2) extends");
  t.expect(!extendsToJ(n1, arrow), "arrow of N([1]) does not extend");
  t.expect(isEquivalenceEdge(z2, gen), "generator is an equivalence edge");
  t.expect(!isEquivalenceEdge(n1, arrow), "arrow is not an equivalence edge");
  return t.outcome("N(Z/2) generator extends, N([1]) arrow does not");
}

Outcome dkVersusRowwise() {
  Tally t;
  std::vector<FiniteCategory> cats = cat::allPosets(3);
  cats.push_back(cat::idempotentMonoid());
  cats.push_back(cat::discrete(3));
  cats.push_back(cat::product(cat::linearOrder(1), cat::idempotentMonoid()));
  std::vector<FiniteCategory> small;
  for (auto& c : cats)
    if (c.objectCount() <= 3 && c.arrowCount() <= 9 && c.isGaunt()) small.push_back(c);
  std::vector<BSetPtr> nerves;
  for (auto& c : small) nerves.push_back(discreteNerve(c));
  struct Job {
    int a, b;
    Functor f;
  };
  std::vector<Job> all;
  for (int a = 0; a < static_cast<int>(small.size()); ++a)
    for (int b = 0; b < static_cast<int>(small.size()); ++b)
      for (auto& f : allFunctors(small[a], small[b])) all.push_back({a, b, f});
  std::mt19937 rng(909);
  std::shuffle(all.begin(), all.end(), rng);
  // keep every equivalence plus a sample of the rest
  std::vector<Job> jobs;
  int others = 0;
  for (auto& j : all)
    if (j.f.isEquivalence() || others++ < 240) jobs.push_back(j);
  int equivalences = 0;
  for (auto& j : jobs) {
    auto m = discreteNerveMap(j.f, nerves[j.a], nerves[j.b]);
    const bool dk = isDKEquivalenceCSS(m).verdict;
    const bool rows = rowwiseWeakEquivalence(m);
    t.expect(dk == rows, small[j.a].name + " -> " + small[j.b].name);
    t.expect(dk == j.f.isEquivalence(), small[j.a].name + " -> " + small[j.b].name + " vs functor");
    equivalences += dk;
  }
  return t.outcome(std::to_string(jobs.size()) + " functors among " + std::to_string(small.size()) +
                   " categories, " + std::to_string(equivalences) + " equivalences");
}

Outcome evSing() {
  Tally t;
  std::vector<std::pair<std::string, SSetPtr>> corpus{
      {"point", point()},        {"D1", delta(1)}, {"D2", delta(2)}, {"N(Z/2)", nz(2)},
      {"J1", jNerve(1)},         {"N(Z/3)", nz(3)}, {"N(Idem)", nerve(cat::idempotentMonoid())}};
  for (auto& [name, x] : corpus) {
    auto s = singJ(x);
    t.expect(!s.object->checkIdentities(), name + ": identities");
    auto cmp = evSingComparison(s);
    t.expect(isIsomorphism(cmp), name + ": ev0 Sing iso");
    auto e = ev0(s.object);
    for (int m = 0; m <= s.cap + 1; ++m) t.expect(cellCount(e, m) == cellCount(x, m), name + ": counts");
    t.expect(classifyBisimplicial(s.object).doublyLean, name + ": doubly lean");
  }
  return t.outcome(std::to_string(corpus.size()) + " lean quasi-categories");
}

Outcome verifier(std::uint64_t perCheck, std::uint64_t total) {
  Tally t;
  std::vector<SSetPtr> tests{point(), nz(2), jNerve(1), nz(3)};
  auto p = inheritedPresentation(tests, Flavor::KQ, 3);
  auto rep = verifyAxioms(p, Flavor::KQ, perCheck, total);
  std::string verdicts;
  for (auto& a : rep.axioms) {
    verdicts += (verdicts.empty() ? "" : " ") + std::to_string(a.axiom) + ":" + toString(a.verdict);
    t.expect(a.verdict == Tristate::Yes, "axiom " + std::to_string(a.axiom) + " " + a.summary);
  }
  auto wrong = p;
  for (std::size_t i = 0; i < p.fibrations.size(); ++i)
    if (!sameObject(p.fibrations[i].source(), p.fibrations[i].target()))
      wrong.trivialFibrations.push_back(static_cast<int>(i));
  std::sort(wrong.trivialFibrations.begin(), wrong.trivialFibrations.end());
  wrong.trivialFibrations.erase(std::unique(wrong.trivialFibrations.begin(), wrong.trivialFibrations.end()),
                                wrong.trivialFibrations.end());
  auto bad = verifyAxioms(wrong, Flavor::KQ, perCheck, total);
  t.expect(bad.axioms.at(2).verdict == Tristate::No && bad.axioms.at(2).counterexample.has_value(),
           "mislabeled variant: axiom 3 " + bad.axioms.at(2).summary);
  return t.outcome("axioms " + verdicts + "; mislabeled axiom 3: " + toString(bad.axioms.at(2).verdict));
}

Outcome cylinders() {
  Tally t;
  std::mt19937 rng(1212);
  auto pool = sample::finitePool();
  pool.push_back(nz(2));
  pool.push_back(jNerve(1));
  int done = 0;
  while (done < 10) {
    auto a = sample::randomFinite(rng);
    auto b = pool[rng() % pool.size()];
    auto f = sample::randomMap(rng, a, b);
    if (!f) continue;
    ++done;
    auto c = mappingCylinderFactor(*f, Flavor::KQ);
    const std::string tag = "map " + std::to_string(done);
    t.expect(sameMap(compose(c.r, c.j), *f), tag + ": r o j");
    t.expect(c.j.injective(), tag + ": j mono");
    t.expect(c.homotopy.has_value(), tag + ": homotopy");
    auto v = validateFactorization(c);
    t.expect(!v, tag + ": " + v.value_or(""));
  }
  return t.outcome("10 maps");
}

Outcome fillers() {
  Tally t;
  auto x = nz(3);
  auto hornIncl = deltaSubInclusion(horn(2, 1), 2);
  auto spheres = homSet(horn(2, 1), x);
  for (std::size_t k = 0; k < spheres.size(); ++k) {
    auto& s = spheres[k];
    LiftingSquare sq{hornIncl, toTerminal(x, point()), s, toTerminal(delta(2), point())};
    const auto found = solveLifting(sq).fillers.size();
    auto h = s.extended(1);
    auto hx = horn(2, 1);
    const int e12 = *hx->find(1, "12"), e01 = *hx->find(1, "01");
    const int direct = directInnerFillers(x, h(1, e12), h(1, e01));
    t.expect(found == 1, "sphere " + std::to_string(k) + ": " + std::to_string(found) + " fillers");
    t.expect(direct == 1, "sphere " + std::to_string(k) + ": direct count");
  }
  return t.outcome(std::to_string(spheres.size()) + " inner 2-horns in N(Z/3)");
}

struct Criterion {
  int id;
  std::string name;
  double limitSeconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> only;
  std::uint64_t perCheck = 2'000'000, total = 90'000'000;
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--verifier-check-budget", perCheck, "budget per verifier check");
  app.add_option("--verifier-total-budget", total, "budget per verifier run");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "simplicial identities", 10, identitySuite},
      {2, "Yoneda and coskeleton adjunction", 30, yonedaAndAdjunction},
      {3, "monomorphism by lifting vs injectivity", 120, monoAgreement},
      {4, "H and M", 30, hAndM},
      {5, "homotopy groups of nerves", 180, homotopyGroups},
      {6, "pro-completion adjunction", 120, proAdjunction},
      {7, "mono repair", 120, monoRepair},
      {8, "equivalence edges", 5, equivalenceEdges},
      {9, "DK vs rowwise weak equivalence", 600, dkVersusRowwise},
      {10, "ev0 o Sing", 120, evSing},
      {11, "fibration test category verifier", 300, [&] { return verifier(perCheck, total); }},
      {12, "mapping-cylinder factorization", 120, cylinders},
      {13, "inner 2-horn fillers", 30, fillers},
  };

  bool ok = true;
  for (auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limitSeconds) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail
              << "; " << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
