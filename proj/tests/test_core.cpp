#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/ops.hpp"

using namespace sset;

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

// Sequence-level oracle for the glue-and-collapse description of H.
struct SeqCell {
  int copy;
  std::vector<int> seq;
  bool operator<(const SeqCell& o) const { return std::tie(copy, seq) < std::tie(o.copy, o.seq); }
};

std::vector<int> nondegCountsOfH() {
  std::vector<SeqCell> cells;
  std::map<SeqCell, int> id;
  for (int copy = 0; copy < 2; ++copy)
    for (int m = 0; m <= 3; ++m) {
      std::vector<int> s(m + 1, 0);
      while (true) {
        id[{copy, s}] = static_cast<int>(cells.size());
        cells.push_back({copy, s});
        int p = m;
        while (p >= 0 && s[p] == 2) --p;
        if (p < 0) break;
        int v = s[p] + 1;
        for (int q = p; q <= m; ++q) s[q] = v;
      }
    }
  std::vector<int> par(cells.size());
  std::iota(par.begin(), par.end(), 0);
  std::function<int(int)> find = [&](int a) { return par[a] == a ? a : par[a] = find(par[a]); };
  std::vector<std::pair<int, int>> work = {{id[{0, {0, 1}}], id[{1, {1, 2}}]},
                                           {id[{0, {0, 2}}], id[{0, {0, 0}}]},
                                           {id[{1, {0, 2}}], id[{1, {0, 0}}]}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    a = find(a), b = find(b);
    if (a == b) continue;
    par[a] = b;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        if (cells[a].seq.size() != cells[b].seq.size() || find(a) != find(b)) continue;
        const int m = static_cast<int>(cells[a].seq.size()) - 1;
        for (int i = 0; m > 0 && i <= m; ++i) {
          auto fa = cells[a].seq, fb = cells[b].seq;
          fa.erase(fa.begin() + i);
          fb.erase(fb.begin() + i);
          int x = find(id[{cells[a].copy, fa}]), y = find(id[{cells[b].copy, fb}]);
          if (x != y) par[x] = y, changed = true;
        }
        for (int j = 0; m < 3 && j <= m; ++j) {
          auto fa = cells[a].seq, fb = cells[b].seq;
          fa.insert(fa.begin() + j, fa[j]);
          fb.insert(fb.begin() + j, fb[j]);
          int x = find(id[{cells[a].copy, fa}]), y = find(id[{cells[b].copy, fb}]);
          if (x != y) par[x] = y, changed = true;
        }
      }
  }
  std::vector<int> counts(3, 0);
  std::map<int, bool> classDegenerate;
  std::map<int, int> classDim;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    int m = static_cast<int>(cells[a].seq.size()) - 1;
    if (m > 2) continue;
    bool deg = false;
    for (int k = 0; k < m; ++k) deg = deg || cells[a].seq[k] == cells[a].seq[k + 1];
    int r = find(a);
    classDim[r] = m;
    classDegenerate[r] = classDegenerate[r] || deg;
  }
  for (auto [r, deg] : classDegenerate)
    if (!deg) ++counts[classDim[r]];
  return counts;
}

bool identitiesHold(const SSetPtr& x) { return !x->checkIdentities().has_value(); }

}  // namespace

TEST_CASE("delta and boundary sizes") {
  auto d1 = delta(1);
  CHECK(d1->cap() == 1);
  CHECK(d1->size(0) == 2);
  CHECK(d1->size(1) == 3);
  for (int n = 0; n <= 4; ++n) {
    auto d = delta(n);
    for (int m = 0; m <= n + 2; ++m) CHECK(cellCount(d, m) == binom(n + m + 1, m + 1));
  }
  auto b2 = boundary(2);
  CHECK(b2->nondegenerateCount(0) == 3);
  CHECK(b2->nondegenerateCount(1) == 3);
  CHECK(extendTo(b2, 2)->nondegenerateCount(2) == 0);
  auto h = horn(2, 0);
  CHECK(h->nondegenerateCount(1) == 2);
  CHECK(spine(3)->nondegenerateCount(1) == 3);
}

TEST_CASE("walking H matches the glue-and-collapse quotient") {
  auto h = walkingH();
  auto oracle = nondegCountsOfH();
  REQUIRE(h->cap() == 2);
  CHECK(h->nondegenerateCount(0) == oracle[0]);
  CHECK(h->nondegenerateCount(1) == oracle[1]);
  CHECK(h->nondegenerateCount(2) == oracle[2]);
  CHECK(oracle == std::vector<int>{2, 3, 2});
  CHECK(h->name(0, 0) == "L");
  CHECK(identitiesHold(h));
}

TEST_CASE("rKanTwo sizes follow the function-set formula") {
  for (int n = 0; n <= 2; ++n) {
    auto r = rKanTwo(n);
    for (int m = 0; m <= 3; ++m) {
      if (n == 2 && m == 3) continue;
      // monotone maps [n] -> [m], counted by brute force
      int maps = 0;
      std::vector<int> v(n + 1, 0);
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos > n) {
          ++maps;
          return;
        }
        for (int a = lo; a <= m; ++a) rec(pos + 1, a);
      };
      rec(0, 0);
      CHECK(cellCount(r, m) == (1 << maps));
    }
    CHECK(identitiesHold(r));
  }
  CHECK(rKanTwo(0)->size(0) == 2);
}

TEST_CASE("jNerve is the 0-coskeleton of a point set") {
  for (int t = 0; t <= 2; ++t) {
    auto j = jNerve(t);
    auto pts = coproduct(std::vector<SSetPtr>(t + 1, point())).object;
    auto c = coskeleton(pts, 0);
    auto cx = extendTo(c, 3), jx = extendTo(j, 3);
    for (int m = 0; m <= 3; ++m) {
      int expect = 1;
      for (int k = 0; k <= m; ++k) expect *= t + 1;
      CHECK(jx->size(m) == expect);
      CHECK(cx->size(m) == expect);
      // nondegenerate words: no two adjacent letters equal
      int nd = t + 1;
      for (int k = 0; k < m; ++k) nd *= t;
      CHECK(jx->nondegenerateCount(m) == nd);
      CHECK(cx->nondegenerateCount(m) == nd);
    }
  }
}

TEST_CASE("nerves of small categories") {
  auto z2 = nerve(cat::cyclicGroup(2));
  CHECK(z2->size(0) == 1);
  CHECK(z2->size(1) == 2);
  CHECK(z2->size(2) == 4);
  auto disc = extendTo(nerve(cat::discrete(3)), 4);
  for (int m = 0; m <= 4; ++m) {
    CHECK(disc->size(m) == 3);
    CHECK(disc->nondegenerateCount(m) == (m == 0 ? 3 : 0));
  }
  auto n1 = nerve(cat::linearOrder(1));
  auto d1 = delta(1);
  for (int m = 0; m <= 4; ++m) CHECK(cellCount(n1, m) == cellCount(d1, m));
  for (auto& c : cat::zoo()) {
    CHECK_FALSE(c.validate().has_value());
    CHECK(identitiesHold(nerve(c)));
    // chains of length m: count by brute force
    auto N = extendTo(nerve(c), 3);
    long chains3 = 0;
    for (int f = 0; f < c.arrowCount(); ++f)
      for (int g = 0; g < c.arrowCount(); ++g)
        for (int h = 0; h < c.arrowCount(); ++h)
          if (c.tgt[f] == c.src[g] && c.tgt[g] == c.src[h]) ++chains3;
    CHECK(N->size(3) == chains3);
  }
}

TEST_CASE("product of two intervals") {
  auto p = product(delta(1), delta(1));
  auto P = p.object;
  CHECK(P->size(1) == 9);
  // oracle: pairs of monotone sequences, degenerate iff some adjacent pair repeats in both
  int nd2 = 0;
  auto D = extendTo(delta(1), 2);
  for (int a = 0; a < D->size(2); ++a)
    for (int b = 0; b < D->size(2); ++b) {
      auto va = D->vertices(2, a), vb = D->vertices(2, b);
      bool deg = false;
      for (int k = 0; k < 2; ++k) deg = deg || (va[k] == va[k + 1] && vb[k] == vb[k + 1]);
      if (!deg) ++nd2;
    }
  CHECK(P->nondegenerateCount(2) == nd2);
  CHECK(nd2 == 2);
  CHECK(identitiesHold(P));
  CHECK_FALSE(p.first.checkSimplicial().has_value());
}

TEST_CASE("pushout collapsing the boundary of an interval") {
  auto inc = deltaSubInclusion(boundary(1), 1);
  auto collapse = toTerminal(boundary(1), point());
  auto po = pushout(collapse, inc);
  CHECK(po.object->size(0) == 1);
  CHECK(po.object->nondegenerateCount(1) == 1);
  CHECK(identitiesHold(po.object));
  // cocone commutes
  CHECK(sameMap(compose(po.left, collapse), compose(po.right, inc)));
}

TEST_CASE("pullback over the terminal object is the product") {
  auto x = delta(1), y = boundary(2);
  auto pb = pullback(toTerminal(x, point()), toTerminal(y, point()));
  auto pr = product(x, y);
  for (int m = 0; m <= 3; ++m) CHECK(cellCount(pb.object, m) == cellCount(pr.object, m));
}

TEST_CASE("skeleton and coskeleton") {
  auto s = skeleton(delta(2), 1);
  CHECK(s->nondegenerateCount(0) == 3);
  CHECK(s->nondegenerateCount(1) == 3);
  CHECK(extendTo(s, 2)->nondegenerateCount(2) == 0);
  auto n = nerve(cat::cyclicGroup(3));
  auto c = coskeleton(n, 2);
  CHECK(sameObject(c, n));
  auto j = jNerve(2);
  CHECK(sameObject(coskeleton(j, 1), j));
}

TEST_CASE("classification") {
  auto cj = classify(jNerve(2));
  CHECK(cj.isLean);
  CHECK(cj.coskeletalDegree == 0);
  auto cz = classify(nerve(cat::cyclicGroup(2)));
  CHECK(cz.isLean);
  CHECK(cz.coskeletalDegree == 2);
  CHECK_FALSE(cz.isFiniteComplex);
  auto cd = classify(delta(2));
  CHECK(cd.isFiniteComplex);
  CHECK(cd.coskeletalDegree == 1);
  CHECK(cd.isLean);
  auto cb = classify(boundary(2));
  CHECK(cb.isFiniteComplex);
  CHECK(cb.coskeletalDegree == 2);
  auto inc = deltaSubInclusion(boundary(1), 1);
  auto circle = pushout(toTerminal(boundary(1), point()), inc).object;
  auto cc = classify(circle);
  CHECK(cc.isFiniteComplex);
  CHECK(cc.skeletalDegree == 1);
}

TEST_CASE("policy conversion agrees with the original extension") {
  auto d = delta(2);
  auto c = asCoskeletal(d);
  CHECK(c->coskeletal());
  CHECK(sameObject(c, d));
  CHECK(extendTo(c, 5)->samePrefix(*extendTo(d, 5), 5));
  auto j = jNerve(1);
  CHECK_THROWS_AS(asSkeletal(j), CapError);
  auto disc = nerve(cat::discrete(2));
  auto s = asSkeletal(disc);
  CHECK(s->skeletal());
  CHECK(sameObject(s, disc));
}

TEST_CASE("simplicial operators") {
  auto d = delta(3);
  int top = *d->find(3, "0123");
  std::vector<int> theta = {0, 0, 2};
  CHECK(d->name(2, d->applyOperator(theta, 3, top)) == "002");
  CHECK(d->vertices(3, top) == std::vector<int>{0, 1, 2, 3});
  auto y = yonedaMap(nerve(cat::linearOrder(2)), 2, 0);
  CHECK_FALSE(y.checkSimplicial().has_value());
}

TEST_CASE("budget is enforced") {
  ContextScope scope(10);
  CHECK_THROWS_AS(extendTo(nerve(cat::kleinFour()), 4), BudgetExceeded);
}
