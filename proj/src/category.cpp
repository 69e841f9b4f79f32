#include "sset/category.hpp"

#include <functional>

#include "sset/core.hpp"

namespace sset {

std::optional<std::string> FiniteCategory::validate() const {
  const int no = objectCount(), na = arrowCount();
  if (static_cast<int>(src.size()) != na || static_cast<int>(tgt.size()) != na) return "source/target tables have wrong size";
  if (static_cast<int>(ident.size()) != no) return "identity table has wrong size";
  if (static_cast<int>(comp.size()) != na) return "composition table has wrong size";
  for (int f = 0; f < na; ++f) {
    if (src[f] < 0 || src[f] >= no || tgt[f] < 0 || tgt[f] >= no) return "arrow endpoint out of range";
    if (static_cast<int>(comp[f].size()) != na) return "composition table has wrong size";
  }
  for (int a = 0; a < no; ++a) {
    int i = ident[a];
    if (i < 0 || i >= na || src[i] != a || tgt[i] != a) return "identity of '" + objects[a] + "' is not an endomorphism";
  }
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      int h = comp[g][f];
      if (tgt[f] != src[g]) {
        if (h != -1) return "composite defined for non-composable pair";
        continue;
      }
      if (h < 0 || h >= na) return "composite of '" + arrows[g] + "' and '" + arrows[f] + "' missing";
      if (src[h] != src[f] || tgt[h] != tgt[g]) return "composite has wrong endpoints";
    }
  for (int f = 0; f < na; ++f) {
    if (comp[f][ident[src[f]]] != f || comp[ident[tgt[f]]][f] != f) return "unit law fails at '" + arrows[f] + "'";
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      if (tgt[f] != src[g]) continue;
      for (int h = 0; h < na; ++h) {
        if (tgt[g] != src[h]) continue;
        if (comp[h][comp[g][f]] != comp[comp[h][g]][f]) return "associativity fails";
      }
    }
  return std::nullopt;
}

std::optional<int> FiniteCategory::inverse(int f) const {
  for (int g = 0; g < arrowCount(); ++g)
    if (src[g] == tgt[f] && tgt[g] == src[f] && comp[g][f] == ident[src[f]] && comp[f][g] == ident[tgt[f]]) return g;
  return std::nullopt;
}

bool FiniteCategory::isGroupoid() const {
  for (int f = 0; f < arrowCount(); ++f)
    if (!inverse(f)) return false;
  return true;
}

bool FiniteCategory::isGaunt() const {
  for (int f = 0; f < arrowCount(); ++f)
    if (inverse(f) && f != ident[src[f]]) return false;
  return true;
}

std::optional<std::string> Functor::validate() const {
  const auto& C = *source;
  const auto& D = *target;
  if (static_cast<int>(onObjects.size()) != C.objectCount() || static_cast<int>(onArrows.size()) != C.arrowCount())
    return "functor tables have wrong size";
  for (int a = 0; a < C.objectCount(); ++a)
    if (onArrows[C.ident[a]] != D.ident[onObjects[a]]) return "identity not preserved";
  for (int f = 0; f < C.arrowCount(); ++f)
    if (D.src[onArrows[f]] != onObjects[C.src[f]] || D.tgt[onArrows[f]] != onObjects[C.tgt[f]])
      return "endpoints not preserved";
  for (int g = 0; g < C.arrowCount(); ++g)
    for (int f = 0; f < C.arrowCount(); ++f)
      if (C.comp[g][f] >= 0 && onArrows[C.comp[g][f]] != D.comp[onArrows[g]][onArrows[f]]) return "composition not preserved";
  return std::nullopt;
}

bool Functor::fullyFaithful() const {
  const auto& C = *source;
  const auto& D = *target;
  for (int a = 0; a < C.objectCount(); ++a)
    for (int b = 0; b < C.objectCount(); ++b) {
      std::vector<int> hits(D.arrowCount(), 0);
      for (int f = 0; f < C.arrowCount(); ++f)
        if (C.src[f] == a && C.tgt[f] == b) ++hits[onArrows[f]];
      for (int g = 0; g < D.arrowCount(); ++g) {
        if (D.src[g] == onObjects[a] && D.tgt[g] == onObjects[b]) {
          if (hits[g] != 1) return false;
        }
      }
    }
  return true;
}

bool Functor::essentiallySurjective() const {
  const auto& D = *target;
  for (int d = 0; d < D.objectCount(); ++d) {
    bool ok = false;
    for (int g = 0; g < D.arrowCount() && !ok; ++g) {
      if (D.tgt[g] != d) continue;
      bool inImage = false;
      for (int o : onObjects) inImage = inImage || o == D.src[g];
      ok = inImage && D.isIsomorphism(g);
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<Functor> allFunctors(const FiniteCategory& C, const FiniteCategory& D) {
  std::vector<Functor> out;
  Functor F{&C, &D, std::vector<int>(C.objectCount()), std::vector<int>(C.arrowCount(), -1)};
  std::function<void(int)> arrowsFrom = [&](int f) {
    charge();
    if (f == C.arrowCount()) {
      if (!F.validate()) out.push_back(F);
      return;
    }
    for (int g = 0; g < D.arrowCount(); ++g) {
      if (D.src[g] != F.onObjects[C.src[f]] || D.tgt[g] != F.onObjects[C.tgt[f]]) continue;
      bool ok = true;
      for (int a = 0; a < C.objectCount() && ok; ++a)
        if (C.ident[a] == f) ok = g == D.ident[F.onObjects[a]];
      for (int h = 0; h < f && ok; ++h) {
        int hf = C.comp[f][h] >= 0 && C.comp[f][h] < f ? C.comp[f][h] : -1;
        if (hf >= 0) ok = F.onArrows[hf] == D.comp[g][F.onArrows[h]];
        int fh = C.comp[h][f] >= 0 && C.comp[h][f] < f ? C.comp[h][f] : -1;
        if (fh >= 0 && ok) ok = F.onArrows[fh] == D.comp[F.onArrows[h]][g];
      }
      if (!ok) continue;
      F.onArrows[f] = g;
      arrowsFrom(f + 1);
    }
    F.onArrows[f] = -1;
  };
  std::function<void(int)> objectsFrom = [&](int a) {
    if (a == C.objectCount()) {
      arrowsFrom(0);
      return;
    }
    for (int d = 0; d < D.objectCount(); ++d) {
      F.onObjects[a] = d;
      objectsFrom(a + 1);
    }
  };
  objectsFrom(0);
  return out;
}

namespace cat {

namespace {
FiniteCategory blank(const std::string& name, int objects) {
  FiniteCategory c;
  c.name = name;
  for (int i = 0; i < objects; ++i) c.objects.push_back(std::to_string(i));
  return c;
}
void finishComp(FiniteCategory& c) {
  const int n = c.arrowCount();
  c.comp.assign(n, std::vector<int>(n, -1));
}
}  // namespace

FiniteCategory groupFromTable(const std::string& name, const std::vector<std::vector<int>>& mult) {
  FiniteCategory c = blank(name, 1);
  c.objects = {"*"};
  const int n = static_cast<int>(mult.size());
  for (int g = 0; g < n; ++g) {
    c.arrows.push_back(g == 0 ? "e" : "g" + std::to_string(g));
    c.src.push_back(0);
    c.tgt.push_back(0);
  }
  c.ident = {0};
  c.comp = mult;
  return c;
}

FiniteCategory cyclicGroup(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = (a + b) % n;
  return groupFromTable("Z/" + std::to_string(n), m);
}

FiniteCategory kleinFour() {
  std::vector<std::vector<int>> m(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m[a][b] = a ^ b;
  return groupFromTable("Z/2xZ/2", m);
}

FiniteCategory poset(const std::string& name, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  FiniteCategory c = blank(name, n);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        arrow[i][j] = c.arrowCount();
        c.arrows.push_back(i == j ? "id" + std::to_string(i) : std::to_string(i) + "<" + std::to_string(j));
        c.src.push_back(i);
        c.tgt.push_back(j);
      }
  for (int i = 0; i < n; ++i) c.ident.push_back(arrow[i][i]);
  finishComp(c);
  for (int f = 0; f < c.arrowCount(); ++f)
    for (int g = 0; g < c.arrowCount(); ++g)
      if (c.tgt[f] == c.src[g]) c.comp[g][f] = arrow[c.src[f]][c.tgt[g]];
  return c;
}

FiniteCategory linearOrder(int n) {
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) leq[i][j] = i <= j;
  return poset("[" + std::to_string(n) + "]", leq);
}

FiniteCategory discrete(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  auto c = poset("disc" + std::to_string(n), leq);
  return c;
}

FiniteCategory codiscreteGroupoid(int n) {
  FiniteCategory c = blank("J" + std::to_string(n - 1), n);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      arrow[i][j] = c.arrowCount();
      c.arrows.push_back(std::to_string(i) + ">" + std::to_string(j));
      c.src.push_back(i);
      c.tgt.push_back(j);
    }
  for (int i = 0; i < n; ++i) c.ident.push_back(arrow[i][i]);
  finishComp(c);
  for (int f = 0; f < c.arrowCount(); ++f)
    for (int g = 0; g < c.arrowCount(); ++g)
      if (c.tgt[f] == c.src[g]) c.comp[g][f] = arrow[c.src[f]][c.tgt[g]];
  return c;
}

FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b) {
  FiniteCategory c;
  c.name = a.name + "x" + b.name;
  for (auto& x : a.objects)
    for (auto& y : b.objects) c.objects.push_back("(" + x + "," + y + ")");
  const int nb = b.objectCount(), mb = b.arrowCount();
  for (int f = 0; f < a.arrowCount(); ++f)
    for (int g = 0; g < mb; ++g) {
      c.arrows.push_back("(" + a.arrows[f] + "," + b.arrows[g] + ")");
      c.src.push_back(a.src[f] * nb + b.src[g]);
      c.tgt.push_back(a.tgt[f] * nb + b.tgt[g]);
    }
  for (int x = 0; x < a.objectCount(); ++x)
    for (int y = 0; y < nb; ++y) c.ident.push_back(a.ident[x] * mb + b.ident[y]);
  const int n = c.arrowCount();
  c.comp.assign(n, std::vector<int>(n, -1));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      const int ga = a.comp[g / mb][f / mb], gb = b.comp[g % mb][f % mb];
      if (ga >= 0 && gb >= 0) c.comp[g][f] = ga * mb + gb;
    }
  return c;
}

FiniteCategory idempotentMonoid() {
  return groupFromTable("Idem", {{0, 1}, {1, 1}});
}

std::vector<FiniteCategory> allPosets(int n) {
  std::vector<FiniteCategory> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) pairs.push_back({i, j});
    const int np = static_cast<int>(pairs.size());
    for (long mask = 0; mask < (1L << np); ++mask) {
      std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
      for (int i = 0; i < k; ++i) leq[i][i] = true;
      for (int p = 0; p < np; ++p)
        if (mask >> p & 1) leq[pairs[p].first][pairs[p].second] = true;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = 0; j < k && ok; ++j) {
          if (i != j && leq[i][j] && leq[j][i]) ok = false;
          for (int l = 0; l < k && ok; ++l)
            if (leq[i][j] && leq[j][l] && !leq[i][l]) ok = false;
        }
      if (ok) out.push_back(poset("P" + std::to_string(k) + "." + std::to_string(mask), leq));
    }
  }
  return out;
}

std::vector<FiniteCategory> zoo() {
  return {cyclicGroup(2),        cyclicGroup(3), kleinFour(),        linearOrder(0),
          linearOrder(1),        linearOrder(2), discrete(2),        codiscreteGroupoid(2),
          codiscreteGroupoid(3), idempotentMonoid()};
}

}  // namespace cat
}  // namespace sset
