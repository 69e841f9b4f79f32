#include "sset/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sset {

// ---------------------------------------------------------------------------
// Context
// ---------------------------------------------------------------------------

namespace {
thread_local ContextState* g_context = nullptr;
}

ContextScope::ContextScope(std::uint64_t budget) : previous_(g_context) {
  state_.limit = budget;
  state_.parent = previous_;
  g_context = &state_;
}

ContextScope::~ContextScope() { g_context = previous_; }

std::uint64_t ContextScope::used() const { return state_.used; }
const std::vector<std::string>& ContextScope::notes() const { return state_.notes; }

void charge(std::uint64_t n) {
  for (auto* c = g_context; c; c = c->parent) {
    c->used += n;
    if (c->used > c->limit) throw BudgetExceeded("search budget of " + std::to_string(c->limit) + " nodes exhausted");
  }
}

void note(const std::string& message) {
  if (!g_context) return;
  auto& v = g_context->notes;
  if (std::find(v.begin(), v.end(), message) == v.end()) v.push_back(message);
}

const char* toString(Extension e) { return e == Extension::Skeletal ? "skeletal" : "coskeletal"; }

std::size_t VecHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ull ^ v.size();
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// SimplicialSet
// ---------------------------------------------------------------------------

SimplicialSet::SimplicialSet(Extension ext, std::vector<Level> levels)
    : ext_(ext), levels_(std::move(levels)) {
  if (levels_.empty()) throw InvariantError("simplicial set needs at least degree 0");
  const int c = cap();
  for (int m = 0; m <= c; ++m) {
    Level& L = levels_[m];
    const int n = L.size();
    if (m == 0) {
      if (!L.faces.empty()) throw InvariantError("degree 0 cells have no faces");
    } else {
      if (static_cast<int>(L.faces.size()) != m + 1)
        throw InvariantError("degree " + std::to_string(m) + " needs " + std::to_string(m + 1) + " face maps");
      for (auto& f : L.faces) {
        if (static_cast<int>(f.size()) != n) throw InvariantError("face table size mismatch");
        for (int y : f)
          if (y < 0 || y >= levels_[m - 1].size()) throw InvariantError("face index out of range");
      }
    }
    if (m < c) {
      if (static_cast<int>(L.degens.size()) != m + 1)
        throw InvariantError("degree " + std::to_string(m) + " needs " + std::to_string(m + 1) + " degeneracy maps");
      for (auto& s : L.degens) {
        if (static_cast<int>(s.size()) != n) throw InvariantError("degeneracy table size mismatch");
        for (int y : s)
          if (y < 0 || y >= levels_[m + 1].size()) throw InvariantError("degeneracy index out of range");
      }
    } else if (!L.degens.empty()) {
      throw InvariantError("top stored degree carries no degeneracies");
    }
  }
  faceIndex_.resize(c + 1);
  nameIndex_.resize(c + 1);
  computeDegeneracyFlags();
}

SSetPtr SimplicialSet::make(Extension ext, std::vector<Level> levels) {
  return std::make_shared<const SimplicialSet>(ext, std::move(levels));
}

void SimplicialSet::computeDegeneracyFlags() {
  degenerate_.assign(levels_.size(), {});
  degenerate_[0].assign(levels_[0].size(), 0);
  for (int m = 1; m <= cap(); ++m) {
    const int n = levels_[m].size();
    degenerate_[m].assign(n, 0);
    for (int x = 0; x < n; ++x) {
      for (int j = 0; j < m; ++j) {
        int y = levels_[m].faces[j][x];
        if (levels_[m - 1].degens[j][y] == x) {
          degenerate_[m][x] = j + 1;
          break;
        }
      }
    }
  }
}

std::optional<int> SimplicialSet::find(int m, const std::string& nm) const {
  if (m < 0 || m > cap()) return std::nullopt;
  std::lock_guard<std::mutex> lock(cacheMutex_);
  auto& idx = nameIndex_[m];
  if (!idx) {
    idx = std::make_unique<std::unordered_map<std::string, int>>();
    for (int x = 0; x < levels_[m].size(); ++x) idx->emplace(levels_[m].names[x], x);
  }
  auto it = idx->find(nm);
  if (it == idx->end()) return std::nullopt;
  return it->second;
}

int SimplicialSet::nondegenerateCount(int m) const {
  return static_cast<int>(std::count(degenerate_[m].begin(), degenerate_[m].end(), 0));
}

std::vector<int> SimplicialSet::nondegenerate(int m) const {
  std::vector<int> out;
  for (int x = 0; x < size(m); ++x)
    if (!degenerate_[m][x]) out.push_back(x);
  return out;
}

std::vector<int> SimplicialSet::faceTuple(int m, int x) const {
  std::vector<int> t(m + 1);
  for (int i = 0; i <= m; ++i) t[i] = levels_[m].faces[i][x];
  return t;
}

std::span<const int> SimplicialSet::cellsWithFaces(int m, std::span<const int> faces) const {
  static const std::vector<int> kEmpty;
  if (m < 1 || m > cap()) return kEmpty;
  std::lock_guard<std::mutex> lock(cacheMutex_);
  auto& idx = faceIndex_[m];
  if (!idx) {
    idx = std::make_unique<std::unordered_map<std::vector<int>, std::vector<int>, VecHash>>();
    for (int x = 0; x < levels_[m].size(); ++x) (*idx)[faceTuple(m, x)].push_back(x);
  }
  auto it = idx->find(std::vector<int>(faces.begin(), faces.end()));
  if (it == idx->end()) return kEmpty;
  return it->second;
}

int SimplicialSet::applyOperator(std::span<const int> theta, int m, int x) const {
  const int p = static_cast<int>(theta.size()) - 1;
  if (p < 0 || p > cap() || m > cap())
    throw CapError("operator degree exceeds stored cap", std::max(p, m));
  std::vector<char> hit(m + 1, 0);
  for (int i = 0; i <= p; ++i) {
    if (theta[i] < 0 || theta[i] > m || (i > 0 && theta[i] < theta[i - 1]))
      throw PreconditionError("operator is not a monotone map into [" + std::to_string(m) + "]");
    hit[theta[i]] = 1;
  }
  int cell = x, deg = m;
  for (int k = m; k >= 0; --k) {
    if (!hit[k]) {
      cell = levels_[deg].faces[k][cell];
      --deg;
    }
  }
  // epi part: ranks of theta in its image
  std::vector<int> e(p + 1);
  {
    std::vector<int> rank(m + 1, 0);
    int r = -1;
    for (int k = 0; k <= m; ++k) {
      if (hit[k]) ++r;
      rank[k] = r;
    }
    for (int i = 0; i <= p; ++i) e[i] = rank[theta[i]];
  }
  std::vector<int> recorded;
  while (static_cast<int>(e.size()) > deg + 1) {
    int i = static_cast<int>(e.size()) - 2;
    while (e[i] != e[i + 1]) --i;
    recorded.push_back(i);
    e.erase(e.begin() + i + 1);
  }
  for (auto it = recorded.rbegin(); it != recorded.rend(); ++it) {
    cell = levels_[deg].degens[*it][cell];
    ++deg;
  }
  return cell;
}

std::vector<int> SimplicialSet::vertices(int m, int x) const {
  std::vector<int> v(m + 1);
  for (int k = 0; k <= m; ++k) {
    int t[1] = {k};
    v[k] = applyOperator(t, m, x);
  }
  return v;
}

std::optional<std::string> SimplicialSet::checkIdentities() const {
  const int c = cap();
  auto cellDesc = [&](int m, int x) { return "'" + levels_[m].names[x] + "' in degree " + std::to_string(m); };
  for (int m = 2; m <= c; ++m)
    for (int x = 0; x < size(m); ++x)
      for (int j = 1; j <= m; ++j)
        for (int i = 0; i < j; ++i)
          if (face(m - 1, i, face(m, j, x)) != face(m - 1, j - 1, face(m, i, x)))
            return "d" + std::to_string(i) + "d" + std::to_string(j) + " = d" + std::to_string(j - 1) + "d" +
                   std::to_string(i) + " fails on " + cellDesc(m, x);
  for (int m = 0; m + 1 <= c; ++m)
    for (int x = 0; x < size(m); ++x)
      for (int j = 0; j <= m; ++j) {
        int s = degen(m, j, x);
        for (int i = 0; i <= m + 1; ++i) {
          int lhs = face(m + 1, i, s);
          int rhs;
          if (i < j)
            rhs = degen(m - 1, j - 1, face(m, i, x));
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = degen(m - 1, j, face(m, i - 1, x));
          if (lhs != rhs)
            return "d" + std::to_string(i) + "s" + std::to_string(j) + " identity fails on " + cellDesc(m, x);
        }
      }
  for (int m = 0; m + 2 <= c; ++m)
    for (int x = 0; x < size(m); ++x)
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= j; ++i)
          if (degen(m + 1, i, degen(m, j, x)) != degen(m + 1, j + 1, degen(m, i, x)))
            return "s" + std::to_string(i) + "s" + std::to_string(j) + " = s" + std::to_string(j + 1) + "s" +
                   std::to_string(i) + " fails on " + cellDesc(m, x);
  return std::nullopt;
}

bool SimplicialSet::samePrefix(const SimplicialSet& other, int d) const {
  if (d > cap() || d > other.cap()) return false;
  for (int m = 0; m <= d; ++m) {
    const Level& a = levels_[m];
    const Level& b = other.levels_[m];
    if (a.names != b.names || a.faces != b.faces) return false;
    if (m < d) {
      if (a.degens != b.degens) return false;
    }
  }
  return true;
}

std::optional<long> SimplicialSet::cachedProperty(const std::string& key) const {
  std::lock_guard<std::mutex> lock(cacheMutex_);
  auto it = properties_.find(key);
  if (it == properties_.end()) return std::nullopt;
  return it->second;
}

void SimplicialSet::cacheProperty(const std::string& key, long value) const {
  std::lock_guard<std::mutex> lock(cacheMutex_);
  properties_[key] = value;
}

// ---------------------------------------------------------------------------
// Extension above the cap. New cells of degree m are exactly those determined
// by their face tuples (degenerate cells always are), sorted lexicographically
// by face indices and named by face names, so both policies produce identical
// data whenever they describe the same simplicial set.
// ---------------------------------------------------------------------------

namespace {

std::string tupleName(const SimplicialSet& x, int faceDeg, const std::vector<int>& t, int m, int idx) {
  std::string s = "<";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += x.name(faceDeg, t[i]);
    if (s.size() > 96) return "#" + std::to_string(m) + "." + std::to_string(idx);
  }
  return s + ">";
}

// d_i s_j x computed from stored data, x in degree c, result in degree c.
std::vector<int> degenerateFaces(const SimplicialSet& X, int c, int j, int x) {
  std::vector<int> t(c + 2);
  for (int i = 0; i <= c + 1; ++i) {
    if (i < j)
      t[i] = X.degen(c - 1, j - 1, X.face(c, i, x));
    else if (i == j || i == j + 1)
      t[i] = x;
    else
      t[i] = X.degen(c - 1, j, X.face(c, i - 1, x));
  }
  return t;
}

std::vector<std::vector<int>> compatibleTuples(const SimplicialSet& X, int c) {
  const int m = c + 1;
  const int n = X.size(c);
  std::vector<std::vector<int>> out;
  if (c == 0) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        charge();
        out.push_back({a, b});
      }
    return out;
  }
  std::unordered_map<std::vector<int>, std::vector<int>, VecHash> prefix;
  for (int y = 0; y < n; ++y) {
    std::vector<int> key;
    for (int j = 1; j <= m; ++j) {
      key.push_back(X.face(c, j - 1, y));
      prefix[key].push_back(y);
    }
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> cur(m + 1);
  std::vector<int> req;
  auto rec = [&](auto&& self, int j) -> void {
    if (j == m + 1) {
      out.push_back(cur);
      return;
    }
    const std::vector<int>* cands = &all;
    if (j > 0) {
      req.resize(j);
      for (int i = 0; i < j; ++i) req[i] = X.face(c, j - 1, cur[i]);
      auto it = prefix.find(req);
      if (it == prefix.end()) return;
      cands = &it->second;
    }
    for (int y : *cands) {
      charge();
      cur[j] = y;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

SSetPtr extendOnce(const SimplicialSet& X) {
  const int c = X.cap();
  const int m = c + 1;
  std::vector<std::vector<int>> tuples;
  if (X.coskeletal()) {
    tuples = compatibleTuples(X, c);
  } else {
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    for (int x = 0; x < X.size(c); ++x)
      for (int j = 0; j <= c; ++j) {
        charge();
        auto t = degenerateFaces(X, c, j, x);
        if (seen.emplace(t, 0).second) tuples.push_back(std::move(t));
      }
    std::sort(tuples.begin(), tuples.end());
  }
  std::unordered_map<std::vector<int>, int, VecHash> index;
  index.reserve(tuples.size());
  for (int k = 0; k < static_cast<int>(tuples.size()); ++k) index.emplace(tuples[k], k);

  std::vector<Level> levels;
  levels.reserve(m + 1);
  for (int d = 0; d <= c; ++d) levels.push_back(X.level(d));
  Level& top = levels[c];
  top.degens.assign(c + 1, std::vector<int>(X.size(c)));
  for (int x = 0; x < X.size(c); ++x)
    for (int j = 0; j <= c; ++j) {
      auto it = index.find(degenerateFaces(X, c, j, x));
      if (it == index.end()) throw EngineDefect("degenerate cell missing from extension");
      top.degens[j][x] = it->second;
    }
  Level nl;
  nl.names.resize(tuples.size());
  nl.faces.assign(m + 1, std::vector<int>(tuples.size()));
  for (int k = 0; k < static_cast<int>(tuples.size()); ++k) {
    nl.names[k] = tupleName(X, c, tuples[k], m, k);
    for (int i = 0; i <= m; ++i) nl.faces[i][k] = tuples[k][i];
  }
  levels.push_back(std::move(nl));
  return SimplicialSet::make(X.extension(), std::move(levels));
}

}  // namespace

SSetPtr extendTo(const SSetPtr& x, int d) {
  if (d <= x->cap()) return x;
  SSetPtr cur = x;
  {
    std::lock_guard<std::mutex> lock(x->cacheMutex_);
    auto it = x->extensions_.lower_bound(d);
    if (it != x->extensions_.end()) return it->second;
    if (!x->extensions_.empty()) cur = x->extensions_.rbegin()->second;
  }
  while (cur->cap() < d) {
    cur = extendOnce(*cur);
    std::lock_guard<std::mutex> lock(x->cacheMutex_);
    x->extensions_.emplace(cur->cap(), cur);
  }
  return cur;
}

int cellCount(const SSetPtr& x, int m) { return extendTo(x, m)->size(m); }

// ---------------------------------------------------------------------------
// Coskeletality / skeletality detection
// ---------------------------------------------------------------------------

std::uint64_t matchingCount(const SSetPtr& x, int m) {
  if (m < 1) throw PreconditionError("matching object needs degree >= 1");
  auto X = extendTo(x, m - 1);
  return compatibleTuples(*X, m - 1).size();
}

bool comparisonBijective(const SSetPtr& x, int m) {
  if (m < 1) return true;
  auto X = extendTo(x, m);
  auto tuples = compatibleTuples(*X, m - 1);
  if (static_cast<int>(tuples.size()) != X->size(m)) return false;
  for (auto& t : tuples)
    if (X->cellsWithFaces(m, t).size() != 1) return false;
  return true;
}

namespace {
int windowFor(const SimplicialSet& x) { return x.cap() + 2; }
constexpr double kWindowCellLimit = 4e6;
}  // namespace

std::optional<int> detectCoskeletalDegree(const SSetPtr& x) {
  const int c = x->cap();
  if (x->coskeletal()) {
    int n = c;
    while (n > 0 && comparisonBijective(x, n)) --n;
    return n;
  }
  const int w = c + 3;
  for (int n = 0; n <= c + 1; ++n) {
    bool ok = true;
    for (int m = n + 1; m <= w && ok; ++m) ok = comparisonBijective(x, m);
    if (ok) {
      note("coskeletality of a skeletal object checked through degree " + std::to_string(w));
      return n;
    }
  }
  return std::nullopt;
}

std::optional<int> detectSkeletalDegree(const SSetPtr& x) {
  const int c = x->cap();
  const int w = x->skeletal() ? c : windowFor(*x);
  if (x->coskeletal()) {
    // grow one degree at a time; refuse a degree whose projected size is
    // beyond what can be materialized
    for (int d = c + 1; d <= w; ++d) {
      auto prev = extendTo(x, d - 1);
      const double ratio = static_cast<double>(prev->size(d - 1)) / std::max(1, d >= 2 ? prev->size(d - 2) : 1);
      if (prev->size(d - 1) * ratio > kWindowCellLimit) {
        note("skeletal degree undetermined: degree " + std::to_string(d) + " is too large to materialize");
        x->cacheProperty("skeletalUndetermined", d);
        return std::nullopt;
      }
      extendTo(x, d);
    }
  }
  auto X = extendTo(x, w);
  int n = w;
  while (n >= 0 && X->nondegenerateCount(n) == 0) --n;
  n = std::max(n, 0);
  if (x->coskeletal()) {
    if (n >= w) return std::nullopt;
    note("skeletality of a coskeletal object checked through degree " + std::to_string(w));
  }
  return n;
}

namespace {
SSetPtr withPolicy(const SSetPtr& x, Extension ext, int capTo) {
  auto X = extendTo(x, capTo);
  std::vector<Level> levels;
  for (int d = 0; d <= capTo; ++d) levels.push_back(X->level(d));
  levels[capTo].degens.clear();
  return SimplicialSet::make(ext, std::move(levels));
}
}  // namespace

SSetPtr asCoskeletal(const SSetPtr& x) {
  if (x->coskeletal()) return x;
  auto n = detectCoskeletalDegree(x);
  if (!n) throw CapError("object is not coskeletal within the detection window");
  return withPolicy(x, Extension::Coskeletal, std::max(*n, x->cap()));
}

SSetPtr asSkeletal(const SSetPtr& x) {
  if (x->skeletal()) return x;
  auto n = detectSkeletalDegree(x);
  if (!n) throw CapError("object is not skeletal within the detection window");
  return withPolicy(x, Extension::Skeletal, std::max(*n, x->cap()));
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

std::optional<int> determiningDegree(const SimplicialSet& src, const SimplicialSet& tgt) {
  std::optional<int> d;
  if (src.skeletal()) d = src.cap();
  if (tgt.coskeletal()) d = d ? std::min(*d, tgt.cap()) : tgt.cap();
  return d;
}

SimplicialMap::SimplicialMap(SSetPtr source, SSetPtr target, Components components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const int D = degree();
  if (D < 0) throw InvariantError("map needs components in degree 0");
  if (D > source_->cap() || D > target_->cap()) throw InvariantError("map components exceed stored caps");
  auto det = determiningDegree(*source_, *target_);
  if (!det) throw CapError("maps from a coskeletal to a skeletal object are not determined by finite data");
  if (*det > D) throw CapError("map components stop below the determining degree", *det);
  for (int m = 0; m <= D; ++m) {
    if (static_cast<int>(components_[m].size()) != source_->size(m))
      throw InvariantError("component size mismatch in degree " + std::to_string(m));
    for (int y : components_[m])
      if (y < 0 || y >= target_->size(m)) throw InvariantError("component value out of range");
  }
}

Components extendComponents(const SimplicialSet& S, const SimplicialSet& T, Components comps, int d) {
  std::vector<int> faces;
  for (int m = static_cast<int>(comps.size()); m <= d; ++m) {
    std::vector<int> row(S.size(m));
    faces.resize(m + 1);
    for (int x = 0; x < S.size(m); ++x) {
      int j = S.degeneracyIndex(m, x);
      if (j >= 0) {
        row[x] = T.degen(m - 1, j, comps[m - 1][S.face(m, j, x)]);
      } else {
        for (int i = 0; i <= m; ++i) faces[i] = comps[m - 1][S.face(m, i, x)];
        auto c = T.cellsWithFaces(m, faces);
        if (c.size() != 1) throw EngineDefect("map extension is not determined in degree " + std::to_string(m));
        row[x] = c[0];
      }
    }
    comps.push_back(std::move(row));
  }
  return comps;
}

SimplicialMap SimplicialMap::extended(int d) const {
  if (d <= degree()) return *this;
  auto S = extendTo(source_, d);
  auto T = extendTo(target_, d);
  return SimplicialMap(S, T, extendComponents(*S, *T, components_, d));
}

std::optional<std::string> SimplicialMap::checkSimplicial() const {
  const int D = degree();
  for (int m = 1; m <= D; ++m)
    for (int x = 0; x < source_->size(m); ++x)
      for (int i = 0; i <= m; ++i)
        if (components_[m - 1][source_->face(m, i, x)] != target_->face(m, i, components_[m][x]))
          return "d" + std::to_string(i) + " not preserved at '" + source_->name(m, x) + "'";
  for (int m = 0; m < D; ++m)
    for (int x = 0; x < source_->size(m); ++x)
      for (int j = 0; j <= m; ++j)
        if (components_[m + 1][source_->degen(m, j, x)] != target_->degen(m, j, components_[m][x]))
          return "s" + std::to_string(j) + " not preserved at '" + source_->name(m, x) + "'";
  return std::nullopt;
}

bool SimplicialMap::injective() const {
  auto f = extended(source_->cap());
  for (int m = 0; m <= f.degree(); ++m) {
    std::vector<char> seen(f.target()->size(m), 0);
    for (int y : f.components()[m]) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

bool SimplicialMap::surjective() const {
  int D = std::max(source_->cap(), target_->cap());
  if (target_->coskeletal()) {
    D += 2;
    note("surjectivity onto a coskeletal target checked through degree " + std::to_string(D));
  }
  auto f = extended(D);
  for (int m = 0; m <= D; ++m) {
    std::vector<char> seen(f.target()->size(m), 0);
    for (int y : f.components()[m]) seen[y] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

bool sameObject(const SSetPtr& a, const SSetPtr& b) {
  if (a == b) return true;
  int d = std::max(a->cap(), b->cap());
  if (a->extension() != b->extension()) ++d;
  return extendTo(a, d)->samePrefix(*extendTo(b, d), d);
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!sameObject(f.target(), g.source())) throw PreconditionError("compose: target of f differs from source of g");
  SSetPtr src = f.source(), tgt = g.target();
  int d;
  if (auto det = determiningDegree(*src, *tgt)) {
    d = *det;
  } else {
    auto al = alignForMaps(src, tgt);
    src = al.source;
    tgt = al.target;
    d = al.degree;
  }
  d = std::max(d, std::max(f.degree(), g.degree()));
  auto fe = f.extended(d);
  auto ge = g.extended(d);
  Components comps(d + 1);
  for (int m = 0; m <= d; ++m) {
    comps[m].resize(fe.components()[m].size());
    for (std::size_t x = 0; x < comps[m].size(); ++x) comps[m][x] = ge.components()[m][fe.components()[m][x]];
  }
  return SimplicialMap(extendTo(src, d), extendTo(tgt, d), std::move(comps));
}

SimplicialMap identity(const SSetPtr& x) {
  Components comps(x->cap() + 1);
  for (int m = 0; m <= x->cap(); ++m) {
    comps[m].resize(x->size(m));
    std::iota(comps[m].begin(), comps[m].end(), 0);
  }
  return SimplicialMap(x, x, std::move(comps));
}

SimplicialMap toTerminal(const SSetPtr& x, const SSetPtr& terminal) {
  auto al = alignForMaps(x, terminal);
  Components comps(al.degree + 1);
  for (int m = 0; m <= al.degree; ++m) {
    if (al.target->size(m) != 1) throw PreconditionError("toTerminal: target is not terminal");
    comps[m].assign(al.source->size(m), 0);
  }
  return SimplicialMap(al.source, al.target, std::move(comps));
}

SimplicialMap fromInitial(const SSetPtr& empty, const SSetPtr& x) {
  auto al = alignForMaps(empty, x);
  Components comps(al.degree + 1);
  for (int m = 0; m <= al.degree; ++m)
    if (al.source->size(m) != 0) throw PreconditionError("fromInitial: source is not empty");
  return SimplicialMap(al.source, al.target, std::move(comps));
}

bool sameMap(const SimplicialMap& f, const SimplicialMap& g) {
  if (!sameObject(f.source(), g.source()) || !sameObject(f.target(), g.target())) return false;
  int d = std::max(f.degree(), g.degree());
  return f.extended(d).components() == g.extended(d).components();
}

Aligned alignForMaps(const SSetPtr& src, const SSetPtr& tgt) {
  SSetPtr s = src, t = tgt;
  auto det = determiningDegree(*s, *t);
  if (!det) {
    try {
      t = asCoskeletal(tgt);
    } catch (const CapError&) {
      s = asSkeletal(src);
    }
    det = determiningDegree(*s, *t);
    note("extension policy converted by bounded detection to determine maps");
  }
  const int d = *det;
  return {extendTo(s, d), extendTo(t, d), d};
}

}  // namespace sset
