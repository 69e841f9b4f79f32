#include "sset/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace sset::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

const Json& arrayAt(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

int intAt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string stringAt(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Json parseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Extension parseExtension(const std::string& s, const std::string& path) {
  if (s == "skeletal") return Extension::Skeletal;
  if (s == "coskeletal") return Extension::Coskeletal;
  fail(path, "extension must be 'skeletal' or 'coskeletal'");
}

/// Canonical order of cells per degree and the inverse permutation.
struct Order {
  std::vector<std::vector<std::string>> ids;
  std::vector<std::vector<int>> sorted;    // position -> cell
  std::vector<std::vector<int>> position;  // cell -> position
};

Order canonicalOrder(const SSetPtr& x) {
  Order o;
  o.ids = canonicalIds(x);
  for (int m = 0; m <= x->cap(); ++m) {
    std::vector<int> cells(x->size(m));
    for (int c = 0; c < x->size(m); ++c) cells[c] = c;
    std::sort(cells.begin(), cells.end(), [&](int a, int b) { return o.ids[m][a] < o.ids[m][b]; });
    std::vector<int> pos(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) pos[cells[k]] = static_cast<int>(k);
    o.sorted.push_back(std::move(cells));
    o.position.push_back(std::move(pos));
  }
  return o;
}

std::map<std::string, int> idIndex(const Order& o, int m) {
  std::map<std::string, int> out;
  for (std::size_t c = 0; c < o.ids[m].size(); ++c) out[o.ids[m][c]] = static_cast<int>(c);
  return out;
}

}  // namespace

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot write file");
  out << text;
}

std::string canonical(const Json& j) { return j.dump() + "\n"; }

std::vector<std::vector<std::string>> canonicalIds(const SSetPtr& x) {
  std::vector<std::vector<std::string>> ids(x->cap() + 1);
  for (int m = 0; m <= x->cap(); ++m) {
    std::map<std::string, int> seen;
    for (int c = 0; c < x->size(m); ++c) {
      std::string id = x->name(m, c);
      if (id.empty()) id = std::to_string(c);
      if (int k = seen[id]++; k > 0) id += "#" + std::to_string(k);
      ids[m].push_back(id);
    }
  }
  return ids;
}

// ---------------------------------------------------------------------------
// SSX
// ---------------------------------------------------------------------------

Json ssxJson(const SSetPtr& x) {
  auto o = canonicalOrder(x);
  Json cells = Json::array(), faces = Json::array(), degens = Json::array();
  for (int m = 0; m <= x->cap(); ++m) {
    Json row = Json::array();
    for (int c : o.sorted[m]) row.push_back(o.ids[m][c]);
    cells.push_back(row);
    Json fm = Json::array();
    for (int i = 0; m > 0 && i <= m; ++i) {
      Json col = Json::array();
      for (int c : o.sorted[m]) col.push_back(o.ids[m - 1][x->face(m, i, c)]);
      fm.push_back(col);
    }
    faces.push_back(fm);
    Json dm = Json::array();
    for (int j = 0; m < x->cap() && j <= m; ++j) {
      Json col = Json::array();
      for (int c : o.sorted[m]) col.push_back(o.ids[m + 1][x->degen(m, j, c)]);
      dm.push_back(col);
    }
    degens.push_back(dm);
  }
  return Json{{"cap", x->cap()},
              {"extension", toString(x->extension())},
              {"cells", cells},
              {"faces", faces},
              {"degeneracies", degens}};
}

SSetPtr ssxFromJson(const Json& j, const std::string& path) {
  const int cap = intAt(field(j, "cap", path), path + "/cap");
  if (cap < 0) fail(path + "/cap", "cap must be nonnegative");
  const auto ext = parseExtension(stringAt(field(j, "extension", path), path + "/extension"), path + "/extension");
  const auto& cells = arrayAt(field(j, "cells", path), path + "/cells");
  const auto& faces = arrayAt(field(j, "faces", path), path + "/faces");
  const auto& degens = arrayAt(field(j, "degeneracies", path), path + "/degeneracies");
  const auto sz = static_cast<std::size_t>(cap + 1);
  if (cells.size() != sz) fail(path + "/cells", "expected " + std::to_string(sz) + " degrees");
  if (faces.size() != sz) fail(path + "/faces", "expected " + std::to_string(sz) + " degrees");
  if (degens.size() != sz) fail(path + "/degeneracies", "expected " + std::to_string(sz) + " degrees");

  std::vector<std::map<std::string, int>> index(sz);
  std::vector<Level> levels(sz);
  for (int m = 0; m <= cap; ++m) {
    const std::string p = path + "/cells/" + std::to_string(m);
    const auto& row = arrayAt(cells[m], p);
    for (std::size_t c = 0; c < row.size(); ++c) {
      auto id = stringAt(row[c], p + "/" + std::to_string(c));
      if (!index[m].emplace(id, static_cast<int>(c)).second) fail(p + "/" + std::to_string(c), "duplicate id '" + id + "'");
      levels[m].names.push_back(id);
    }
  }
  auto table = [&](const Json& arr, const std::string& p, int m, int count, int into, std::vector<std::vector<int>>& out) {
    arrayAt(arr, p);
    if (static_cast<int>(arr.size()) != count) fail(p, "expected " + std::to_string(count) + " maps");
    for (int i = 0; i < count; ++i) {
      const std::string pi = p + "/" + std::to_string(i);
      const auto& col = arrayAt(arr[i], pi);
      if (col.size() != levels[m].names.size()) fail(pi, "expected one entry per cell");
      std::vector<int> v;
      for (std::size_t c = 0; c < col.size(); ++c) {
        auto id = stringAt(col[c], pi + "/" + std::to_string(c));
        auto it = index[into].find(id);
        if (it == index[into].end()) fail(pi + "/" + std::to_string(c), "unknown cell '" + id + "' in degree " + std::to_string(into));
        v.push_back(it->second);
      }
      out.push_back(std::move(v));
    }
  };
  for (int m = 0; m <= cap; ++m) {
    table(faces[m], path + "/faces/" + std::to_string(m), m, m == 0 ? 0 : m + 1, std::max(m - 1, 0), levels[m].faces);
    table(degens[m], path + "/degeneracies/" + std::to_string(m), m, m == cap ? 0 : m + 1, std::min(m + 1, cap),
          levels[m].degens);
  }
  SSetPtr x;
  try {
    x = SimplicialSet::make(ext, std::move(levels));
  } catch (const InvariantError& e) {
    fail(path, e.what());
  }
  if (auto err = x->checkIdentities()) fail(path, "simplicial identity violated: " + *err);
  return x;
}

std::string serializeSSX(const SSetPtr& x) { return canonical(ssxJson(x)); }
SSetPtr parseSSX(const std::string& text) { return ssxFromJson(parseText(text)); }

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

Json componentsJson(const SimplicialMap& f) {
  auto so = canonicalOrder(f.source());
  auto tIds = canonicalIds(f.target());
  const int d = f.degree();
  Json out = Json::array();
  for (int m = 0; m <= d; ++m) {
    Json row = Json::array();
    for (int c : so.sorted[m]) row.push_back(tIds[m][f(m, c)]);
    out.push_back(row);
  }
  return out;
}

SimplicialMap componentsFromJson(const Json& j, const SSetPtr& src, const SSetPtr& tgt, const std::string& path) {
  arrayAt(j, path);
  const int d = static_cast<int>(j.size()) - 1;
  if (d < 0) fail(path, "expected components from degree 0");
  if (d > 8) fail(path, "components above degree 8 are not supported");
  if ((d > src->cap() && src->skeletal() && tgt->skeletal()) || (d > tgt->cap() && tgt->skeletal()))
    fail(path, "components exceed the stored caps");
  SSetPtr source = src, target = tgt;
  if (!determiningDegree(*src, *tgt)) {
    try {
      auto al = alignForMaps(src, tgt);
      source = al.source;
      target = al.target;
    } catch (const CapError& e) {
      fail(path, e.what());
    }
  }
  source = extendTo(source, d);
  target = extendTo(target, d);
  auto so = canonicalOrder(source), to = canonicalOrder(target);
  Components comps(d + 1);
  for (int m = 0; m <= d; ++m) {
    const std::string p = path + "/" + std::to_string(m);
    const auto& row = arrayAt(j[m], p);
    if (static_cast<int>(row.size()) != source->size(m)) fail(p, "expected one entry per source cell");
    auto tIndex = idIndex(to, m);
    comps[m].assign(source->size(m), -1);
    for (int k = 0; k < source->size(m); ++k) {
      auto id = stringAt(row[k], p + "/" + std::to_string(k));
      auto it = tIndex.find(id);
      if (it == tIndex.end()) fail(p + "/" + std::to_string(k), "unknown target cell '" + id + "'");
      comps[m][so.sorted[m][k]] = it->second;
    }
  }
  try {
    SimplicialMap f(source, target, std::move(comps));
    if (auto err = f.checkSimplicial()) fail(path, "not simplicial: " + *err);
    return f;
  } catch (const CapError& e) {
    fail(path, e.what());
  } catch (const InvariantError& e) {
    fail(path, e.what());
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  }
}

Json mapJson(const SimplicialMap& f) {
  return Json{{"source", ssxJson(f.source())}, {"target", ssxJson(f.target())}, {"components", componentsJson(f)}};
}

SimplicialMap mapFromJson(const Json& j, const std::string& path) {
  auto s = ssxFromJson(field(j, "source", path), path + "/source");
  auto t = ssxFromJson(field(j, "target", path), path + "/target");
  return componentsFromJson(field(j, "components", path), s, t, path + "/components");
}

std::string serializeMap(const SimplicialMap& f) { return canonical(mapJson(f)); }
SimplicialMap parseMap(const std::string& text) { return mapFromJson(parseText(text)); }

// ---------------------------------------------------------------------------
// PRX
// ---------------------------------------------------------------------------

Json prxJson(const ProPtr& c) {
  const auto& I = c->index();
  Json order = Json::array();
  for (int a = 0; a < I.size(); ++a)
    for (int b = 0; b < I.size(); ++b)
      if (a != b && I.leq[a][b]) order.push_back(Json::array({I.elements[a], I.elements[b]}));
  Json levels = Json::object(), bonds = Json::object();
  for (int a = 0; a < I.size(); ++a) levels[I.elements[a]] = ssxJson(c->level(a));
  for (int a = 0; a < I.size(); ++a)
    for (int b = 0; b < I.size(); ++b)
      if (a != b && I.leq[a][b]) bonds[I.elements[a] + "<=" + I.elements[b]] = componentsJson(c->bond(a, b));
  return Json{{"index",
               {{"elements", I.elements},
                {"order", order},
                {"flavor", I.kind == IndexPoset::Kind::Tower ? "tower" : "poset"}}},
              {"levels", levels},
              {"bonds", bonds}};
}

ProPtr prxFromJson(const Json& j, const std::string& path) {
  const auto& idx = field(j, "index", path);
  const std::string ip = path + "/index";
  IndexPoset I;
  const auto& els = arrayAt(field(idx, "elements", ip), ip + "/elements");
  for (std::size_t k = 0; k < els.size(); ++k) {
    auto e = stringAt(els[k], ip + "/elements/" + std::to_string(k));
    if (I.find(e)) fail(ip + "/elements/" + std::to_string(k), "duplicate element '" + e + "'");
    I.elements.push_back(e);
  }
  const int n = I.size();
  if (n == 0) fail(ip + "/elements", "index poset is empty");
  I.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) I.leq[a][a] = true;
  const auto& order = arrayAt(field(idx, "order", ip), ip + "/order");
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string p = ip + "/order/" + std::to_string(k);
    const auto& pr = arrayAt(order[k], p);
    if (pr.size() != 2) fail(p, "expected a pair");
    auto a = I.find(stringAt(pr[0], p + "/0")), b = I.find(stringAt(pr[1], p + "/1"));
    if (!a || !b) fail(p, "unknown element");
    I.leq[*a][*b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (I.leq[a][k] && I.leq[k][b]) I.leq[a][b] = true;
  if (auto it = idx.find("flavor"); it != idx.end()) {
    auto fl = stringAt(*it, ip + "/flavor");
    if (fl == "tower") {
      I.kind = IndexPoset::Kind::Tower;
      I.towerBound = n - 1;
      if (!(I == IndexPoset::tower(n - 1))) fail(ip, "tower index must have elements 0..N with a <= b iff a >= b");
    } else if (fl != "poset") {
      fail(ip + "/flavor", "flavor must be 'poset' or 'tower'");
    }
  }
  if (auto err = I.validate()) fail(ip, *err);

  const auto& lv = field(j, "levels", path);
  std::vector<SSetPtr> levels;
  for (auto& e : I.elements) levels.push_back(ssxFromJson(field(lv, e, path + "/levels"), path + "/levels/" + e));
  std::map<std::pair<int, int>, SimplicialMap> bonds;
  const auto& bj = field(j, "bonds", path);
  if (!bj.is_object()) fail(path + "/bonds", "expected an object");
  for (auto it = bj.begin(); it != bj.end(); ++it) {
    const std::string p = path + "/bonds/" + it.key();
    const auto sep = it.key().find("<=");
    if (sep == std::string::npos) fail(p, "bond keys have the form 'a<=b'");
    auto a = I.find(it.key().substr(0, sep)), b = I.find(it.key().substr(sep + 2));
    if (!a || !b) fail(p, "unknown element");
    if (!I.leq[*a][*b]) fail(p, "elements are not comparable");
    bonds.emplace(std::make_pair(*a, *b), componentsFromJson(it.value(), levels[*a], levels[*b], p));
  }
  try {
    return std::make_shared<const ProObject>(I, levels, bonds);
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  } catch (const InvariantError& e) {
    fail(path, e.what());
  }
}

std::string serializePRX(const ProPtr& c) { return canonical(prxJson(c)); }
ProPtr parsePRX(const std::string& text) { return prxFromJson(parseText(text)); }

Json proMapJson(const ProMap& f) {
  return Json{{"source", prxJson(f.source())}, {"target", prxJson(f.target())}, {"bottom", componentsJson(f.bottom())}};
}

ProMap proMapFromJson(const Json& j, const std::string& path) {
  auto s = prxFromJson(field(j, "source", path), path + "/source");
  auto t = prxFromJson(field(j, "target", path), path + "/target");
  auto b = componentsFromJson(field(j, "bottom", path), s->bottomLevel(), t->bottomLevel(), path + "/bottom");
  try {
    return ProMap::fromBottom(s, t, b);
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  }
}

ProMap parseProMap(const std::string& text) { return proMapFromJson(parseText(text)); }

// ---------------------------------------------------------------------------
// BSX
// ---------------------------------------------------------------------------

Json bsxJson(const BSetPtr& x) {
  Json rows = Json::array(), faces = Json::array(), degens = Json::array();
  for (int t = 0; t <= x->outerCap(); ++t) {
    rows.push_back(ssxJson(x->row(t)));
    Json ft = Json::array(), dt = Json::array();
    for (int i = 0; t > 0 && i <= t; ++i) ft.push_back(componentsJson(x->outerFace(t, i)));
    for (int k = 0; t < x->outerCap() && k <= t; ++k) dt.push_back(componentsJson(x->outerDegen(t, k)));
    faces.push_back(ft);
    degens.push_back(dt);
  }
  return Json{{"outerCap", x->outerCap()},
              {"outerExtension", toString(x->outerExtension())},
              {"rows", rows},
              {"outerFaces", faces},
              {"outerDegeneracies", degens}};
}

BSetPtr bsxFromJson(const Json& j, const std::string& path) {
  const int cap = intAt(field(j, "outerCap", path), path + "/outerCap");
  if (cap < 0) fail(path + "/outerCap", "outer cap must be nonnegative");
  const auto ext =
      parseExtension(stringAt(field(j, "outerExtension", path), path + "/outerExtension"), path + "/outerExtension");
  const auto& rj = arrayAt(field(j, "rows", path), path + "/rows");
  const auto& fj = arrayAt(field(j, "outerFaces", path), path + "/outerFaces");
  const auto& dj = arrayAt(field(j, "outerDegeneracies", path), path + "/outerDegeneracies");
  const auto sz = static_cast<std::size_t>(cap + 1);
  if (rj.size() != sz || fj.size() != sz || dj.size() != sz) fail(path, "expected " + std::to_string(sz) + " outer degrees");
  std::vector<SSetPtr> rows;
  for (std::size_t t = 0; t < sz; ++t) rows.push_back(ssxFromJson(rj[t], path + "/rows/" + std::to_string(t)));
  std::vector<std::vector<SimplicialMap>> faces(sz), degens(sz);
  for (int t = 0; t <= cap; ++t) {
    const std::string pf = path + "/outerFaces/" + std::to_string(t), pd = path + "/outerDegeneracies/" + std::to_string(t);
    const auto& ft = arrayAt(fj[t], pf);
    const auto& dt = arrayAt(dj[t], pd);
    if (static_cast<int>(ft.size()) != (t == 0 ? 0 : t + 1)) fail(pf, "wrong number of outer faces");
    if (static_cast<int>(dt.size()) != (t == cap ? 0 : t + 1)) fail(pd, "wrong number of outer degeneracies");
    for (std::size_t i = 0; i < ft.size(); ++i)
      faces[t].push_back(componentsFromJson(ft[i], rows[t], rows[t - 1], pf + "/" + std::to_string(i)));
    for (std::size_t k = 0; k < dt.size(); ++k)
      degens[t].push_back(componentsFromJson(dt[k], rows[t], rows[t + 1], pd + "/" + std::to_string(k)));
  }
  try {
    auto x = std::make_shared<const BisimplicialSet>(ext, rows, faces, degens);
    if (auto err = x->checkIdentities()) fail(path, "bisimplicial identity violated: " + *err);
    return x;
  } catch (const InvariantError& e) {
    fail(path, e.what());
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  } catch (const CapError& e) {
    fail(path, e.what());
  }
}

std::string serializeBSX(const BSetPtr& x) { return canonical(bsxJson(x)); }
BSetPtr parseBSX(const std::string& text) { return bsxFromJson(parseText(text)); }

Json bsxMapJson(const BisimplicialMap& f) {
  Json rows = Json::array();
  for (auto& r : f.rows) rows.push_back(componentsJson(r));
  return Json{{"source", bsxJson(f.source)}, {"target", bsxJson(f.target)}, {"rows", rows}};
}

BisimplicialMap bsxMapFromJson(const Json& j, const std::string& path) {
  BisimplicialMap f;
  f.source = bsxFromJson(field(j, "source", path), path + "/source");
  f.target = bsxFromJson(field(j, "target", path), path + "/target");
  const auto& rows = arrayAt(field(j, "rows", path), path + "/rows");
  const auto expected = static_cast<std::size_t>(std::min(f.source->outerCap(), f.target->outerCap()) + 1);
  if (rows.size() != expected) fail(path + "/rows", "expected " + std::to_string(expected) + " rows");
  for (std::size_t t = 0; t < rows.size(); ++t)
    f.rows.push_back(componentsFromJson(rows[t], f.source->row(static_cast<int>(t)), f.target->row(static_cast<int>(t)),
                                        path + "/rows/" + std::to_string(t)));
  if (auto err = f.check()) fail(path, *err);
  return f;
}

// ---------------------------------------------------------------------------
// FTP
// ---------------------------------------------------------------------------

FtpFile parseFTP(const std::string& text, const std::string& baseDir) {
  auto j = parseText(text);
  FtpFile out;
  if (auto it = j.find("flavor"); it != j.end()) {
    try {
      out.flavor = parseFlavor(stringAt(*it, "/flavor"));
    } catch (const PreconditionError& e) {
      fail("/flavor", e.what());
    }
  }
  std::map<std::string, SSetPtr> objects;
  const auto& oj = field(j, "objects", "");
  if (!oj.is_object()) fail("/objects", "expected an object");
  for (auto it = oj.begin(); it != oj.end(); ++it) {
    const std::string p = "/objects/" + it.key();
    if (it.value().is_object() && it.value().contains("ref")) {
      auto file = (std::filesystem::path(baseDir) / stringAt(it.value()["ref"], p + "/ref")).string();
      try {
        objects[it.key()] = parseSSX(readFile(file));
      } catch (const ParseError& e) {
        fail(p, std::string("in ") + file + ": " + e.what());
      }
    } else {
      objects[it.key()] = ssxFromJson(it.value(), p);
    }
  }
  auto lookup = [&](const Json& name, const std::string& p) {
    auto s = stringAt(name, p);
    auto it = objects.find(s);
    if (it == objects.end()) fail(p, "unknown object '" + s + "'");
    return it;
  };
  auto& P = out.presentation;
  std::map<std::string, int> ambientIndex;
  auto addAmbient = [&](const Json& name, const std::string& p) {
    auto it = lookup(name, p);
    auto [pos, fresh] = ambientIndex.emplace(it->first, static_cast<int>(P.ambient.size()));
    if (fresh) {
      P.ambient.push_back(it->second);
      out.ambientNames.push_back(it->first);
    }
    return pos->second;
  };
  const auto& tj = arrayAt(field(j, "tests", ""), "/tests");
  for (std::size_t k = 0; k < tj.size(); ++k) P.tests.push_back(addAmbient(tj[k], "/tests/" + std::to_string(k)));
  if (auto it = j.find("ambient"); it != j.end()) {
    arrayAt(*it, "/ambient");
    for (std::size_t k = 0; k < it->size(); ++k) addAmbient((*it)[k], "/ambient/" + std::to_string(k));
  }
  const int genCap = out.generatorCap = j.contains("generatorCap") ? intAt(j["generatorCap"], "/generatorCap") : 2;
  const bool inherited = j.contains("inherited") && j["inherited"].is_boolean() && j["inherited"].get<bool>();
  if (inherited && !j.contains("fibrations")) {
    std::vector<SSetPtr> tests, extra;
    for (int t : P.tests) tests.push_back(P.ambient[t]);
    for (std::size_t a = 0; a < P.ambient.size(); ++a)
      if (std::find(P.tests.begin(), P.tests.end(), static_cast<int>(a)) == P.tests.end()) extra.push_back(P.ambient[a]);
    auto names = out.ambientNames;
    std::vector<std::string> reordered;
    for (int t : P.tests) reordered.push_back(names[t]);
    for (std::size_t a = 0; a < names.size(); ++a)
      if (std::find(P.tests.begin(), P.tests.end(), static_cast<int>(a)) == P.tests.end()) reordered.push_back(names[a]);
    try {
      P = inheritedPresentation(tests, out.flavor, genCap, extra);
    } catch (const PreconditionError& e) {
      fail("/tests", e.what());
    }
    out.ambientNames = reordered;
    return out;
  }
  const auto& fj = arrayAt(field(j, "fibrations", ""), "/fibrations");
  for (std::size_t k = 0; k < fj.size(); ++k) {
    const std::string p = "/fibrations/" + std::to_string(k);
    auto s = lookup(field(fj[k], "source", p), p + "/source");
    auto t = lookup(field(fj[k], "target", p), p + "/target");
    P.fibrations.push_back(componentsFromJson(field(fj[k], "components", p), s->second, t->second, p + "/components"));
    if (fj[k].contains("trivial") && fj[k]["trivial"].is_boolean() && fj[k]["trivial"].get<bool>())
      P.trivialFibrations.push_back(static_cast<int>(k));
  }
  P.generators = defaultGenerators(out.flavor, genCap);
  if (inherited) P.inherited = out.flavor;
  if (auto err = P.validate()) fail("", "invalid presentation: " + *err);
  return out;
}

std::string serializeFTP(const FtpFile& f) {
  const auto& P = f.presentation;
  Json objects = Json::object(), tests = Json::array(), ambient = Json::array(), fibs = Json::array();
  for (std::size_t a = 0; a < P.ambient.size(); ++a) {
    objects[f.ambientNames[a]] = ssxJson(P.ambient[a]);
    ambient.push_back(f.ambientNames[a]);
  }
  for (int t : P.tests) tests.push_back(f.ambientNames[t]);
  auto nameOf = [&](const SSetPtr& x) {
    for (std::size_t a = 0; a < P.ambient.size(); ++a)
      if (sameObject(P.ambient[a], x)) return f.ambientNames[a];
    throw PreconditionError("fibration endpoint is not an ambient object");
  };
  for (std::size_t i = 0; i < P.fibrations.size(); ++i) {
    const bool trivial =
        std::find(P.trivialFibrations.begin(), P.trivialFibrations.end(), static_cast<int>(i)) != P.trivialFibrations.end();
    fibs.push_back(Json{{"source", nameOf(P.fibrations[i].source())},
                        {"target", nameOf(P.fibrations[i].target())},
                        {"components", componentsJson(P.fibrations[i])},
                        {"trivial", trivial}});
  }
  return canonical(Json{{"flavor", toString(f.flavor)},
                        {"objects", objects},
                        {"tests", tests},
                        {"ambient", ambient},
                        {"fibrations", fibs},
                        {"generatorCap", f.generatorCap},
                        {"inherited", P.inherited.has_value()}});
}

}  // namespace sset::io
