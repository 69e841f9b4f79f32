#include "sset/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/io.hpp"
#include "sset/lifting.hpp"
#include "sset/ops.hpp"
#include "sset/pro.hpp"
#include "sset/segal.hpp"
#include "sset/verifier.hpp"

namespace sset::cli {

using io::Json;

std::optional<std::string> Config::validate() const {
  if (degreeCap <= 0) return "degreeCap must be positive";
  if (towerBound <= 0) return "towerBound must be positive";
  if (searchBudget == 0) return "searchBudget must be positive";
  if (outputFormat != "json" && outputFormat != "text") return "outputFormat must be json or text";
  return std::nullopt;
}

Config loadConfig(const std::string& path) {
  Json j;
  try {
    j = Json::parse(io::readFile(path));
  } catch (const Json::exception& e) {
    throw io::ParseError(path + ": " + e.what());
  }
  if (!j.is_object()) throw io::ParseError(path + ": config must be a JSON object");
  Config c;
  try {
    if (j.contains("degreeCap")) c.degreeCap = j["degreeCap"].get<int>();
    if (j.contains("towerBound")) c.towerBound = j["towerBound"].get<int>();
    if (j.contains("searchBudget")) c.searchBudget = j["searchBudget"].get<std::uint64_t>();
    if (j.contains("flavor")) c.flavor = parseFlavor(j["flavor"].get<std::string>());
    if (j.contains("outputFormat")) c.outputFormat = j["outputFormat"].get<std::string>();
  } catch (const Json::exception& e) {
    throw io::ParseError(path + ": " + e.what());
  }
  return c;
}

namespace {

/// A definitive answer or "unknown" from one subcommand.
struct Outcome {
  Json report;
  bool unknown = false;
};

SSetPtr loadSSX(const std::string& path) {
  try {
    return io::parseSSX(io::readFile(path));
  } catch (const io::ParseError& e) {
    throw io::ParseError(path + ": " + e.what());
  }
}

template <class F>
auto loadWith(const std::string& path, F&& parse) {
  try {
    return parse(io::readFile(path));
  } catch (const io::ParseError& e) {
    throw io::ParseError(path + ": " + e.what());
  }
}

void writeOrPrint(const std::string& path, const std::string& text, Json& report, std::ostream& out) {
  if (path.empty()) {
    out << text;
    report = Json();
  } else {
    io::writeFile(path, text);
    report["output"] = path;
  }
}

Json countsJson(const SSetPtr& x, int through) {
  Json a = Json::array();
  for (int m = 0; m <= through; ++m) a.push_back(cellCount(x, m));
  return a;
}

const FiniteCategory& categoryByName(const std::string& name) {
  static const auto z = cat::zoo();
  for (auto& c : z)
    if (c.name == name) return c;
  std::string known;
  for (auto& c : z) known += (known.empty() ? "" : ", ") + c.name;
  throw PreconditionError("unknown category '" + name + "' (known: " + known + ")");
}

Json squareJson(const LiftingSquare& sq, const std::string& generator) {
  Json j;
  j["generator"] = generator;
  j["top"] = io::componentsJson(sq.top);
  j["bottom"] = io::componentsJson(sq.bottom);
  std::string text = "square " + generator + ": top sends vertices [";
  auto t = sq.top.extended(0);
  for (int v = 0; v < cellCount(t.source(), 0); ++v) text += (v ? "," : "") + t.target()->name(0, t(0, v));
  text += "], bottom sends vertices [";
  auto b = sq.bottom.extended(0);
  for (int v = 0; v < cellCount(b.source(), 0); ++v) text += (v ? "," : "") + b.target()->name(0, b(0, v));
  j["description"] = text + "]";
  return j;
}

int vertexByName(const SSetPtr& x, const std::string& name) {
  if (auto v = x->find(0, name)) return *v;
  try {
    std::size_t used = 0;
    const int v = std::stoi(name, &used);
    if (used == name.size() && v >= 0 && v < x->size(0)) return v;
  } catch (const std::exception&) {
  }
  throw PreconditionError("no vertex named '" + name + "'");
}

void emit(const Json& report, const std::string& format, std::ostream& out) {
  if (report.is_null()) return;
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  std::function<void(const Json&, const std::string&)> walk = [&](const Json& j, const std::string& prefix) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else {
      out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  };
  walk(report, "");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* path = std::getenv("SSET_CONFIG"); path && *path) {
    try {
      cfg = loadConfig(path);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

  CLI::App app{"Finite and lean simplicial sets: construction, classification and homotopy checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string flavorFlag, formatFlag;
  int capFlag = 0, towerFlag = 0;
  std::uint64_t budgetFlag = 0;
  app.add_option("--flavor", flavorFlag, "kq or joyal");
  app.add_option("--cap", capFlag, "degree cap for generating sets");
  app.add_option("--budget", budgetFlag, "search budget (nodes)");
  app.add_option("--tower-bound", towerFlag, "tower bound for pro-completions");
  app.add_option("--format", formatFlag, "json or text");

  std::function<Outcome()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // build
  std::string buildKind, outPath;
  std::vector<std::string> buildParams;
  {
    auto* s = sub(&app, "build", "build a standard object (delta, boundary, horn, spine, jNerve, walkingH, rKanTwo, "
                                 "nerve, discrete, point, empty, css)");
    s->add_option("kind", buildKind)->required();
    s->add_option("params", buildParams);
    s->add_option("-o,--output", outPath);
    s->callback([&] {
      action = [&]() -> Outcome {
        Json rep{{"kind", buildKind}};
        if (buildKind == "css") {
          if (buildParams.size() != 1) throw PreconditionError("css expects a category name");
          auto x = discreteNerve(categoryByName(buildParams[0]));
          rep["outerCap"] = x->outerCap();
          writeOrPrint(outPath, io::serializeBSX(x), rep, out);
          return {rep};
        }
        SSetPtr x;
        if (buildKind == "nerve") {
          if (buildParams.size() != 1) throw PreconditionError("nerve expects a category name");
          x = nerve(categoryByName(buildParams[0]));
        } else if (buildKind == "point") {
          x = point();
        } else if (buildKind == "empty") {
          x = emptySet();
        } else {
          std::vector<int> p;
          for (auto& s : buildParams) {
            try {
              p.push_back(std::stoi(s));
            } catch (const std::exception&) {
              throw PreconditionError("parameter '" + s + "' is not an integer");
            }
          }
          if (buildKind == "discrete") {
            if (p.size() != 1) throw PreconditionError("discrete expects one integer parameter");
            x = discreteSet(p[0]);
          } else {
            x = buildStandard(parseStandardKind(buildKind), p);
          }
        }
        rep["cells"] = countsJson(x, x->cap());
        rep["extension"] = toString(x->extension());
        writeOrPrint(outPath, io::serializeSSX(x), rep, out);
        return {rep};
      };
    });
  }

  // classify
  std::string inPath;
  bool fibrancy = false;
  {
    auto* s = sub(&app, "classify", "classify a simplicial set");
    s->add_option("file", inPath)->required();
    s->add_flag("--fibrancy", fibrancy, "also test the Kan and quasi-category conditions");
    s->callback([&] {
      action = [&]() -> Outcome {
        auto x = loadSSX(inPath);
        auto c = classify(x);
        Json rep{{"isFiniteComplex", c.isFiniteComplex},
                 {"isLean", c.isLean},
                 {"coskeletalDegree", c.coskeletalDegree ? Json(*c.coskeletalDegree) : Json("none")},
                 {"skeletalDegree", c.skeletalDegree ? Json(*c.skeletalDegree) : Json("none")},
                 {"nondegenerateCounts", c.nondegenerateCounts},
                 {"cellCounts", c.cellCounts},
                 {"notes", c.notes}};
        if (fibrancy) {
          rep["isKanComplex"] = isKanComplex(x);
          rep["isQuasiCategory"] = isQuasiCategory(x);
        }
        return {rep};
      };
    });
  }

  // lift
  std::string mapPath, family = "kanHorns", kindName, witnessPath;
  {
    auto* s = sub(&app, "lift", "right lifting property of a map against a generating set, or a map class");
    s->add_option("map", mapPath)->required();
    s->add_option("--family", family, "kanHorns, boundaries, innerHorns, joyalM, rKanTwo, twoToPoint");
    s->add_option("--kind", kindName, "kanFibration, trivialFibration, innerFibration, categoricalFibration, monomorphism");
    s->add_option("--witness", witnessPath, "write the witness square's top map here");
    s->callback([&] {
      action = [&]() -> Outcome {
        auto p = loadWith(mapPath, io::parseMap);
        Json rep;
        std::optional<LiftingWitness> w;
        bool holds;
        if (!kindName.empty()) {
          auto c = classifyMap(p, parseMapKind(kindName));
          holds = c.holds;
          w = c.witness;
          rep["kind"] = kindName;
          rep["detail"] = c.detail;
        } else {
          auto v = hasRLP(p, GeneratingSet{parseGeneratorFamily(family), cfg.degreeCap});
          holds = v.holds;
          w = v.witness;
          rep["family"] = family;
          rep["squaresChecked"] = v.squaresChecked;
        }
        rep["holds"] = holds;
        if (w) {
          rep["witness"] = squareJson(w->square, w->generator);
          if (!witnessPath.empty()) io::writeFile(witnessPath, io::serializeMap(w->square.top));
        }
        return {rep};
      };
    });
  }

  // map-space
  std::string srcPath, tgtPath;
  {
    auto* s = sub(&app, "map-space", "mapping space Map(X, Y)");
    s->add_option("source", srcPath)->required();
    s->add_option("target", tgtPath)->required();
    s->add_option("-o,--output", outPath);
    s->callback([&] {
      action = [&]() -> Outcome {
        auto ms = mappingSpace(loadSSX(srcPath), loadSSX(tgtPath));
        Json rep{{"cap", ms.cap}, {"cells", countsJson(ms.object, ms.cap)}};
        if (!outPath.empty()) writeOrPrint(outPath, io::serializeSSX(ms.object), rep, out);
        return {rep};
      };
    });
  }

  // pi
  int piDegree = 1;
  std::string baseName;
  {
    auto* s = sub(&app, "pi", "homotopy groups of a Kan complex");
    s->add_option("file", inPath)->required();
    s->add_option("--n", piDegree)->check(CLI::NonNegativeNumber);
    s->add_option("--base", baseName);
    s->callback([&] {
      action = [&]() -> Outcome {
        auto x = loadSSX(inPath);
        if (piDegree == 0) {
          auto p = pi0(x);
          return {Json{{"n", 0}, {"components", p.count}, {"componentOf", p.componentOf}}};
        }
        const int base = baseName.empty() ? 0 : vertexByName(x, baseName);
        auto t = piN(PointedObject{x, base}, piDegree);
        return {Json{{"n", piDegree},
                     {"base", x->name(0, base)},
                     {"order", t.order()},
                     {"identity", t.identity},
                     {"multiplication", t.multiplication}}};
      };
    });
  }

  // dk-qcat
  {
    auto* s = sub(&app, "dk-qcat", "Dwyer-Kan equivalence of quasi-categories");
    s->add_option("map", mapPath)->required();
    s->callback([&] {
      action = [&]() -> Outcome {
        auto r = isDKEquivalenceQCat(loadWith(mapPath, io::parseMap));
        return {Json{{"essentiallySurjective", r.essentiallySurjective},
                     {"fullyFaithful", r.fullyFaithful},
                     {"verdict", r.verdict},
                     {"detail", r.detail}}};
      };
    });
  }

  // fillers
  std::string spherePath;
  int sphereDim = 2;
  {
    auto* s = sub(&app, "fillers", "count fillers of spheres boundary(n) -> X");
    s->add_option("file", inPath)->required();
    s->add_option("--sphere", spherePath, "a map boundary(n) -> X; otherwise all spheres of dimension --n");
    s->add_option("--n", sphereDim)->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&]() -> Outcome {
        auto x = loadSSX(inPath);
        if (!spherePath.empty()) {
          auto sphere = loadWith(spherePath, io::parseMap);
          return {Json{{"fillers", countFillers(x, sphere)}}};
        }
        std::map<int, int> histogram;
        int spheres = 0;
        for (auto& sphere : homSet(boundary(sphereDim), x)) {
          ++spheres;
          ++histogram[countFillers(x, sphere)];
        }
        Json h = Json::object();
        for (auto& [k, v] : histogram) h[std::to_string(k)] = v;
        return {Json{{"n", sphereDim}, {"spheres", spheres}, {"fillerHistogram", h}}};
      };
    });
  }

  // minimal, stratified
  {
    auto* s = sub(&app, "minimal", "minimality of a Kan complex");
    s->add_option("file", inPath)->required();
    s->callback([&] { action = [&]() -> Outcome { return {Json{{"isMinimal", isMinimal(loadSSX(inPath))}}}; }; });
    auto* t = sub(&app, "stratified", "lean P-stratified Kan complex test for a map X -> N(P)");
    t->add_option("map", mapPath)->required();
    t->callback([&] {
      action = [&]() -> Outcome {
        return {Json{{"isLeanStratifiedKan", isLeanStratifiedKan(loadWith(mapPath, io::parseMap))}}};
      };
    });
  }

  // pro
  std::string otherPath;
  std::vector<std::string> testPaths;
  {
    auto* pro = sub(&app, "pro", "pro-objects");
    pro->require_subcommand(1);
    auto* complete = sub(pro, "complete", "coskeleton tower of a lean simplicial set");
    complete->add_option("file", inPath)->required();
    complete->add_option("-o,--output", outPath);
    complete->callback([&] {
      action = [&]() -> Outcome {
        auto c = proCompleteLean(loadSSX(inPath), cfg.towerBound);
        Json rep{{"bound", c.bound},
                 {"stabilized", c.stabilized},
                 {"coskeletalDegree", c.coskeletalDegree ? Json(*c.coskeletalDegree) : Json("none")}};
        writeOrPrint(outPath, io::serializePRX(c.tower), rep, out);
        return {rep};
      };
    });
    auto* hom = sub(pro, "hom", "number of pro-maps C -> D");
    hom->add_option("source", inPath)->required();
    hom->add_option("target", otherPath)->required();
    hom->callback([&] {
      action = [&]() -> Outcome {
        auto c = loadWith(inPath, io::parsePRX), d = loadWith(otherPath, io::parsePRX);
        return {Json{{"count", proHom(c, d).size()}}};
      };
    });
    auto* mono = sub(pro, "mono", "monomorphism test for a pro-map");
    mono->add_option("map", mapPath)->required();
    mono->callback([&] {
      action = [&]() -> Outcome {
        auto f = loadWith(mapPath, io::parseProMap);
        auto d = isProMono(f, MonoMode::Direct), l = isProMono(f, MonoMode::Lifting);
        Json rep{{"mono", d.holds}, {"direct", d.detail}, {"lifting", l.detail}};
        if (l.witness) rep["witness"] = squareJson(l.witness->square, l.witness->generator);
        return {rep};
      };
    });
    auto* we = sub(pro, "we", "weak equivalence of pro-maps against test objects");
    we->add_option("map", mapPath)->required();
    we->add_option("--tests", testPaths)->required();
    we->callback([&] {
      action = [&]() -> Outcome {
        auto f = loadWith(mapPath, io::parseProMap);
        std::vector<SSetPtr> tests;
        for (auto& t : testPaths) tests.push_back(loadSSX(t));
        auto r = isProWeakEquivalence(f, tests, cfg.flavor);
        return {Json{{"verdict", toString(r.verdict)}, {"detail", r.detail}}, r.verdict == Tristate::Unknown};
      };
    });
    auto* und = sub(pro, "underlying", "degreewise limit of a pro-object");
    und->add_option("file", inPath)->required();
    und->add_option("-o,--output", outPath);
    und->callback([&] {
      action = [&]() -> Outcome {
        auto u = underlying(loadWith(inPath, io::parsePRX));
        Json rep{{"cells", countsJson(u, u->cap())}};
        writeOrPrint(outPath, io::serializeSSX(u), rep, out);
        return {rep};
      };
    });
  }

  // segal, css, sing, ev0
  int fromVertex = 0, toVertex = 0;
  {
    auto* segal = sub(&app, "segal", "Segal spaces");
    segal->require_subcommand(1);
    auto* check = sub(segal, "check", "Reedy fibrancy, Segal and completeness conditions");
    check->add_option("file", inPath)->required();
    check->callback([&] {
      action = [&]() -> Outcome {
        auto x = loadWith(inPath, io::parseBSX);
        Json rep{{"reedyFibrant", isReedyFibrantDesk(x)}};
        if (rep["reedyFibrant"].get<bool>()) {
          rep["segal"] = checkSegal(x);
          rep["complete"] = checkComplete(x);
        }
        return {rep};
      };
    });
    auto* css = sub(&app, "css", "complete Segal spaces");
    css->require_subcommand(1);
    auto* dk = sub(css, "dk", "Dwyer-Kan equivalence of Segal spaces");
    dk->add_option("map", mapPath)->required();
    dk->callback([&] {
      action = [&]() -> Outcome {
        auto f = loadWith(mapPath, [](const std::string& t) { return io::bsxMapFromJson(Json::parse(t)); });
        auto r = isDKEquivalenceCSS(f);
        return {Json{{"essentiallySurjective", r.essentiallySurjective},
                     {"fullyFaithful", r.fullyFaithful},
                     {"verdict", r.verdict},
                     {"detail", r.detail}}};
      };
    });
    auto* ms = sub(css, "mapspace", "map_X(x, y)");
    ms->add_option("file", inPath)->required();
    ms->add_option("--from", fromVertex)->required();
    ms->add_option("--to", toVertex)->required();
    ms->add_option("-o,--output", outPath);
    ms->callback([&] {
      action = [&]() -> Outcome {
        auto p = cssMapSpace(loadWith(inPath, io::parseBSX), fromVertex, toVertex);
        Json rep{{"cells", countsJson(p.object, p.object->cap())}};
        if (!outPath.empty()) writeOrPrint(outPath, io::serializeSSX(p.object), rep, out);
        return {rep};
      };
    });
    auto* sing = sub(&app, "sing", "Sing(X) for a lean quasi-category");
    sing->add_option("file", inPath)->required();
    sing->add_option("-o,--output", outPath);
    sing->callback([&] {
      action = [&]() -> Outcome {
        auto s = singJ(loadSSX(inPath));
        Json rep{{"cap", s.cap}, {"outerCap", s.object->outerCap()}};
        writeOrPrint(outPath, io::serializeBSX(s.object), rep, out);
        return {rep};
      };
    });
    auto* ev = sub(&app, "ev0", "ev_0 of a bisimplicial set");
    ev->add_option("file", inPath)->required();
    ev->add_option("-o,--output", outPath);
    ev->callback([&] {
      action = [&]() -> Outcome {
        auto e = ev0(loadWith(inPath, io::parseBSX));
        Json rep{{"cells", countsJson(e, e->cap())}};
        writeOrPrint(outPath, io::serializeSSX(e), rep, out);
        return {rep};
      };
    });
  }

  // verify ftc
  {
    auto* verify = sub(&app, "verify", "verifiers");
    verify->require_subcommand(1);
    auto* ftc = sub(verify, "ftc", "fibration-test-category axioms of a presentation");
    ftc->add_option("file", inPath)->required();
    ftc->callback([&] {
      action = [&]() -> Outcome {
        auto f = loadWith(inPath, [&](const std::string& t) {
          return io::parseFTP(t, std::filesystem::path(inPath).parent_path().string());
        });
        auto rep = verifyAxioms(f.presentation, f.flavor, cfg.searchBudget);
        Json axioms = Json::array();
        bool anyNo = false, anyUnknown = false;
        for (auto& a : rep.axioms) {
          Json aj{{"axiom", a.axiom}, {"verdict", toString(a.verdict)}, {"summary", a.summary}, {"checks", a.checks}};
          if (a.counterexample) aj["counterexample"] = *a.counterexample;
          if (!a.undetermined.empty()) aj["undetermined"] = a.undetermined;
          axioms.push_back(aj);
          anyNo = anyNo || a.verdict == Tristate::No;
          anyUnknown = anyUnknown || a.verdict == Tristate::Unknown;
        }
        Json res{{"axioms", axioms}, {"generators", rep.generatorsUsed}, {"allPass", rep.allPass()}};
        if (rep.allPass()) {
          auto g = generatingSets(f.presentation, rep);
          res["generatingSets"] = {{"fibrations", g.fibrations.size()}, {"trivialFibrations", g.trivialFibrations.size()}};
        }
        return {res, !anyNo && anyUnknown};
      };
    });
  }

  std::vector<std::string> argvRev(args.rbegin(), args.rend());
  try {
    app.parse(argvRev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAnswered;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    // callbacks only record the action; errors here are from option checks
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!flavorFlag.empty()) cfg.flavor = parseFlavor(flavorFlag);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  if (capFlag) cfg.degreeCap = capFlag;
  if (towerFlag) cfg.towerBound = towerFlag;
  if (budgetFlag) cfg.searchBudget = budgetFlag;
  if (!formatFlag.empty()) cfg.outputFormat = formatFlag;
  if (auto e = cfg.validate()) {
    err << "usage error: " << *e << "\n";
    return kUsage;
  }
  if (!action) {
    err << "usage error: no subcommand\n";
    return kUsage;
  }

  const Json config{{"degreeCap", cfg.degreeCap},
                    {"towerBound", cfg.towerBound},
                    {"searchBudget", cfg.searchBudget},
                    {"flavor", toString(cfg.flavor)}};
  try {
    ContextScope scope(cfg.searchBudget);
    auto o = action();
    if (!o.report.is_null()) {
      o.report["config"] = config;
      o.report["budgetUsed"] = scope.used();
      if (!scope.notes().empty()) o.report["notes"] = scope.notes();
    }
    emit(o.report, cfg.outputFormat, out);
    return o.unknown ? kUnknown : kAnswered;
  } catch (const BudgetExceeded& e) {
    emit(Json{{"verdict", "unknown (budget)"}, {"reason", e.what()}, {"config", config}}, cfg.outputFormat, out);
    return kUnknown;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapError& e) {
    err << "cap error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace sset::cli
