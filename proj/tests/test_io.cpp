#include <filesystem>

#include "doctest.h"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/io.hpp"
#include "sset/lifting.hpp"

using namespace sset;
using namespace sset::io;

TEST_CASE("SSX round trips") {
  for (auto x : {delta(1), boundary(2), horn(3, 1), nerve(cat::cyclicGroup(2)), jNerve(1), walkingH(), emptySet()}) {
    auto text = serializeSSX(x);
    auto y = parseSSX(text);
    CHECK(serializeSSX(y) == text);
    CHECK(findIsomorphism(x, y).has_value());
    for (int m = 0; m <= x->cap(); ++m) CHECK(y->size(m) == x->size(m));
  }
  auto j = Json::parse(serializeSSX(delta(1)));
  CHECK(j["cells"][0] == Json::array({"0", "1"}));
  CHECK(j["extension"] == "skeletal");
}

TEST_CASE("SSX errors") {
  CHECK_THROWS_WITH_AS(parseSSX("{\"cap\": 0,"), doctest::Contains("byte"), ParseError);
  CHECK_THROWS_WITH_AS(parseSSX("{\"cap\": 0}"), doctest::Contains("missing field 'extension'"), ParseError);

  auto j = Json::parse(serializeSSX(delta(2)));
  // corrupt a face of the 2-simplex so that d0 d0 and d0 d1 disagree
  auto& cells2 = j["cells"][2];
  int top = -1;
  for (std::size_t c = 0; c < cells2.size(); ++c)
    if (cells2[c] == "012") top = static_cast<int>(c);
  REQUIRE(top >= 0);
  j["faces"][2][0][top] = "00";
  CHECK_THROWS_WITH_AS(parseSSX(j.dump()), doctest::Contains("simplicial identity"), ParseError);

  auto k = Json::parse(serializeSSX(delta(1)));
  k["faces"][1][0][0] = "7";
  CHECK_THROWS_WITH_AS(parseSSX(k.dump()), doctest::Contains("/faces/1/0/0"), ParseError);
}

TEST_CASE("map files") {
  auto f = deltaMap({0, 2}, 2);
  auto text = serializeMap(f);
  auto g = parseMap(text);
  CHECK(serializeMap(g) == text);
  CHECK(cellCount(g.source(), 0) == 2);
  auto z = nerve(cat::cyclicGroup(2));
  auto h = toTerminal(z, point());
  CHECK(serializeMap(parseMap(serializeMap(h))) == serializeMap(h));
}

TEST_CASE("PRX round trips and errors") {
  auto c = proCompleteLean(boundary(3), 3);
  auto text = serializePRX(c.tower);
  auto d = parsePRX(text);
  CHECK(serializePRX(d) == text);
  CHECK(d->index().kind == IndexPoset::Kind::Tower);
  CHECK(d->index().size() == 4);

  auto pm = ProMap::fromBottom(c.tower, c.tower, identity(c.tower->bottomLevel()));
  auto mt = Json::parse(canonical(proMapJson(pm)));
  auto back = proMapFromJson(mt);
  CHECK(isProIsomorphism(back));

  // two minimal elements: not codirected
  Json bad = {{"index", {{"elements", {"a", "b"}}, {"order", Json::array()}, {"flavor", "poset"}}},
              {"levels", {{"a", ssxJson(point())}, {"b", ssxJson(point())}}},
              {"bonds", Json::object()}};
  CHECK_THROWS_WITH_AS(prxFromJson(bad), doctest::Contains("a"), ParseError);
  try {
    prxFromJson(bad);
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("b") != std::string::npos);
    CHECK(msg.find("/index") != std::string::npos);
  }
}

TEST_CASE("BSX round trips") {
  for (auto x : {discreteNerve(cat::cyclicGroup(2)), externalProduct(delta(1), boundary(1))}) {
    auto text = serializeBSX(x);
    auto y = parseBSX(text);
    CHECK(serializeBSX(y) == text);
    CHECK(y->outerCap() == x->outerCap());
  }
}

TEST_CASE("FTP files") {
  auto dir = std::filesystem::temp_directory_path() / "sset_io_test";
  std::filesystem::create_directories(dir);
  writeFile((dir / "z2.ssx").string(), serializeSSX(nerve(cat::cyclicGroup(2))));
  Json ftp = {{"flavor", "kq"},
              {"objects", {{"star", ssxJson(point())}, {"z2", {{"ref", "z2.ssx"}}}}},
              {"tests", {"star", "z2"}},
              {"generatorCap", 1},
              {"inherited", true}};
  auto f = parseFTP(ftp.dump(), dir.string());
  CHECK(f.presentation.tests.size() == 2);
  CHECK(f.presentation.fibrations.size() == 3);
  CHECK_FALSE(f.presentation.validate());
  auto text = serializeFTP(f);
  auto g = parseFTP(text);
  CHECK(serializeFTP(g) == text);
  CHECK(g.presentation.trivialFibrations == f.presentation.trivialFibrations);

  Json missing = ftp;
  missing["objects"]["z2"] = {{"ref", "nope.ssx"}};
  CHECK_THROWS_AS(parseFTP(missing.dump(), dir.string()), ParseError);
  std::filesystem::remove_all(dir);
}
