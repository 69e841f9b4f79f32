#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "sset/builders.hpp"
#include "sset/category.hpp"
#include "sset/cli.hpp"
#include "sset/io.hpp"

using namespace sset;
using Json = io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "sset_cli_test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("build then classify") {
  TempDir dir;
  auto b = call({"build", "delta", "2", "-o", dir / "d2.ssx"});
  REQUIRE(b.code == cli::kAnswered);
  CHECK(Json::parse(b.out)["cells"] == Json::array({3, 6, 10}));
  auto c = call({"classify", dir / "d2.ssx"});
  REQUIRE(c.code == cli::kAnswered);
  auto j = Json::parse(c.out);
  CHECK(j["isFiniteComplex"] == true);
  CHECK(j["coskeletalDegree"] == 1);
  CHECK(j["config"]["degreeCap"] == 4);
}

TEST_CASE("fundamental group of N(Z/2)") {
  TempDir dir;
  REQUIRE(call({"build", "nerve", "Z/2", "-o", dir / "z2.ssx"}).code == cli::kAnswered);
  auto r = call({"pi", dir / "z2.ssx", "--n", "1", "--base", "0"});
  REQUIRE(r.code == cli::kAnswered);
  CHECK(Json::parse(r.out)["order"] == 2);
}

TEST_CASE("budget exhaustion exits with unknown") {
  TempDir dir;
  REQUIRE(call({"build", "nerve", "Z/3", "-o", dir / "z3.ssx"}).code == cli::kAnswered);
  auto r = call({"--budget", "100", "pi", dir / "z3.ssx", "--n", "1", "--base", "0"});
  CHECK(r.code == cli::kUnknown);
  CHECK(Json::parse(r.out)["verdict"] == "unknown (budget)");
}

TEST_CASE("usage errors") {
  CHECK(call({"frobnicate"}).code == cli::kUsage);
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"--flavor", "cubical", "build", "point"}).code == cli::kUsage);
  CHECK(call({"build", "delta", "x"}).code == cli::kUsage);
}

TEST_CASE("corrupted input names a position") {
  TempDir dir;
  io::writeFile(dir / "bad.ssx", "{\"cap\": 1, \"cells\": [");
  auto r = call({"classify", dir / "bad.ssx"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("byte") != std::string::npos);

  auto j = Json::parse(io::serializeSSX(delta(1)));
  j["faces"][1][1][0] = "9";
  io::writeFile(dir / "bad2.ssx", j.dump());
  auto r2 = call({"classify", dir / "bad2.ssx"});
  CHECK(r2.code == cli::kUsage);
  CHECK(r2.err.find("/faces/1/1/0") != std::string::npos);
}

TEST_CASE("pro weak equivalence of an identity") {
  TempDir dir;
  auto c = proCompleteLean(delta(1), 1).tower;
  auto id = ProMap::fromBottom(c, c, identity(c->bottomLevel()));
  io::writeFile(dir / "id.prm", io::canonical(io::proMapJson(id)));
  io::writeFile(dir / "z2.ssx", io::serializeSSX(nerve(cat::cyclicGroup(2))));
  auto r = call({"pro", "we", dir / "id.prm", "--tests", dir / "z2.ssx"});
  REQUIRE(r.code == cli::kAnswered);
  CHECK(Json::parse(r.out)["verdict"] == "yes");
}

TEST_CASE("output is deterministic") {
  TempDir dir;
  REQUIRE(call({"build", "horn", "3", "1", "-o", dir / "h.ssx"}).code == cli::kAnswered);
  const std::string cmd = std::string(SSET_BINARY) + " classify --fibrancy " + (dir / "h.ssx") + " > ";
  REQUIRE(std::system((cmd + (dir / "a.json")).c_str()) == 0);
  REQUIRE(std::system((cmd + (dir / "b.json")).c_str()) == 0);
  CHECK(io::readFile(dir / "a.json") == io::readFile(dir / "b.json"));
  REQUIRE(call({"build", "horn", "3", "1", "-o", dir / "h2.ssx"}).code == cli::kAnswered);
  CHECK(io::readFile(dir / "h.ssx") == io::readFile(dir / "h2.ssx"));
}

TEST_CASE("text output") {
  TempDir dir;
  REQUIRE(call({"build", "point", "-o", dir / "p.ssx"}).code == cli::kAnswered);
  auto r = call({"--format", "text", "classify", dir / "p.ssx"});
  REQUIRE(r.code == cli::kAnswered);
  CHECK(r.out.find("isLean: true") != std::string::npos);
  CHECK(r.out.find("config.flavor: kq") != std::string::npos);
}
