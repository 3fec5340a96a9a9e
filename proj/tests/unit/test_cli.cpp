#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "segre/cli/commands.hpp"
#include "segre/cli/suites.hpp"
#include "segre/exact/error.hpp"
#include "segre/geometry/segre_igusa.hpp"

using namespace segre;
using namespace segre::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("segre_cli_test_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run_args(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
  std::ostringstream o, e;
  const int rc = run(args, o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return rc;
}

}  // namespace

TEST_CASE("coordinate parsing") {
  CHECK(parse_coordinates("1,-1/2, 3") == std::vector<mpq_class>{1, mpq_class(-1, 2), 3});
  CHECK_THROWS_AS(parse_coordinates("1,x"), ParseError);
  CHECK_THROWS_AS(parse_coordinates(""), ParseError);
}

TEST_CASE("scan cache round trip and corruption") {
  TempDir tmp;
  const ScanCache cache(tmp.path);
  const auto& d = geometry::data();
  bool hit = true;
  const auto first = cached_singular_locus(d.segre6, 13, &cache, &hit);
  CHECK_FALSE(hit);
  CHECK(first.size() == 10);
  const auto file = cache.file_for(form_hash(d.segre6), 13);
  REQUIRE(fs::exists(file));
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "# form=" + form_hash(d.segre6) + " p=13 count=10");
  const auto second = cached_singular_locus(d.segre6, 13, &cache, &hit);
  CHECK(hit);
  CHECK(second == first);

  std::ofstream(file) << "# form=" << form_hash(d.segre6) << " p=13 count=11\n1,1,1,12,12,12\n";
  try {
    cached_singular_locus(d.segre6, 13, &cache);
    FAIL("corrupt cache accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(file.string()) != std::string::npos);
  }
  CHECK(form_hash(d.segre6) != form_hash(d.igusa6));
}

TEST_CASE("report rendering") {
  Report r{"demo", {{"demo", "demo.a", Status::Pass, "1", "1", 11, 0}, {"demo", "demo.b", Status::Flagged, "x", "y", std::nullopt, 0}}};
  const auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["suite"] == "demo");
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["prime"] == 11);
  CHECK(j["checks"][1]["prime"].is_null());
  CHECK(j["checks"][1]["status"] == "flagged");
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"demo", "demo.c", Status::Fail, "1", "2", std::nullopt, 0});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("suite dispatch") {
  SuiteOptions opts;
  const auto r = run_suite("quiver", opts);
  CHECK(r.exit_code() == 0);
  CHECK_FALSE(r.checks.empty());
  CHECK_THROWS_AS(run_suite("bogus", opts), Error);
  const auto k = run_suite("ktheory", opts);
  CHECK(k.exit_code() == 0);
  CHECK(std::any_of(k.checks.begin(), k.checks.end(), [](const CheckResult& c) { return c.name == "ktheory.gram.three_block.unitriangular"; }));
}

TEST_CASE("command exit codes and outputs") {
  std::string out, err;
  CHECK(run_args({"verify", "bogus"}, &out, &err) == 2);
  CHECK(err.find("unknown suite") != std::string::npos);
  CHECK(run_args({}, &out, &err) == 2);
  CHECK(run_args({"classify", "hyperplane", "0,0,0,0,0,0"}) == 2);
  CHECK(run_args({"classify", "hyperplane", "1,2"}) == 2);
  CHECK(run_args({"classify", "widget", "1,-1,0,0,0,0"}) == 2);
  CHECK(run_args({"scan", "segre"}) == 2);
  CHECK(run_args({"scan", "segre", "--prime", "12"}) == 2);
  CHECK(run_args({"gram", "nope"}) == 2);
  CHECK(run_args({"mutate", "three_block", "9", "left"}) == 2);

  REQUIRE(run_args({"classify", "hyperplane", "2,2,-1,-1,-1,-1", "--json"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["type"] == "ThreeSegrePlanes(q01)");
  REQUIRE(run_args({"classify", "hyperplane", "1,-1,0,0,0,0"}, &out) == 0);
  CHECK(out.rfind("RNodal(4,", 0) == 0);
  REQUIRE(run_args({"classify", "point-fiber", "1,1,1,-1,-1,-1"}, &out) == 0);
  CHECK(out == "FormalDualNumbers(|e|=-1,singular)\n");
  REQUIRE(run_args({"classify", "hyperplane", "1,2,3,4,5,6"}, &out) == 0);
  CHECK(out.find("projected") != std::string::npos);

  REQUIRE(run_args({"gram", "quiver_center", "--json"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["unitriangular"] == true);
  REQUIRE(run_args({"--json", "mutate", "three_block", "0", "left"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["classes"].size() == 7);
  REQUIRE(run_args({"hochschild", "6-subspace", "--json"}, &out) == 0);
  const auto h = nlohmann::json::parse(out);
  CHECK(h["hh0"] == 1);
  CHECK(h["hh1"] == 0);
  CHECK(h["hh2"] == 0);

  TempDir tmp;
  REQUIRE(run_args({"scan", "igusa", "--prime", "11", "--cache-dir", tmp.path.string(), "--json"}, &out, &err) == 0);
  CHECK(nlohmann::json::parse(out)["count"] == 150);
  CHECK(err.find("scanning") != std::string::npos);
  REQUIRE(run_args({"scan", "igusa", "--prime", "11", "--cache-dir", tmp.path.string()}, &out, &err) == 0);
  CHECK(err.find("read from cache") != std::string::npos);
}

TEST_CASE("verify is deterministic") {
  std::string a, b;
  CHECK(run_args({"verify", "quiver", "--json"}, &a) == 0);
  CHECK(run_args({"verify", "quiver", "--json", "--seed", std::to_string(kDefaultSeed)}, &b) == 0);
  CHECK(a == b);
}
