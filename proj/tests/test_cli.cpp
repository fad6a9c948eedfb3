#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "geogrowth/cli.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace geogrowth;
using namespace geogrowth::cli;
using testing::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "geogrowth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string path(const std::string& name) { return std::string(GEOGROWTH_FIXTURES) + "/" + name + ".json"; }

std::filesystem::path tmp(const std::string& name) {
  const char* dir = std::getenv("GEOGROWTH_TMP");
  return (dir ? std::filesystem::path(dir) : std::filesystem::temp_directory_path()) / name;
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("method names") {
  for (auto m : {Method::automaton, Method::racg, Method::trianglefree, Method::oracle, Method::all})
    CHECK(parse_method(method_name(m)) == m);
  CHECK(method_name(Method::automaton) == "auto");
  CHECK_FALSE(parse_method("fast"));
}

TEST_CASE("input digest depends only on the graph") {
  CHECK(input_digest(fixture("c4_all2")) == input_digest(fixture("c4_all2")));
  CHECK(input_digest(fixture("c4_all2")) != input_digest(fixture("c5_all2")));
  CHECK(input_digest(fixture("c4_all2")).size() == 16);
}

TEST_CASE("series text output") {
  auto r = invoke({"series", path("k2_n3")});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "G(z) = 1 + 4z + 8z^2"));
  CHECK(contains(r.out, "counts: 1, 4, 8, 0"));

  r = invoke({"series", "--ell", "4,3,2,1,0", "-n", "5"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "1 + 4z + 12z^2 + 24z^3 + 24z^4"));

  r = invoke({"series", path("empty3_all2"), "-m", "racg"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "racg"));
}

TEST_CASE("series JSON output") {
  auto r = invoke({"--json", "series", path("c5_n3"), "-m", "all", "-n", "5"});
  REQUIRE(r.code == kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "all");
  CHECK(j["agree"] == true);
  CHECK(j["input_digest"] == input_digest(fixture("c5_n3")));
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][0]["method"] == "auto");
  CHECK(j["results"][0]["numerator"] == nlohmann::json{1, 2, 8});
  CHECK(j["results"][0]["denominator"] == nlohmann::json{1, -8, 8});
  CHECK(j["results"][0]["coefficients"] == nlohmann::json{1, 10, 80, 560, 3840, 26240});
  CHECK(j["results"][2]["method"] == "oracle");
  CHECK_FALSE(j["results"][2].contains("series"));
  REQUIRE(j["skipped"].size() == 1);
  CHECK(j["skipped"][0]["method"] == "racg");
  CHECK(j["cross_checks"].size() == 2);
}

TEST_CASE("large coefficients are written as strings") {
  auto r = invoke({"--json", "series", path("petersen_n4"), "-n", "40"});
  REQUIRE(r.code == kOk);
  auto c = nlohmann::json::parse(r.out)["results"][0]["coefficients"];
  CHECK(c[1] == 20);
  CHECK(c[40].is_string());
}

TEST_CASE("check and equiv") {
  auto r = invoke({"check", path("p3_all2")});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "link-regular: no"));
  CHECK(contains(r.out, "witness"));

  r = invoke({"--json", "check", path("k4_all2")});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["link_regular"] == true);
  CHECK(j["ell"] == nlohmann::json{4, 3, 2, 1, 0});

  auto rep = cmd_check(fixture("hexagon_diameters_3_7"));
  CHECK(rep.regularity.regular);
  CHECK_FALSE(rep.all_two);
  CHECK_FALSE(rep.profile);

  CHECK(invoke({"equiv", path("two_squares_4_6"), path("octagon_4_6")}).out == "equivalent: yes\n");
  CHECK(invoke({"equiv", path("c4_all2"), path("c5_all2")}).out == "equivalent: no\n");
  CHECK(invoke({"equiv", path("p3_all2"), path("c4_all2")}).code == kHypothesis);
}

TEST_CASE("oracle subcommand") {
  auto r = invoke({"oracle", path("k2_n3"), "-n", "3", "--csv"});
  CHECK(r.code == kOk);
  CHECK(r.out == "n,count\n0,1\n1,4\n2,8\n3,0\n");
  r = invoke({"oracle", path("k2_n3"), "--word", "u v u"});
  CHECK(contains(r.out, "not geodesic"));
  r = invoke({"oracle", path("k2_n3"), "--word", "u v^-1"});
  CHECK(contains(r.out, "u v^-1: geodesic"));
}

TEST_CASE("export-fsa") {
  auto r = invoke({"export-fsa", path("single_n5")});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "digraph"));
  CHECK(r.out == cmd_export_fsa(fixture("single_n5"), false));

  const auto file = tmp("edge.dot");
  r = invoke({"export-fsa", path("edge_all2"), "--include-reject", "-o", file.string()});
  CHECK(r.code == kOk);
  std::ifstream in(file);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == cmd_export_fsa(fixture("edge_all2"), true));
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"bogus"}).code == kUsage);
  CHECK(invoke({"series", path("does_not_exist")}).code == kUsage);
  CHECK(invoke({"series", path("k2_n3"), "-m", "fast"}).code == kUsage);
  CHECK(invoke({"series", path("k2_n3"), "--ell", "1,0"}).code == kUsage);
  CHECK(invoke({"series", "--ell", "1,1"}).code == kUsage);

  const auto bad = tmp("bad.json");
  std::ofstream(bad) << "{\"vertices\": [\"a\"], \"edges\": [[\"a\", \"b\"]]}";
  auto r = invoke({"series", bad.string()});
  CHECK(r.code == kParse);
  CHECK_FALSE(r.err.empty());

  CHECK(invoke({"series", path("c4_all2"), "-m", "trianglefree"}).code == kHypothesis);
  CHECK(invoke({"series", path("square_20_7_2_13"), "-m", "racg"}).code == kHypothesis);
  CHECK(invoke({"oracle", path("empty3_all2"), "-n", "9"}).code == kResource);
  CHECK(invoke({"oracle", path("petersen_n4"), "-n", "7", "--budget", "1000"}).code == kResource);
}

TEST_CASE("disagreement makes the report fail") {
  RunReport rep;
  CHECK(rep.agree());
  rep.checks.push_back({"auto", "oracle", false, 3, "n = 2"});
  CHECK_FALSE(rep.agree());
}

TEST_CASE("every method agrees on every fixture") {
  for (const auto& name : testing::fixture_names()) {
    CAPTURE(name);
    auto rep = cmd_series(fixture(name), Method::all, 5);
    CHECK(rep.agree());
    CHECK(rep.results.size() + rep.skipped.size() == 4);
    CHECK(rep.results.front().method == "auto");
    for (const auto& c : rep.checks) CHECK(c.through == 5);
  }
}
