#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "nilorbit/cli.hpp"

using namespace nilorbit;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("nilorbit_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<nlohmann::json> parse_jsonl(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("enumerate prints the rank two C orbits as text") {
  std::string f = temp_path("enumerate.txt");
  CHECK(run_cli({"enumerate", "--family", "C", "--rank", "2", "--out", f}) == 0);
  std::string text = slurp(f);
  CHECK(text.find("3 roots") != std::string::npos);
  CHECK(text.find("5 orbits") != std::string::npos);
  CHECK(text.find("2e2,2e1") != std::string::npos);
  CHECK(text.find("sigma=") != std::string::npos);
  std::filesystem::remove(f);
}

TEST_CASE("enumerate emits machine readable orbit data") {
  std::string f = temp_path("enumerate.json");
  CHECK(run_cli({"enumerate", "--family", "C", "--rank", "2", "--format", "json", "--out",
                 f}) == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(f));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  REQUIRE(j[0]["orbits"].size() == 5);
  CHECK(j[0]["nilradical"] == "2e1");
  CHECK(j[0]["orbits"][0]["label"] == "0");
  CHECK(j[0]["orbits"][0]["dimension"] == 0);
  CHECK(j[0]["orbits"][1]["label"] == "2e2");
  CHECK(j[0]["orbits"][1]["dimension"] == 1);
  CHECK(j[0]["orbits"][1]["dual_dimension"] == 2);
  CHECK(j[0]["orbits"][4]["label"] == "2e2,2e1");
  CHECK(j[0]["orbits"][4]["dimension"] == 3);
  std::filesystem::remove(f);
}

TEST_CASE("poset renders covers in graphviz form") {
  std::string f = temp_path("poset.dot");
  CHECK(run_cli({"poset", "--family", "C", "--rank", "2", "--format", "dot", "--out", f}) ==
        0);
  std::string text = slurp(f);
  CHECK(text.rfind("digraph", 0) == 0);
  CHECK(text.find("rankdir=BT") != std::string::npos);
  CHECK(count_occurrences(text, "->") == 5);
  CHECK(text.find("2e2,2e1 : 3") != std::string::npos);
  std::filesystem::remove(f);
}

TEST_CASE("poset json distinguishes the closure order from the dual order") {
  auto covers_of = [](const std::string& order) {
    std::string f = temp_path("poset_" + order + ".json");
    REQUIRE(run_cli({"poset", "--family", "C", "--rank", "2", "--order", order, "--format",
                     "json", "--out", f}) == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(f));
    std::filesystem::remove(f);
    REQUIRE(j.size() == 1);
    REQUIRE(j[0]["order"] == order);
    return j[0]["covers"];
  };

  auto has = [](const nlohmann::json& covers, const std::string& lo, const std::string& hi) {
    for (const auto& c : covers)
      if (c["lower"] == lo && c["upper"] == hi) return true;
    return false;
  };

  nlohmann::json geo = covers_of("geometric");
  REQUIRE(geo.size() == 5);
  CHECK(has(geo, "2e2", "2e1"));
  CHECK_FALSE(has(geo, "2e1", "2e2"));

  nlohmann::json dual = covers_of("coadjoint");
  REQUIRE(dual.size() == 5);
  CHECK(has(dual, "2e1", "2e2"));
  CHECK_FALSE(has(dual, "2e2", "2e1"));

  nlohmann::json bru = covers_of("bruhat");
  CHECK(bru == geo);
}

TEST_CASE("lengths reports the pinned rank six C statistics") {
  std::string f = temp_path("lengths.json");
  CHECK(run_cli({"lengths", "--family", "C", "--rank", "6", "--set", "e2-e1,e6+e3,2e4",
                 "--format", "json", "--out", f}) == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(f));
  CHECK(j["arcs"] == 5);
  CHECK(j["crossings"] == 3);
  CHECK(j["right_of_pairs"] == 1);
  CHECK(j["covered_fixed"] == 2);
  CHECK(j["formula_length"] == 21);
  CHECK(j["direct_length"] == 21);
  CHECK(j["agree"] == true);
  std::filesystem::remove(f);

  std::string t = temp_path("lengths.txt");
  CHECK(run_cli({"lengths", "--family", "C", "--rank", "6", "--set", "e2-e1,e6+e3,2e4",
                 "--out", t}) == 0);
  std::string text = slurp(t);
  CHECK(text.find("formula length: 21") != std::string::npos);
  CHECK(text.find("agreement: yes") != std::string::npos);
  std::filesystem::remove(t);
}

TEST_CASE("lengths accepts the empty set") {
  std::string f = temp_path("lengths_empty.json");
  CHECK(run_cli({"lengths", "--family", "B", "--rank", "3", "--set", "", "--format", "json",
                 "--out", f}) == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(f));
  CHECK(j["arcs"] == 0);
  CHECK(j["formula_length"] == 0);
  CHECK(j["direct_length"] == 0);
  std::filesystem::remove(f);
}

TEST_CASE("usage and domain errors exit with code two") {
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"enumerate", "--family", "C"}) == 2);
  CHECK(run_cli({"enumerate", "--family", "X", "--rank", "2"}) == 2);
  CHECK(run_cli({"enumerate", "--family", "C", "--rank", "2", "--nilradical", "e9-e1"}) == 2);
  CHECK(run_cli({"enumerate", "--family", "C", "--rank", "2", "--format", "yaml"}) == 2);
  CHECK(run_cli({"poset", "--family", "C", "--rank", "2", "--order", "upside-down"}) == 2);
  CHECK(run_cli({"lengths", "--family", "C", "--rank", "6", "--set", "2e9"}) == 2);
  CHECK(run_cli({"lengths", "--family", "C", "--rank", "6", "--set", "e1-e2"}) == 2);
  CHECK(run_cli({"verify", "--check", "bogus"}) == 2);
  CHECK(run_cli({"enumerate", "--family", "D", "--rank", "2"}) == 2);
}

TEST_CASE("help is not an error") {
  CHECK(run_cli({"--help"}) == 0);
  CHECK(run_cli({"verify", "--help"}) == 0);
}

TEST_CASE("verify writes one report line per case") {
  std::string f = temp_path("verify.jsonl");
  CHECK(run_cli({"verify", "--check", "example", "--out", f}) == 0);
  std::vector<nlohmann::json> lines = parse_jsonl(slurp(f));
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["check"] == "example");
  CHECK(lines[0]["status"] == "pass");
  CHECK(lines[0]["family"] == "C");
  CHECK(lines[0]["rank"] == 6);
  CHECK_FALSE(lines[0].contains("counterexample"));
  std::filesystem::remove(f);
}

TEST_CASE("an injected fault surfaces as a replayable failing report") {
  std::string f = temp_path("verify_fault.jsonl");
  CHECK(run_cli({"verify", "--check", "conjecture", "--family", "B", "--rank", "2",
                 "--inject-fault", "--out", f}) == 1);
  std::vector<nlohmann::json> lines = parse_jsonl(slurp(f));
  std::filesystem::remove(f);
  REQUIRE(lines.size() == 1);
  const nlohmann::json& r = lines[0];
  CHECK(r["status"] == "fail");
  REQUIRE(r.contains("counterexample"));
  CHECK(r["counterexample"].contains("x"));
  CHECK(r["counterexample"].contains("y"));

  std::vector<std::string> replay;
  for (const auto& a : r["replay"]) replay.push_back(a.get<std::string>());
  REQUIRE(!replay.empty());
  CHECK(replay[0] == "verify");

  std::string f2 = temp_path("verify_replay.jsonl");
  replay.push_back("--out");
  replay.push_back(f2);
  CHECK(run_cli(replay) == 1);
  std::vector<nlohmann::json> again = parse_jsonl(slurp(f2));
  std::filesystem::remove(f2);
  REQUIRE(again.size() == 1);
  CHECK(again[0]["status"] == "fail");
}
