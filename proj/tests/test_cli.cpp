#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "cli_runner.hpp"
#include "invcensus/characters.hpp"
#include "invcensus/series_io.hpp"

using nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::trunc) << contents;
  return path;
}

}  // namespace

TEST_CASE("census text and json") {
  const auto text = run_cli({"census", "--n1", "2", "--n2", "2", "--max-degree", "11"});
  CHECK(text.status == 0);
  CHECK(text.out.find("396 q^10 + 583 q^11") != std::string::npos);
  CHECK(text.out.find("F(q) = 1 + q + 4 q^2 + 6 q^3") != std::string::npos);

  const auto ones = run_cli({"census", "--n1", "1", "--n2", "1", "--max-degree", "3"});
  CHECK(ones.out.find("coefficients: [1,1,1,1]") != std::string::npos);

  const auto js = run_cli({"census", "--n1", "2", "--n2", "2", "--max-degree", "12", "--format", "json"});
  REQUIRE(js.status == 0);
  const auto doc = json::parse(js.out);
  CHECK(doc["command"] == "census");
  CHECK(doc["input"]["n1"] == 2);
  CHECK(doc["result"]["coefficients"].back() == 964);
  CHECK(doc["result"]["truncation_degree"] == 12);
  CHECK(doc["versions"]["cache_format"] == 1);
  CHECK(doc["timing"]["wall_ms"].is_number_integer());
}

TEST_CASE("kron") {
  const auto r = run_cli({"kron", "6,2", "6,2"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{8}: 1\n{7,1}: 1\n{6,2}: 2\n{6,1,1}: 1\n{5,3}: 1\n{5,2,1}: 2\n{5,1,1,1}: 1\n{4,4}: 1\n"
        "{4,3,1}: 1\n{4,2,2}: 1\n");
  CHECK(run_cli({"kron", "2,1", "1,1,1"}).out == "{2,1}: 1\n");

  CHECK(run_cli({"kron", "3", "2,1"}).out == "{2,1}: 1\n");
  const auto bad = run_cli({"kron", "3", "2,1,1"});
  CHECK(bad.status != 0);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("weights differ") != std::string::npos);

  const auto parse = run_cli({"kron", "2,3", "5"});
  CHECK(parse.status != 0);
  CHECK(parse.err.find("parts must be weakly decreasing") != std::string::npos);
}

TEST_CASE("molien with census check") {
  const auto r = run_cli({"molien", "--n1", "2", "--n2", "2", "--max-degree", "5", "--check"});
  CHECK(r.status == 0);
  CHECK(r.out.find("coefficients: [1,1,4,6,16,23]") != std::string::npos);
  CHECK(r.out.find("census agreement: OK") != std::string::npos);
  CHECK(run_cli({"molien", "--n1", "1", "--n2", "1", "--max-degree", "2"}).out.find("[1,1,1]") !=
        std::string::npos);
  CHECK(run_cli({"molien", "--n1", "2", "--n2", "1", "--max-degree", "6"}).out.find("[1,1,2,2,3,3,4]") !=
        std::string::npos);
}

TEST_CASE("char and table") {
  CHECK(run_cli({"char", "2,1", "3"}).out == "-1\n");
  CHECK(run_cli({"char", "3", "1,1,1"}).out == "1\n");
  const auto t = run_cli({"table", "3", "--format", "json"});
  const auto doc = json::parse(t.out);
  CHECK(doc["result"]["partitions"] == json::array({"3", "2,1", "1,1,1"}));
  CHECK(doc["result"]["values"] == json::parse("[[1,1,1],[-1,0,2],[1,-1,1]]"));
  const auto text = run_cli({"table", "3"});
  CHECK(text.status == 0);
  CHECK(text.out.find("2,1 |    -1     0     2") != std::string::npos);
}

TEST_CASE("factor") {
  const auto ones = temp_file("invcensus_ones.json", R"({"truncation_degree": 5, "coefficients": [1,1,1,1,1,1]})");
  const auto r = run_cli({"factor", ones.string(), "--free-generators", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("#1 num {} den {1}") != std::string::npos);

  const auto two_qubit = std::filesystem::temp_directory_path() / "invcensus_f11.json";
  REQUIRE(run_cli({"census", "--n1", "2", "--n2", "2", "--max-degree", "11", "--output-series",
                   two_qubit.string()}).status == 0);
  const auto g = run_cli({"factor", two_qubit.string(), "--free-generators", "9",
                          "--max-factor-degree", "9", "--limit", "0", "--format", "json"});
  REQUIRE(g.status == 0);
  bool found = false;
  const auto doc = json::parse(g.out);
  for (const auto& c : doc["result"]["candidates"]) {
    if (c["denominator_degrees"] == json::array({1, 2, 2, 2, 3, 3, 4, 4, 4})) {
      found = true;
      CHECK(c["match_degree"] == 9);
      CHECK(c["total_invariants"] == 21);
    }
  }
  CHECK(found);

  const auto qubit = std::filesystem::temp_directory_path() / "invcensus_q8.json";
  REQUIRE(run_cli({"census", "--n1", "2", "--n2", "1", "--max-degree", "8", "--output-series",
                   qubit.string()}).status == 0);
  CHECK(run_cli({"factor", qubit.string(), "--free-generators", "2"}).out.find("#1 num {} den {1,2}") !=
        std::string::npos);
}

TEST_CASE("factor rejects malformed series files") {
  const auto broken = temp_file("invcensus_broken.json", "{\"truncation_degree\": 2,\n \"coefficients\": [1, 2,");
  const auto r = run_cli({"factor", broken.string()});
  CHECK(r.status != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 2") != std::string::npos);

  const auto wrong = temp_file("invcensus_wrong.json", R"({"truncation_degree": 2, "coefficients": [1, 2.5, 3]})");
  const auto w = run_cli({"factor", wrong.string()});
  CHECK(w.status != 0);
  CHECK(w.err.find("coefficients[1]") != std::string::npos);

  const auto missing = temp_file("invcensus_missing.json", R"({"coefficients": [1]})");
  CHECK(run_cli({"factor", missing.string()}).err.find("truncation_degree") != std::string::npos);
}

TEST_CASE("series files carry big integers exactly") {
  const invcensus::Series s(std::vector<invcensus::Integer>{1, invcensus::Integer("123456789012345678901234567890")});
  const auto doc = invcensus::series_to_json(s);
  CHECK(doc["coefficients"][1] == "123456789012345678901234567890");
  CHECK(invcensus::series_from_json(doc) == s);
}

TEST_CASE("errors exit nonzero and write only to the error stream") {
  const auto limit = run_cli({"census", "--n1", "2", "--n2", "2", "--max-degree", "20"});
  CHECK(limit.status != 0);
  CHECK(limit.out.empty());
  CHECK(limit.err.find("exceeds the configured limit") != std::string::npos);

  CHECK(run_cli({"census", "--n1", "0"}).status != 0);
  CHECK(run_cli({"bogus"}).status != 0);
  CHECK(run_cli({}).status != 0);
  CHECK(run_cli({"table", "17"}).status != 0);
}

TEST_CASE("json payloads are deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"census", "--n1", "2", "--n2", "2", "--max-degree", "9", "--format", "json"},
        std::vector<std::string>{"kron", "5,3", "5,3", "--format", "json"},
        std::vector<std::string>{"table", "5", "--format", "json"}}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(stable_json(a.out) == stable_json(b.out));
  }
}

TEST_CASE("cache directory from the environment or flag") {
  const auto dir = std::filesystem::temp_directory_path() / "invcensus_cli_cache";
  std::filesystem::remove_all(dir);
  invcensus::char_table_cache().clear();
  REQUIRE(run_cli({"table", "4", "--cache-dir", dir.string()}).status == 0);
  CHECK(std::filesystem::exists(dir / "chartable-v1-n4.txt"));
  std::filesystem::remove_all(dir);

  ::setenv("INVCENSUS_CACHE", dir.string().c_str(), 1);
  invcensus::char_table_cache().clear();
  REQUIRE(run_cli({"char", "3,2", "5"}).status == 0);
  REQUIRE(run_cli({"kron", "3,2", "3,2"}).status == 0);
  CHECK(std::filesystem::exists(dir / "chartable-v1-n5.txt"));
  ::unsetenv("INVCENSUS_CACHE");
  std::filesystem::remove_all(dir);
  CHECK_FALSE(invcensus::char_table_cache().directory().has_value());
}
