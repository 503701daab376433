#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rainbow/cli.hpp"
#include "rainbow/family_io.hpp"

using namespace rainbow;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rainbow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "rainbow_cli_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write_text(const std::string& name, const std::string& text) {
  const auto path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("tight then check finds nothing") {
  const auto path = temp_path("tight9.json");
  REQUIRE(cli({"tight", "--n", "9", "--out", path}).code == kExitWitness);
  CHECK(read_family_file(path).size() == 9);
  const auto r = cli({"check", "--in", path, "--class", "even"});
  CHECK(r.code == kExitNone);
  CHECK(r.out == "none\n");
}

TEST_CASE("check reports a witness") {
  const auto path = write_text("two_square.json", R"({"n":7,"cycles":[[3,6,2,1],[3,2,5,4],[3,2,5,4],[4,7,5,1]]})");
  const auto r = cli({"check", "--in", path});
  CHECK(r.code == kExitWitness);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result") == "witness");
}

TEST_CASE("check with a tiny budget is unknown") {
  const auto path = temp_path("tight12.json");
  REQUIRE(cli({"tight", "--n", "12", "--out", path}).code == kExitWitness);
  const auto r = cli({"--budget", "1", "check", "--in", path});
  CHECK(r.code == kExitUnknown);
  CHECK(r.out == "unknown\n");
}

TEST_CASE("extract writes a witness and a trace") {
  const auto path = write_text("four.json", R"({"n":4,"cycles":[[1,2,3,4],[1,3,2,4],[1,2,4,3],[1,2,3,4]]})");
  const auto trace = temp_path("four.jsonl");
  const auto r = cli({"extract", "--in", path, "--trace", trace});
  CHECK(r.code == kExitWitness);
  CHECK(nlohmann::json::parse(r.out).at("witness").is_object());
  CHECK(std::filesystem::file_size(trace) > 0);
}

TEST_CASE("extract below the threshold is a precondition violation") {
  const auto path = write_text("three.json", R"({"n":4,"cycles":[[1,2,3,4],[1,3,2,4],[1,2,4,3]]})");
  const auto r = cli({"extract", "--in", path});
  CHECK(r.code == kExitMalformed);
  CHECK(r.err.find("precondition") != std::string::npos);
}

TEST_CASE("malformed input and usage errors") {
  const auto bad = write_text("bad.json", R"({"n":4,"cycles":[[1,2,9]]})");
  CHECK(cli({"check", "--in", bad}).code == kExitMalformed);
  const auto junk = write_text("junk.json", "not json");
  CHECK(cli({"check", "--in", junk}).code == kExitMalformed);
  CHECK(cli({"check"}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"tight", "--n", "3"}).code == kExitUsage);
  const auto good = write_text("good.json", R"({"n":4,"cycles":[[1,2,3,4]]})");
  CHECK(cli({"check", "--in", good, "--class", "prime"}).code == kExitUsage);
}

TEST_CASE("coincident families from the command line") {
  const auto path = temp_path("odd5.json");
  REQUIRE(cli({"tight", "--n", "5", "--kind", "odd", "--out", path}).code == kExitWitness);
  CHECK(read_family_file(path).size() == 4);
  CHECK(cli({"check", "--in", path, "--class", "odd"}).code == kExitNone);
}

TEST_CASE("extremal report") {
  const auto r = cli({"--seed", "7", "extremal", "--n", "4", "--class", "even"});
  CHECK(r.code == kExitWitness);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("f_value") == 4);
  CHECK(j.at("seed") == 7);
  CHECK(cli({"--budget", "2", "extremal", "--n", "5", "--class", "all"}).code == kExitUnknown);
}

TEST_CASE("DOT export") {
  const auto path = write_text("dot.json", R"({"n":4,"cycles":[[1,2,3,4]]})");
  const auto r = cli({"export-dot", "--in", path});
  CHECK(r.code == kExitWitness);
  CHECK(r.out.find("graph") != std::string::npos);
  CHECK(r.out.find("1 -- 2") != std::string::npos);
}
