#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "forcelab/cli.hpp"
#include "forcelab/hset_json.hpp"

using namespace forcelab;
using namespace forcelab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "forcelab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

// {<∅,0>} and ∅ = check(∅), as nested arrays.
const std::string kMemNames = "[[], [[[[]]]]]";

std::vector<std::string> statuses_of(const Json& report, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& r : report.at("reports")) {
    if (r.at("check").get<std::string>().starts_with(prefix)) out.push_back(r.at("status"));
  }
  return out;
}

}  // namespace

TEST_CASE("verify on the v-shape notion holds everywhere") {
  const Run r = run({"verify", "--rank", "3", "--poset", "v-shape", "--suites", "names,fundamental"});
  CHECK(r.code == kOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("summary").at("violated") == 0);
  CHECK(j.at("summary").at("precondition_unmet") == 0);
  CHECK(j.at("summary").at("holds").get<std::size_t>() == j.at("reports").size());
  CHECK(j.at("config").at("suites") == Json::array({"names", "fundamental"}));
}

TEST_CASE("ground rank is bounded") {
  const Run r = run({"verify", "--rank", "9"});
  CHECK(r.code == kConfigError);
  CHECK(r.err.find("stage-too-large") != std::string::npos);
  CHECK(run({"extension", "--rank", "6", "--poset", "chain-2"}).code == kConfigError);
  CHECK(run({"gen-model", "--rank", "7"}).code == kConfigError);
}

TEST_CASE("axioms at rank 4 report unmet closure without violations") {
  const Run r = run({"verify", "--rank", "4", "--suites", "axioms"});
  CHECK(r.code == kOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("summary").at("violated") == 0);
  const auto pairing = statuses_of(j, "pairing");
  CHECK(std::count(pairing.begin(), pairing.end(), "PRECONDITION_UNMET") > 0);
  for (const char* always : {"extensionality", "foundation", "transitive"}) {
    for (const auto& s : statuses_of(j, always)) CHECK(s == "HOLDS");
  }
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  const std::vector<std::string> args{"verify", "--rank", "3", "--poset", "diamond", "--seed", "17"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"config", "reports", "summary"});
  CHECK(j.at("config").begin().key() == "ground_rank");

  // Suite order follows the suite ids, not the command line.
  const Json k = Json::parse(run({"verify", "--rank", "3", "--suites", "recursion,renaming"}).out);
  CHECK(k.at("reports").front().at("suite") == "renaming");

  const Json timed = Json::parse(run({"verify", "--rank", "2", "--suites", "recursion", "--timing"}).out);
  CHECK(timed.contains("wall_seconds"));
}

TEST_CASE("forces with trace") {
  Run r = run({"forces", "--rank", "4", "--poset", "v-shape", "--formula", "Mem 0 1", "--names-json", kMemNames,
               "-p", "0", "--trace"});
  CHECK(r.code == kOk);
  CHECK(r.out == "true\nG={0,2}  satisfied\n");

  r = run({"forces", "--rank", "4", "--poset", "v-shape", "--formula", "Mem 0 1", "--names-json", kMemNames, "-p",
           "top", "--trace"});
  CHECK(r.out == "false\nG={0,2}  satisfied\nG={1,2}  counterexample\n");

  for (const char* p : {"0", "1", "2"}) {
    r = run({"forces", "--poset", "v-shape", "--formula", "Or (Mem 0 1) (Neg (Mem 0 1))", "--names-json", kMemNames,
             "-p", p});
    CHECK(r.out == "true\n");
  }

  const auto names = scratch("names.json");
  write(names, kMemNames);
  r = run({"forces", "--formula", "Mem 0 1", "--names", names.string(), "-p", "1"});
  CHECK(r.out == "false\n");
}

TEST_CASE("forces input errors") {
  auto code = [](std::vector<std::string> extra) {
    std::vector<std::string> args{"forces", "--poset", "v-shape"};
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args).code;
  };
  CHECK(code({"--formula", "Mem 0", "--names-json", kMemNames, "-p", "0"}) == kConfigError);
  CHECK(code({"--formula", "Mem 0 1", "--names-json", "[[]", "-p", "0"}) == kConfigError);
  CHECK(code({"--formula", "Mem 0 1", "--names-json", "[[]]", "-p", "0"}) == kConfigError);
  CHECK(code({"--formula", "Mem 0 1", "--names-json", kMemNames, "-p", "5"}) == kConfigError);
  CHECK(code({"--formula", "Mem 0 1", "--names-json", kMemNames}) == kConfigError);
  // {{{{{}}}}} has rank 5, outside V_4.
  CHECK(code({"--formula", "Eq 0 0", "--names-json", "[[[[[[]]]]]]", "-p", "0"}) == kConfigError);
}

TEST_CASE("extension dumps") {
  Run r = run({"extension", "--rank", "3", "--poset", "trivial"});
  CHECK(r.code == kOk);
  Json j = Json::parse(r.out);
  CHECK(j.at("new_elements").empty());
  CHECK(j.at("universe_size") == 1);
  CHECK(j.at("generic") == Json::array({0}));

  r = run({"extension", "--rank", "4", "--poset", "v-shape", "--minimal", "0"});
  CHECK(r.code == kOk);
  j = Json::parse(r.out);
  CHECK(j.at("generic") == Json::array({0, 2}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"ground_rank", "poset", "generic", "universe_size", "new_elements"});
  // G = {0,2} already lies in V_4, so it cannot be new.
  const HSet g = HSet::of({von_neumann(0), von_neumann(2)});
  for (const auto& x : j.at("new_elements")) CHECK(hset_from_json(x) != g);

  const Run a = run({"extension", "--rank", "4", "--poset", "chain-4"});
  CHECK(a.code == kOk);
  CHECK(a.out == run({"extension", "--rank", "4", "--poset", "chain-4", "--minimal", "0"}).out);

  r = run({"extension", "--rank", "4", "--poset", "v-shape", "--minimal", "2"});
  CHECK(r.code == kConfigError);
  CHECK(r.err.find("not-minimal") != std::string::npos);
  CHECK(run({"extension", "--poset", "v-shape"}).code == kConfigError);
}

TEST_CASE("files for posets, formulas and grounds") {
  const auto poset = scratch("poset.json");
  write(poset, R"({"elements": [0, 1, 2, 3], "le": [[0, 1], [1, 3], [0, 3], [2, 3]], "top": 3,
                   "auto_reflexive": true})");
  const auto formulas = scratch("formulas.txt");
  write(formulas, "# two formulas\nMem 0 1\n\nAll (Imp (Mem 0 1) (Mem 0 2))\n");
  Run r = run({"verify", "--rank", "3", "--poset", poset.string(), "--formulas", formulas.string(), "--suites",
               "fundamental"});
  CHECK(r.code == kOk);
  CHECK(Json::parse(r.out).at("config").at("formula_count") == 2);

  const auto ground = scratch("ground.json");
  r = run({"gen-model", "--rank", "3", "--poset", "v-shape", "--with-notion", "-o", ground.string()});
  CHECK(r.code == kOk);
  r = run({"verify", "--ground", ground.string(), "--poset", "v-shape", "--suites", "axioms"});
  CHECK(r.code == kOk);
  for (const auto& s : statuses_of(Json::parse(r.out), "generic-membership")) CHECK(s == "HOLDS");

  const auto bad_poset = scratch("bad_poset.json");
  write(bad_poset, R"({"elements": [0, 1], "le": [[0, 1], [1, 0]], "top": 1, "auto_reflexive": true})");
  r = run({"verify", "--poset", bad_poset.string()});
  CHECK(r.code == kConfigError);
  CHECK(r.err.find("not-antisymmetric") != std::string::npos);

  const auto bad_ground = scratch("bad_ground.json");
  write(bad_ground, R"({"universe": [[[]]]})");
  CHECK(run({"verify", "--ground", bad_ground.string()}).code == kConfigError);
  write(formulas, "Mem 0 1\nFoo 1\n");
  CHECK(run({"verify", "--formulas", formulas.string()}).code == kConfigError);
}

TEST_CASE("configuration errors") {
  CHECK(run({}).code == kConfigError);
  CHECK(run({"verify", "--bogus"}).code == kConfigError);
  CHECK(run({"verify", "--suites", "names,nope"}).code == kConfigError);
  CHECK(run({"verify", "--poset", "pentagon"}).code == kConfigError);
  CHECK(run({"verify", "--format", "yaml"}).code == kConfigError);
  CHECK(run({"--caps", "poset_scan", "verify"}).code == kConfigError);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("exceeded caps exit with 3") {
  Run r = run({"--caps", "model_elements=4", "verify", "--rank", "4", "--suites", "names"});
  CHECK(r.code == kCapExceeded);
  CHECK(r.err.find("model-too-large") != std::string::npos);

  ::setenv("FORCELAB_CAPS", "poset_scan=3", 1);
  r = run({"verify", "--rank", "3", "--poset", "diamond", "--suites", "fundamental"});
  ::unsetenv("FORCELAB_CAPS");
  CHECK(r.code == kCapExceeded);
  CHECK(r.err.find("poset-too-large") != std::string::npos);

  ::setenv("FORCELAB_CAPS", "bogus=1", 1);
  CHECK(run({"verify", "--rank", "2", "--suites", "recursion"}).code == kConfigError);
  ::unsetenv("FORCELAB_CAPS");
}

TEST_CASE("exit code follows the violated count") {
  RunReport report;
  report.suites.push_back({"names", {CheckReport("a"), CheckReport("b")}, 0});
  CHECK(report.exit_code() == kOk);
  report.suites[0].reports[1].record(CheckStatus::kPreconditionUnmet);
  CHECK(report.exit_code() == kOk);
  report.suites[0].reports[0].record(CheckStatus::kViolated, HSet());
  CHECK(report.exit_code() == kViolated);
  const Json j = to_json(report);
  CHECK(j.at("summary").at("violated") == 1);
  CHECK(j.at("summary").at("precondition_unmet") == 1);
  CHECK(j.at("summary").at("holds") == 0);
}

TEST_CASE("builtin formulas") {
  const auto a = builtin_formulas(3);
  CHECK(a.size() == 30);
  CHECK(a == builtin_formulas(3));
  for (const auto& phi : a) {
    CHECK(phi.depth() <= 3);
    CHECK(phi.arity() <= 2);
  }
}
