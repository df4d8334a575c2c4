#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "forcelab/caps.hpp"
#include "forcelab/error.hpp"
#include "forcelab/extension.hpp"
#include "forcelab/formula.hpp"
#include "forcelab/json.hpp"
#include "forcelab/report.hpp"
#include "forcelab/semantics.hpp"

namespace forcelab::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kConfigError = 2, kCapExceeded = 3 };

// Suite ids in report order.
inline const std::vector<std::string> kSuiteIds = {"renaming", "recursion", "names", "fundamental", "axioms"};

inline constexpr std::size_t kMaxGroundRank = 5;

struct RunConfig {
  std::size_t ground_rank = 4;
  std::string ground_file;  // a model JSON file; replaces V_rank when set
  std::string poset = "v-shape";
  std::string formulas_file;
  std::vector<std::string> suites;  // empty runs every suite
  std::uint64_t seed = 0;
  Caps caps;
};

// Thrown for invalid configurations. Always maps to exit code 2, even when the
// code is a cap code (ground_rank above 5 reports stage-too-large).
struct ConfigError : Error {
  using Error::Error;
  explicit ConfigError(const Error& e) : Error(e) {}
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> reports;
  double seconds = 0;
};

struct RunReport {
  Json config;
  std::vector<SuiteResult> suites;

  std::size_t count(CheckStatus status) const;
  int exit_code() const { return count(CheckStatus::kViolated) == 0 ? kOk : kViolated; }
};

// Throws ConfigError for bad configurations and Error for failures while running.
RunReport cmd_verify(const RunConfig& config);

// Wall times are left out unless requested, so reports are byte-identical
// across runs.
Json to_json(const RunReport& report, bool with_timing = false);
std::string render_text(const RunReport& report);

// A file path when one exists, a preset name otherwise.
ForcingNotion load_notion(const std::string& spec);
// One formula per line; blank lines and lines starting with '#' are skipped.
std::vector<Formula> load_formulas(const std::string& path);
// Eight fixed formulas and 22 seeded random ones, core depth ≤ 3 and arity ≤ 2.
std::vector<Formula> builtin_formulas(std::uint64_t seed);
Model load_ground(const RunConfig& config);

struct ForcesResult {
  bool verdict = false;
  std::vector<ConditionSet> filters;  // generic filters containing p
  std::vector<bool> satisfied;
};

ForcesResult cmd_forces(const Model& ground, const ForcingNotion& notion, const Formula& phi,
                        const std::vector<HSet>& names, Condition p, const Caps& caps);

// {"ground_rank","poset","generic","universe_size","new_elements"}.
// Throws ConfigError(kNotMinimal) when the element is not minimal.
Json cmd_extension(std::size_t rank, const ForcingNotion& notion, const HSet& minimal, const Caps& caps);

// Parses a command line (without the program name), runs it and returns the
// exit code. Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forcelab::cli
