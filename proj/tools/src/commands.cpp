#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "forcelab/cli.hpp"
#include "forcelab/ground.hpp"
#include "forcelab/hset_json.hpp"
#include "forcelab/random.hpp"
#include "forcelab/suites.hpp"

namespace forcelab::cli {

namespace {

constexpr std::size_t kRenamingInstances = 200;
constexpr std::size_t kRecursionInstances = 200;
constexpr std::size_t kRandomNames = 100;
constexpr std::size_t kEnvsPerFormula = 2;
constexpr std::size_t kSeparationFormulas = 3;

Json caps_to_json(const Caps& caps) {
  Json j;
  j["max_stage"] = caps.max_stage;
  j["stage_elements"] = caps.stage_elements;
  j["poset_scan"] = caps.poset_scan;
  j["model_elements"] = caps.model_elements;
  j["pow_name_candidates"] = caps.pow_name_candidates;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ConfigError(ErrorCode::kInvalidArgument, path + ": " + e.what());
  }
}

std::vector<std::string> selected_suites(const RunConfig& config) {
  if (config.suites.empty()) return kSuiteIds;
  for (const auto& s : config.suites) {
    if (std::find(kSuiteIds.begin(), kSuiteIds.end(), s) == kSuiteIds.end()) {
      throw ConfigError(ErrorCode::kInvalidArgument, "unknown suite '" + s + "'");
    }
  }
  std::vector<std::string> out;
  for (const auto& id : kSuiteIds) {
    if (std::find(config.suites.begin(), config.suites.end(), id) != config.suites.end()) out.push_back(id);
  }
  return out;
}

// Preset and file errors are configuration errors, whatever their code.
template <class F>
auto as_config(F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    if (is_cap_error(e.code())) throw;
    throw ConfigError(e);
  }
}

}  // namespace

std::size_t RunReport::count(CheckStatus status) const {
  std::size_t n = 0;
  for (const auto& s : suites) {
    for (const auto& r : s.reports) n += r.status == status ? 1 : 0;
  }
  return n;
}

ForcingNotion load_notion(const std::string& spec) {
  return as_config([&] {
    if (std::filesystem::is_regular_file(spec)) return notion_from_json(read_json(spec));
    return preset_notion(spec);
  });
}

std::vector<Formula> load_formulas(const std::string& path) {
  return as_config([&] {
    std::istringstream lines(read_file(path));
    std::vector<Formula> out;
    std::string line;
    while (std::getline(lines, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out.push_back(parse_formula(line));
    }
    return out;
  });
}

std::vector<Formula> builtin_formulas(std::uint64_t seed) {
  std::vector<Formula> out;
  for (const char* text : {"Mem 0 1", "Eq 0 1", "Neg (Mem 1 0)", "Nand (Mem 0 1) (Eq 0 1)", "All (Neg (Mem 0 1))",
                           "All (Nand (Mem 0 1) (Mem 0 2))", "Neg (All (Mem 1 0))", "All (Nand (Mem 0 1) (Mem 2 0))"}) {
    out.push_back(parse_formula(text));
  }
  Rng rng(derive_seed(seed, kFormulaStream));
  while (out.size() < 30) out.push_back(random_formula(rng, 1 + rng.below(3), 1 + rng.below(2)));
  return out;
}

Model load_ground(const RunConfig& config) {
  if (!config.ground_file.empty()) {
    const Json j = read_json(config.ground_file);
    return as_config([&] { return model_from_json(j, config.caps); });
  }
  return Model::stage(config.ground_rank, config.caps);
}

RunReport cmd_verify(const RunConfig& config) {
  if (config.ground_file.empty() && config.ground_rank > kMaxGroundRank) {
    throw ConfigError(ErrorCode::kStageTooLarge, "ground rank " + std::to_string(config.ground_rank) +
                                                     " exceeds " + std::to_string(kMaxGroundRank));
  }
  const auto suites = selected_suites(config);
  const ForcingNotion notion = load_notion(config.poset);
  const std::vector<Formula> formulas =
      config.formulas_file.empty() ? builtin_formulas(config.seed) : load_formulas(config.formulas_file);
  const Model ground = load_ground(config);

  RunReport report;
  Json& c = report.config;
  c["ground_rank"] = config.ground_file.empty() ? Json(config.ground_rank) : Json(nullptr);
  c["ground"] = config.ground_file.empty() ? "V_" + std::to_string(config.ground_rank) : config.ground_file;
  c["ground_size"] = ground.size();
  c["poset"] = config.poset;
  c["formulas"] = config.formulas_file.empty() ? "builtin" : config.formulas_file;
  c["formula_count"] = formulas.size();
  c["suites"] = suites;
  c["seed"] = config.seed;
  c["caps"] = caps_to_json(config.caps);

  const ForcingRelation rel(ground, notion, config.caps);
  const std::size_t max_rank = config.ground_file.empty() ? config.ground_rank : ground.max_rank() + 1;

  auto run = [&](const std::string& id) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult result;
    result.suite = id;
    if (id == "renaming") result.reports = renaming_suite(config.seed, kRenamingInstances, max_rank);
    else if (id == "recursion") result.reports = recursion_suite(config.seed, kRecursionInstances);
    else if (id == "names") result.reports = names_suite(rel, config.seed, kRandomNames);
    else if (id == "fundamental") result.reports = fundamental_suite(rel, formulas, config.seed, kEnvsPerFormula);
    else result.reports = axioms_suite(rel, formulas, kSeparationFormulas);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  std::vector<std::future<SuiteResult>> futures;
  for (const auto& id : suites) futures.push_back(std::async(std::launch::async, run, id));
  for (auto& f : futures) report.suites.push_back(f.get());
  return report;
}

Json to_json(const RunReport& report, bool with_timing) {
  Json j;
  j["config"] = report.config;
  auto reports = Json::array();
  for (const auto& s : report.suites) {
    for (const auto& r : s.reports) {
      Json entry;
      entry["suite"] = s.suite;
      entry["check"] = r.axiom;
      const Json fields = to_json(r);
      for (const auto& [key, value] : fields.items()) {
        if (key != "axiom") entry[key] = value;
      }
      reports.push_back(std::move(entry));
    }
  }
  j["reports"] = std::move(reports);
  Json summary;
  summary["holds"] = report.count(CheckStatus::kHolds);
  summary["precondition_unmet"] = report.count(CheckStatus::kPreconditionUnmet);
  summary["violated"] = report.count(CheckStatus::kViolated);
  j["summary"] = std::move(summary);
  if (with_timing) {
    Json timing;
    for (const auto& s : report.suites) timing[s.suite] = s.seconds;
    j["wall_seconds"] = std::move(timing);
  }
  return j;
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  for (const auto& s : report.suites) {
    out << "[" << s.suite << "]\n";
    for (const auto& r : s.reports) {
      out << "  " << to_string(r.status) << "  " << r.axiom << "  (" << r.instances_checked;
      if (r.instances_unmet > 0) out << ", " << r.instances_unmet << " unmet";
      out << ")";
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
  }
  out << "holds " << report.count(CheckStatus::kHolds) << ", precondition_unmet "
      << report.count(CheckStatus::kPreconditionUnmet) << ", violated " << report.count(CheckStatus::kViolated)
      << "\n";
  return out.str();
}

ForcesResult cmd_forces(const Model& ground, const ForcingNotion& notion, const Formula& phi,
                        const std::vector<HSet>& names, Condition p, const Caps& caps) {
  const ForcingRelation rel(ground, notion, caps);
  ForcesResult result;
  result.verdict = true;
  for (const auto& row : rel.trace(p, phi, names)) {
    result.filters.push_back(rel.filters()[row.filter].members());
    result.satisfied.push_back(row.satisfied);
    result.verdict = result.verdict && row.satisfied;
  }
  return result;
}

Json cmd_extension(std::size_t rank, const ForcingNotion& notion, const HSet& minimal, const Caps& caps) {
  if (rank > kMaxGroundRank) {
    throw ConfigError(ErrorCode::kStageTooLarge,
                      "ground rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxGroundRank));
  }
  const auto p = notion.index_of(minimal);
  const auto& mins = notion.minimal();
  if (!p || std::find(mins.begin(), mins.end(), *p) == mins.end()) {
    throw ConfigError(ErrorCode::kNotMinimal, element_to_json(minimal).dump() + " is not a minimal condition");
  }
  const GFilter filter(notion.up_set(*p), MinimalUpset{*p});
  const NameContext ctx(Model::stage(rank, caps), notion, filter);
  const Extension ext = build_extension(ctx, caps);

  Json j;
  j["ground_rank"] = rank;
  j["poset"] = to_json(notion);
  auto generic = Json::array();
  for (Condition q : filter.members().members()) generic.push_back(element_to_json(notion.element(q)));
  j["generic"] = std::move(generic);
  j["universe_size"] = ext.universe().size();
  const SetCollection fresh = ext.new_elements();
  j["new_elements"] = to_json(std::span<const HSet>(fresh));
  return j;
}

}  // namespace forcelab::cli
