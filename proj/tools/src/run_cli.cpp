#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "forcelab/cli.hpp"
#include "forcelab/ground.hpp"
#include "forcelab/hset_json.hpp"
#include "forcelab/suites.hpp"

namespace forcelab::cli {

namespace {

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(ErrorCode::kInvalidArgument, "bad " + what + ": " + e.what());
  }
}

// A condition written as JSON (a natural or a nested array), or "top".
HSet parse_element(const std::string& text, const ForcingNotion& notion) {
  if (text == "top") return notion.top_element();
  try {
    return element_from_json(parse_json_text(text, "condition"));
  } catch (const Error& e) {
    throw ConfigError(ErrorCode::kInvalidArgument, std::string("bad condition: ") + e.what());
  }
}

std::vector<HSet> parse_names(const Json& j) {
  if (!j.is_array()) throw ConfigError(ErrorCode::kInvalidArgument, "names must be a JSON array of sets");
  try {
    std::vector<HSet> names;
    for (const auto& x : j) names.push_back(hset_from_json(x));
    return names;
  } catch (const Error& e) {
    throw ConfigError(ErrorCode::kInvalidArgument, std::string("bad names: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ConfigError(ErrorCode::kInvalidArgument, "cannot write " + path);
  file << text;
}

Model ground_for(std::size_t rank, const std::string& ground_file, const Caps& caps) {
  RunConfig config;
  config.ground_rank = rank;
  config.ground_file = ground_file;
  config.caps = caps;
  if (ground_file.empty() && rank > kMaxGroundRank) {
    throw ConfigError(ErrorCode::kStageTooLarge,
                      "ground rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxGroundRank));
  }
  return load_ground(config);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"forcelab: finite forcing experiments"};
  app.require_subcommand(1);

  std::string caps_spec;
  app.add_option("--caps", caps_spec, "cap overrides, e.g. poset_scan=10,model_elements=5000");

  RunConfig vc;
  std::string output;
  std::string format = "json";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
  verify->add_option("--rank", vc.ground_rank, "ground model V_rank (at most 5)");
  verify->add_option("--ground", vc.ground_file, "ground model JSON file, replaces --rank");
  verify->add_option("--poset", vc.poset, "preset name or poset JSON file");
  verify->add_option("--formulas", vc.formulas_file, "formula file, one per line");
  verify->add_option("--suites", vc.suites, "renaming,recursion,names,fundamental,axioms")->delimiter(',');
  verify->add_option("--seed", vc.seed);
  verify->add_option("-o,--output", output, "write the report here instead of stdout");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", timing, "include wall time per suite");

  std::size_t rank = 4;
  std::string ground_file;
  std::string poset = "v-shape";
  std::string formula_text;
  std::string names_file;
  std::string names_json;
  std::string condition;
  bool trace = false;
  auto* forces = app.add_subcommand("forces", "decide p ⊩ φ(τ...) over a ground model");
  forces->add_option("--rank", rank);
  forces->add_option("--ground", ground_file);
  forces->add_option("--poset", poset);
  forces->add_option("--formula", formula_text)->required();
  auto* nf = forces->add_option("--names", names_file, "JSON file holding an array of names");
  forces->add_option("--names-json", names_json, "inline JSON array of names")->excludes(nf);
  forces->add_option("-p,--condition", condition, "condition as JSON, or \"top\"")->required();
  forces->add_flag("--trace", trace, "print the satisfaction table per generic filter");

  std::string minimal;
  auto* extension = app.add_subcommand("extension", "dump M[G] for the filter above a minimal condition");
  extension->add_option("--rank", rank);
  extension->add_option("--poset", poset);
  extension->add_option("--minimal", minimal, "minimal condition as JSON; optional when unique");
  extension->add_option("-o,--output", output);

  bool with_notion = false;
  auto* gen = app.add_subcommand("gen-model", "write a ground model as JSON");
  gen->add_option("--rank", rank);
  gen->add_option("--poset", poset);
  gen->add_flag("--with-notion", with_notion, "add P, ≤, Ġ and the check names of P, closed downward");
  gen->add_option("-o,--output", output);

  std::vector<std::string> storage{"forcelab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    Caps caps;
    try {
      caps = Caps::parse(caps_spec, Caps::from_environment());
    } catch (const Error& e) {
      throw ConfigError(e);
    }

    if (*verify) {
      vc.caps = caps;
      const RunReport report = cmd_verify(vc);
      const std::string text = format == "text" ? render_text(report) : to_json(report, timing).dump(2) + "\n";
      emit(text, output, out);
      return report.exit_code();
    }
    if (*forces) {
      const ForcingNotion notion = load_notion(poset);
      const Model ground = ground_for(rank, ground_file, caps);
      Formula phi = [&] {
        try {
          return parse_formula(formula_text);
        } catch (const Error& e) {
          throw ConfigError(e);
        }
      }();
      std::vector<HSet> names;
      if (!names_file.empty()) {
        std::ifstream in(names_file);
        if (!in) throw ConfigError(ErrorCode::kInvalidArgument, "cannot read " + names_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        names = parse_names(parse_json_text(text, "names file"));
      } else if (!names_json.empty()) {
        names = parse_names(parse_json_text(names_json, "names"));
      }
      const auto p = notion.index_of(parse_element(condition, notion));
      if (!p) throw ConfigError(ErrorCode::kInvalidArgument, "condition " + condition + " is not in P");
      if (names.size() < phi.arity()) {
        throw ConfigError(ErrorCode::kEnvTooShort, "formula needs " + std::to_string(phi.arity()) + " names");
      }
      for (const auto& x : names) {
        if (!ground.contains(x)) throw ConfigError(ErrorCode::kEnvNotInModel, x.str() + " is not in M");
      }
      const ForcesResult result = cmd_forces(ground, notion, phi, names, *p, caps);
      out << (result.verdict ? "true" : "false") << "\n";
      if (trace) {
        for (std::size_t i = 0; i < result.filters.size(); ++i) {
          out << "G=" << filter_label(notion, result.filters[i]) << "  "
              << (result.satisfied[i] ? "satisfied" : "counterexample") << "\n";
        }
      }
      return kOk;
    }
    if (*extension) {
      const ForcingNotion notion = load_notion(poset);
      HSet m;
      if (!minimal.empty()) {
        m = parse_element(minimal, notion);
      } else if (notion.minimal().size() == 1) {
        m = notion.element(notion.minimal().front());
      } else {
        throw ConfigError(ErrorCode::kNotMinimal, "several minimal conditions; pass --minimal");
      }
      emit(cmd_extension(rank, notion, m, caps).dump(2) + "\n", output, out);
      return kOk;
    }
    const Model model = [&] {
      if (rank > kMaxGroundRank) {
        throw ConfigError(ErrorCode::kStageTooLarge,
                          "ground rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxGroundRank));
      }
      if (!with_notion) return Model::stage(rank, caps);
      return forcing_ground(rank, load_notion(poset), {}, caps);
    }();
    emit(model_to_json(model).dump() + "\n", output, out);
    return kOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_cap_error(e.code()) ? kCapExceeded : kConfigError;
  }
}

}  // namespace forcelab::cli
