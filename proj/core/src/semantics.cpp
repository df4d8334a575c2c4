#include "forcelab/semantics.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "forcelab/error.hpp"

namespace forcelab {

struct Model::Data {
  SetCollection universe;
  std::unordered_set<HSet> lookup;
  bool transitive = true;
};

Model::Model() : data_(std::make_shared<Data>()) {}

Model::Model(SetCollection universe) {
  auto data = std::make_shared<Data>();
  canonicalize(universe);
  data->universe = std::move(universe);
  data->lookup.reserve(data->universe.size());
  data->lookup.insert(data->universe.begin(), data->universe.end());
  data->transitive = forcelab::is_transitive(data->universe);
  data_ = std::move(data);
}

std::span<const HSet> Model::universe() const { return data_->universe; }
std::size_t Model::size() const { return data_->universe.size(); }
bool Model::contains(const HSet& x) const { return data_->lookup.count(x) != 0; }
bool Model::is_transitive() const { return data_->transitive; }

Model Model::stage(std::size_t k, const Caps& caps) { return Model(v_stage(k, caps)); }

std::uint32_t Model::max_rank() const {
  std::uint32_t r = 0;
  for (const auto& x : data_->universe) r = std::max(r, x.rank());
  return r;
}

namespace {

// The binding stack stores the environment reversed: index i lives at
// stack[size - 1 - i], so entering a quantifier is a push_back.
class Evaluator {
 public:
  explicit Evaluator(const Model& model) : universe_(model.universe()) {}

  bool eval(const Formula& phi, std::vector<HSet>& stack) const {
    switch (phi.kind()) {
      case FormulaKind::kMember:
        return at(stack, phi.rhs_index()).contains(at(stack, phi.lhs_index()));
      case FormulaKind::kEqual:
        return at(stack, phi.lhs_index()) == at(stack, phi.rhs_index());
      case FormulaKind::kNand:
        return !(eval(phi.left(), stack) && eval(phi.right(), stack));
      case FormulaKind::kForall: {
        for (const auto& a : universe_) {
          stack.push_back(a);
          const bool ok = eval(phi.body(), stack);
          stack.pop_back();
          if (!ok) return false;
        }
        return true;
      }
    }
    return false;
  }

 private:
  static const HSet& at(const std::vector<HSet>& stack, std::size_t i) {
    return stack[stack.size() - 1 - i];
  }

  std::span<const HSet> universe_;
};

}  // namespace

bool sats(const Model& model, const Formula& phi, std::span<const HSet> env) {
  if (env.size() < phi.arity()) {
    throw Error(ErrorCode::kEnvTooShort, "environment of length " + std::to_string(env.size()) +
                                             " for arity " + std::to_string(phi.arity()));
  }
  for (const auto& x : env) {
    if (!model.contains(x)) throw Error(ErrorCode::kEnvNotInModel, x.str());
  }
  std::vector<HSet> stack(env.rbegin(), env.rend());
  stack.reserve(env.size() + phi.quantifier_depth());
  return Evaluator(model).eval(phi, stack);
}

HSet separation_set(const Model& model, const Formula& phi, const HSet& a, const HSet& set) {
  if (phi.arity() > 2) {
    throw Error(ErrorCode::kArityTooLarge, "separation formula of arity " + std::to_string(phi.arity()));
  }
  std::vector<HSet> out;
  for (const auto& x : set.elements()) {
    if (!model.contains(x)) continue;
    const HSet env[] = {x, a};
    if (sats(model, phi, env)) out.push_back(x);
  }
  return HSet::from_sorted_unique(std::move(out));
}

std::string_view to_string(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::kExtensionality: return "extensionality";
    case AxiomId::kFoundation: return "foundation";
    case AxiomId::kPairing: return "pairing";
    case AxiomId::kUnion: return "union";
    case AxiomId::kSeparation: return "separation";
    case AxiomId::kPowerset: return "powerset";
  }
  return "unknown";
}

AxiomId parse_axiom(std::string_view name) {
  for (auto a : {AxiomId::kExtensionality, AxiomId::kFoundation, AxiomId::kPairing, AxiomId::kUnion,
                 AxiomId::kSeparation, AxiomId::kPowerset}) {
    if (name == to_string(a)) return a;
  }
  if (name == "separation-instance") return AxiomId::kSeparation;
  throw Error(ErrorCode::kUnknownAxiom, std::string(name));
}

namespace {

HSet trace_in(const Model& model, const HSet& z) {
  if (model.is_transitive()) return z;
  std::vector<HSet> kept;
  for (const auto& w : z.elements()) {
    if (model.contains(w)) kept.push_back(w);
  }
  return HSet::from_sorted_unique(std::move(kept));
}

// Answers "is there z ∈ M with z ∩ M = T" for T ⊆ M, the relativized form of
// "the set T exists in M".
class TraceIndex {
 public:
  explicit TraceIndex(const Model& model) : model_(model) {
    if (!model.is_transitive()) {
      for (const auto& z : model.universe()) traces_.insert(trace_in(model, z));
    }
  }

  bool exists(const HSet& t) const {
    return model_.is_transitive() ? model_.contains(t) : traces_.count(t) != 0;
  }

 private:
  const Model& model_;
  std::unordered_set<HSet> traces_;
};

CheckReport check_extensionality(const Model& model) {
  CheckReport report("extensionality");
  if (model.is_transitive()) {
    // z ∩ M = z, and canonical representation makes equal member sets equal values.
    for (std::size_t i = 0; i < model.size(); ++i) report.record(CheckStatus::kHolds);
    return report;
  }
  std::unordered_map<HSet, HSet> seen;
  for (const auto& x : model.universe()) {
    auto [it, inserted] = seen.emplace(trace_in(model, x), x);
    if (!inserted) {
      report.record(CheckStatus::kViolated, upair(it->second, x),
                    "distinct sets with the same members in M");
    } else {
      report.record(CheckStatus::kHolds);
    }
  }
  return report;
}

CheckReport check_foundation(const Model& model) {
  CheckReport report("foundation");
  for (const auto& x : model.universe()) {
    const HSet members = trace_in(model, x);
    if (members.empty()) {
      report.record(CheckStatus::kHolds);
      continue;
    }
    bool found = false;
    for (const auto& y : members.elements()) {
      bool minimal = true;
      for (const auto& z : y.elements()) {
        if (members.contains(z)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        found = true;
        break;
      }
    }
    report.record(found ? CheckStatus::kHolds : CheckStatus::kViolated, x, "no ∈-minimal element");
  }
  return report;
}

CheckReport check_pairing(const Model& model) {
  CheckReport report("pairing");
  TraceIndex index(model);
  const auto u = model.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      const bool ok = index.exists(upair(u[i], u[j]));
      report.record(ok ? CheckStatus::kHolds : CheckStatus::kViolated, opair(u[i], u[j]),
                    ok ? "" : "missing " + upair(u[i], u[j]).str());
    }
  }
  return report;
}

CheckReport check_union(const Model& model) {
  CheckReport report("union");
  TraceIndex index(model);
  for (const auto& x : model.universe()) {
    const HSet target = trace_in(model, big_union(trace_in(model, x)));
    const bool ok = index.exists(target);
    report.record(ok ? CheckStatus::kHolds : CheckStatus::kViolated, x,
                  ok ? "" : "missing union " + target.str());
  }
  return report;
}

CheckReport check_powerset(const Model& model) {
  CheckReport report("powerset");
  TraceIndex index(model);
  for (const auto& x : model.universe()) {
    const HSet xm = trace_in(model, x);
    std::vector<HSet> subsets;
    for (const auto& a : model.universe()) {
      if (is_subset(trace_in(model, a), xm)) subsets.push_back(a);
    }
    const HSet target = HSet::from_sorted_unique(std::move(subsets));
    const bool ok = index.exists(target);
    report.record(ok ? CheckStatus::kHolds : CheckStatus::kViolated, x,
                  ok ? "" : "missing Pow(x) ∩ M = " + target.str());
  }
  return report;
}

CheckReport check_separation(const Model& model, const AxiomParams& params) {
  if (!params.formula) throw Error(ErrorCode::kInvalidArgument, "separation needs a formula");
  const Formula& phi = *params.formula;
  if (phi.arity() > 2) {
    throw Error(ErrorCode::kArityTooLarge, "separation formula of arity " + std::to_string(phi.arity()));
  }
  CheckReport report("separation(" + print(phi) + ")");
  TraceIndex index(model);
  for (const auto& a : model.universe()) {
    for (const auto& set : model.universe()) {
      const HSet target = separation_set(model, phi, a, set);
      const bool ok = index.exists(target);
      report.record(ok ? CheckStatus::kHolds : CheckStatus::kViolated, opair(a, set),
                    ok ? "" : "missing " + target.str());
    }
  }
  return report;
}

}  // namespace

CheckReport check_relativized_axiom(const Model& model, AxiomId axiom, const AxiomParams& params) {
  switch (axiom) {
    case AxiomId::kExtensionality: return check_extensionality(model);
    case AxiomId::kFoundation: return check_foundation(model);
    case AxiomId::kPairing: return check_pairing(model);
    case AxiomId::kUnion: return check_union(model);
    case AxiomId::kSeparation: return check_separation(model, params);
    case AxiomId::kPowerset: return check_powerset(model);
  }
  throw Error(ErrorCode::kUnknownAxiom, "unhandled axiom");
}

}  // namespace forcelab
