#include "forcelab/extension.hpp"

#include <algorithm>
#include <thread>

#include "forcelab/error.hpp"

namespace forcelab {

const HSet& Extension::name_witness(const HSet& x) const {
  auto it = witness_.find(x);
  if (it == witness_.end()) throw Error(ErrorCode::kInvalidArgument, x.str() + " is not in M[G]");
  return it->second;
}

SetCollection Extension::new_elements() const {
  SetCollection out;
  for (const auto& x : universe()) {
    if (!ctx_.ground().contains(x)) out.push_back(x);
  }
  return out;
}

Extension build_extension(const NameContext& ctx, const Caps& caps) {
  const auto names = ctx.ground().universe();
  if (names.size() > caps.model_elements) {
    throw Error(ErrorCode::kModelTooLarge, std::to_string(names.size()) + " names exceed cap " +
                                               std::to_string(caps.model_elements));
  }
  std::vector<HSet> values(names.size());
  const std::size_t workers = std::clamp<std::size_t>(
      std::min<std::size_t>(std::thread::hardware_concurrency(), names.size() / 512), 1, 16);
  auto work = [&](std::size_t begin, std::size_t end) {
    Valuator val(ctx.notion(), ctx.filter().members());
    for (std::size_t i = begin; i < end; ++i) values[i] = val(names[i]);
  };
  if (workers == 1) {
    work(0, names.size());
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (names.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < names.size(); begin += chunk) {
      threads.emplace_back(work, begin, std::min(names.size(), begin + chunk));
    }
  }

  Extension ext(ctx);
  for (std::size_t i = 0; i < names.size(); ++i) ext.witness_.try_emplace(values[i], names[i]);
  ext.model_ = Model(std::move(values));
  return ext;
}

namespace {

struct SatKey {
  std::size_t filter;
  Formula phi;
  std::vector<HSet> names;

  friend bool operator==(const SatKey& a, const SatKey& b) {
    return a.filter == b.filter && a.names == b.names && a.phi == b.phi;
  }
};

struct SatKeyHash {
  std::size_t operator()(const SatKey& k) const noexcept {
    std::size_t h = k.phi.hash() * 31 + k.filter;
    for (const auto& x : k.names) h = h * 1000003 ^ x.hash();
    return h;
  }
};

}  // namespace

struct ForcingRelation::State {
  std::vector<std::once_flag> built;
  std::vector<std::unique_ptr<Extension>> extensions;
  std::mutex memo_mutex;
  std::unordered_map<SatKey, bool, SatKeyHash> memo;

  explicit State(std::size_t n) : built(n), extensions(n) {}
};

ForcingRelation::ForcingRelation(Model ground, ForcingNotion notion, const Caps& caps)
    : ground_(std::move(ground)),
      notion_(std::move(notion)),
      caps_(caps),
      filters_(generic_filters(notion_)),
      state_(std::make_unique<State>(filters_.size())) {
  if (!ground_.is_transitive()) throw Error(ErrorCode::kInvalidArgument, "ground model is not transitive");
  if (ground_.size() > caps_.model_elements) {
    throw Error(ErrorCode::kModelTooLarge, std::to_string(ground_.size()) + " names exceed cap " +
                                               std::to_string(caps_.model_elements));
  }
}

ForcingRelation::~ForcingRelation() = default;

std::optional<std::size_t> ForcingRelation::filter_index(ConditionSet members) const {
  for (std::size_t i = 0; i < filters_.size(); ++i) {
    if (filters_[i].members() == members) return i;
  }
  return std::nullopt;
}

const Extension& ForcingRelation::extension(std::size_t filter) const {
  if (filter >= filters_.size()) throw Error(ErrorCode::kInvalidArgument, "no such generic filter");
  std::call_once(state_->built[filter], [&] {
    state_->extensions[filter] =
        std::make_unique<Extension>(build_extension(NameContext(ground_, notion_, filters_[filter]), caps_));
  });
  return *state_->extensions[filter];
}

void ForcingRelation::prepare() const {
  std::vector<std::jthread> threads;
  for (std::size_t i = 0; i < filters_.size(); ++i) threads.emplace_back([this, i] { extension(i); });
}

bool ForcingRelation::satisfied(std::size_t filter, const Formula& phi, std::span<const HSet> names) const {
  for (const auto& tau : names) {
    if (!ground_.contains(tau)) throw Error(ErrorCode::kEnvNotInModel, "name " + tau.str() + " is not in M");
  }
  SatKey key{filter, phi, std::vector<HSet>(names.begin(), names.end())};
  {
    std::lock_guard lock(state_->memo_mutex);
    if (auto it = state_->memo.find(key); it != state_->memo.end()) return it->second;
  }
  const Extension& ext = extension(filter);
  Env values;
  values.reserve(names.size());
  for (const auto& tau : names) values.push_back(ext.ctx().val(tau));
  const bool result = sats(ext.model(), phi, values);
  std::lock_guard lock(state_->memo_mutex);
  state_->memo.emplace(std::move(key), result);
  return result;
}

bool ForcingRelation::forces(Condition p, const Formula& phi, std::span<const HSet> names) const {
  for (const auto& row : trace(p, phi, names)) {
    if (!row.satisfied) return false;
  }
  return true;
}

std::vector<ForcingRelation::TraceRow> ForcingRelation::trace(Condition p, const Formula& phi,
                                                              std::span<const HSet> names) const {
  if (p >= notion_.size()) throw Error(ErrorCode::kInvalidArgument, "condition out of range");
  std::vector<TraceRow> rows;
  for (std::size_t i = 0; i < filters_.size(); ++i) {
    if (filters_[i].contains(p)) rows.push_back({i, satisfied(i, phi, names)});
  }
  return rows;
}

namespace {

HSet names_hset(std::span<const HSet> names) {
  std::vector<HSet> tagged;
  for (std::size_t i = 0; i < names.size(); ++i) tagged.push_back(opair(von_neumann(i), names[i]));
  return HSet::of(std::move(tagged));
}

std::string describe(const Formula& phi, std::string_view what) {
  return std::string(what) + " for " + print(phi);
}

}  // namespace

CheckReport truth_lemma_check(const ForcingRelation& rel, std::size_t filter, const Formula& phi,
                              std::span<const HSet> names) {
  CheckReport report("truth-lemma");
  const bool lhs = rel.satisfied(filter, phi, names);
  bool rhs = false;
  for (Condition p : rel.filters().at(filter).members().members()) {
    if (rel.forces(p, phi, names)) {
      rhs = true;
      break;
    }
  }
  report.record(lhs == rhs ? CheckStatus::kHolds : CheckStatus::kViolated,
                opair(rel.notion().to_hset(rel.filters()[filter].members()), names_hset(names)),
                describe(phi, lhs ? "satisfied but nothing in G forces it" : "forced by G but not satisfied"));
  return report;
}

CheckReport density_check(const ForcingRelation& rel, Condition p, const Formula& phi,
                          std::span<const HSet> names) {
  CheckReport report("density");
  ConditionSet forcing;
  for (Condition q = 0; q < rel.notion().size(); ++q) {
    if (rel.forces(q, phi, names)) forcing.insert(q);
  }
  const bool lhs = forcing.contains(p);
  const bool rhs = dense_below(rel.notion(), forcing, p);
  report.record(lhs == rhs ? CheckStatus::kHolds : CheckStatus::kViolated,
                opair(rel.notion().element(p), names_hset(names)),
                describe(phi, "forcing set density disagrees with forcing"));
  return report;
}

CheckReport strengthening_check(const ForcingRelation& rel, const Formula& phi, std::span<const HSet> names) {
  CheckReport report("strengthening");
  const ForcingNotion& n = rel.notion();
  for (Condition p = 0; p < n.size(); ++p) {
    const bool forced = rel.forces(p, phi, names);
    for (Condition p1 : n.down_set(p).members()) {
      const bool ok = !forced || rel.forces(p1, phi, names);
      report.record(ok ? CheckStatus::kHolds : CheckStatus::kViolated, opair(n.element(p1), n.element(p)),
                    describe(phi, "stronger condition does not force"));
    }
  }
  return report;
}

CheckReport definition_of_forcing_check(const ForcingRelation& rel, Condition p, const Formula& phi,
                                        std::span<const HSet> names) {
  const ForcingNotion& n = rel.notion();
  if (n.size() > rel.caps().poset_scan) {
    throw Error(ErrorCode::kPosetTooLarge, "filter scan over 2^" + std::to_string(n.size()) + " subsets");
  }
  CheckReport report("definition-of-forcing");
  const std::uint64_t count = std::uint64_t{1} << n.size();
  std::vector<ConditionSet> dense;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (is_dense(n, ConditionSet(bits))) dense.emplace_back(bits);
  }
  bool all_satisfy = true;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ConditionSet f(bits);
    if (!f.contains(p) || !is_filter(n, f)) continue;
    const bool generic = std::all_of(dense.begin(), dense.end(), [&](ConditionSet d) { return f.intersects(d); });
    if (!generic) continue;
    auto index = rel.filter_index(f);
    if (!index) {
      report.record(CheckStatus::kViolated, n.to_hset(f), "generic filter missing from the oracle");
      return report;
    }
    all_satisfy = all_satisfy && rel.satisfied(*index, phi, names);
  }
  report.record(all_satisfy == rel.forces(p, phi, names) ? CheckStatus::kHolds : CheckStatus::kViolated,
                opair(n.element(p), names_hset(names)), describe(phi, "enumeration paths disagree"));
  return report;
}

HSet sep_name(const ForcingRelation& rel, const HSet& pi, const HSet& sigma, const Formula& phi) {
  if (phi.arity() > 2) {
    throw Error(ErrorCode::kArityTooLarge, "separation formula of arity " + std::to_string(phi.arity()));
  }
  const Formula body = Formula::conj(Formula::member(0, 2), phi);
  std::vector<HSet> out;
  for (const auto& theta : domain(pi).elements()) {
    const HSet env[] = {theta, sigma, pi};
    for (Condition p = 0; p < rel.notion().size(); ++p) {
      if (rel.forces(p, body, env)) out.push_back(opair(theta, rel.notion().element(p)));
    }
  }
  return HSet::of(std::move(out));
}

std::vector<CheckReport> check_extension_structure(const ForcingRelation& rel, std::size_t filter) {
  const Extension& ext = rel.extension(filter);
  const Model& ground = rel.ground();
  const HSet& top = rel.notion().top_element();

  CheckReport transitive("transitive");
  transitive.record(is_transitive(ext.universe()) ? CheckStatus::kHolds : CheckStatus::kViolated);

  CheckReport inclusion("ground-inclusion");
  for (const auto& x : ground.universe()) {
    const HSet name = check_name(x, top);
    if (ext.ctx().val(name) != x) {
      inclusion.record(CheckStatus::kViolated, x, "val(G, check(x)) differs from x");
    } else if (ext.contains(x)) {
      inclusion.record(CheckStatus::kHolds);
    } else if (ground.contains(name)) {
      inclusion.record(CheckStatus::kViolated, x, "check(x) is in M but x is not in M[G]");
    } else {
      inclusion.record(CheckStatus::kPreconditionUnmet, x, "check(x) is not in M");
    }
  }

  CheckReport membership("generic-membership");
  const HSet g = ext.ctx().generic();
  const HSet gd = g_dot(rel.notion());
  if (ext.ctx().val(gd) != g) {
    membership.record(CheckStatus::kViolated, g, "val(G, Ġ) differs from G");
  } else if (ext.contains(g)) {
    membership.record(CheckStatus::kHolds);
  } else if (ground.contains(gd)) {
    membership.record(CheckStatus::kViolated, g, "Ġ is in M but G is not in M[G]");
  } else {
    membership.record(CheckStatus::kPreconditionUnmet, g, "Ġ is not in M");
  }
  return {transitive, inclusion, membership};
}

namespace {

// The literal claim holds, or the name whose value would witness it is missing
// from M, or the name is in M and yet the claim fails.
CheckStatus closure_status(bool literal, bool name_in_ground) {
  if (literal) return CheckStatus::kHolds;
  return name_in_ground ? CheckStatus::kViolated : CheckStatus::kPreconditionUnmet;
}

CheckReport verify_pairing(const ForcingRelation& rel, const Extension& ext) {
  CheckReport report("pairing");
  const HSet& top = rel.notion().top_element();
  const auto u = ext.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      const HSet nu = HSet::of({opair(ext.name_witness(u[i]), top), opair(ext.name_witness(u[j]), top)});
      const HSet pair = upair(u[i], u[j]);
      if (ext.ctx().val(nu) != pair) {
        report.record(CheckStatus::kViolated, opair(u[i], u[j]), "pair name has the wrong value");
        continue;
      }
      const CheckStatus s = closure_status(ext.contains(pair), rel.ground().contains(nu));
      report.record(s, opair(u[i], u[j]), s == CheckStatus::kHolds ? "" : "pair name is not in M");
    }
  }
  return report;
}

CheckReport verify_union(const ForcingRelation& rel, const Extension& ext) {
  CheckReport report("union");
  for (const auto& x : ext.universe()) {
    const HSet name = union_name(rel.notion(), ext.name_witness(x));
    const HSet target = big_union(x);
    if (ext.ctx().val(name) != target) {
      report.record(CheckStatus::kViolated, x, "val(G, union_name(τ)) differs from the union");
      continue;
    }
    const CheckStatus s = closure_status(ext.contains(target), rel.ground().contains(name));
    report.record(s, x, s == CheckStatus::kHolds ? "" : "union name is not in M");
  }
  return report;
}

CheckReport verify_separation(const ForcingRelation& rel, const Extension& ext, const Formula& phi) {
  CheckReport report("separation(" + print(phi) + ")");
  for (const auto& w : ext.universe()) {
    for (const auto& c : ext.universe()) {
      const HSet n = sep_name(rel, ext.name_witness(c), ext.name_witness(w), phi);
      const HSet target = separation_set(ext.model(), phi, w, c);
      if (ext.ctx().val(n) != target) {
        report.record(CheckStatus::kViolated, opair(w, c), "val(G, n) differs from the separated set");
        continue;
      }
      const CheckStatus s = closure_status(ext.contains(target), rel.ground().contains(n));
      report.record(s, opair(w, c), s == CheckStatus::kHolds ? "" : "separation name is not in M");
    }
  }
  return report;
}

CheckReport verify_powerset(const ForcingRelation& rel, const Extension& ext) {
  CheckReport report("powerset");
  const ForcingNotion& n = rel.notion();
  const Model& ground = rel.ground();
  const Formula subset = Formula::forall(Formula::implies(Formula::member(0, 1), Formula::member(0, 2)));
  for (const auto& a : ext.universe()) {
    const HSet pi = ext.name_witness(a);
    std::vector<HSet> subsets;
    for (const auto& b : ext.universe()) {
      if (is_subset(b, a)) subsets.push_back(b);
    }
    const HSet target = HSet::from_sorted_unique(std::move(subsets));

    const HSet pow = pow_name(ground, n, pi, rel.caps());
    const HSet pow_value = ext.ctx().val(pow);
    bool chis_in_ground = true;
    bool violated = false;
    for (const auto& b : target.elements()) {
      // χ = {<θ,p> : θ ∈ domain(π), p ⊩ θ ∈ μ} with val(G, μ) = b.
      const HSet mu = ext.name_witness(b);
      std::vector<HSet> chi_pairs;
      for (const auto& theta : domain(pi).elements()) {
        const HSet env[] = {theta, mu};
        for (Condition p = 0; p < n.size(); ++p) {
          if (rel.forces(p, Formula::member(0, 1), env)) chi_pairs.push_back(opair(theta, n.element(p)));
        }
      }
      const HSet chi = HSet::of(std::move(chi_pairs));
      if (ext.ctx().val(chi) != b) {
        report.record(CheckStatus::kViolated, opair(a, b), "val(G, χ) differs from the subset");
        violated = true;
      } else if (!ground.contains(chi)) {
        chis_in_ground = false;
      } else if (!pow_value.contains(b)) {
        report.record(CheckStatus::kViolated, opair(a, b), "χ is in M but b is missing from val(G, pow_name)");
        violated = true;
      }
    }

    // The carving step needs pow_name(π) as a name of M.
    bool carved_in_ground = false;
    if (ground.contains(pow)) {
      const HSet carved = sep_name(rel, pow, pi, subset);
      std::vector<HSet> expected;
      for (const auto& x : pow_value.elements()) {
        if (is_subset(x, a)) expected.push_back(x);
      }
      if (ext.ctx().val(carved) != HSet::from_sorted_unique(std::move(expected))) {
        report.record(CheckStatus::kViolated, a, "val(G, sep_name) differs from the separated powerset");
        violated = true;
      }
      carved_in_ground = ground.contains(carved);
    }
    if (violated) continue;
    const CheckStatus s = closure_status(ext.contains(target), chis_in_ground && carved_in_ground);
    report.record(s, a, s == CheckStatus::kHolds ? "" : "powerset names are not in M");
  }
  return report;
}

}  // namespace

CheckReport verify_axiom_in_extension(const ForcingRelation& rel, std::size_t filter, AxiomId axiom,
                                      const AxiomParams& params) {
  const Extension& ext = rel.extension(filter);
  switch (axiom) {
    case AxiomId::kExtensionality:
    case AxiomId::kFoundation:
      return check_relativized_axiom(ext.model(), axiom, params);
    case AxiomId::kPairing:
      return verify_pairing(rel, ext);
    case AxiomId::kUnion:
      return verify_union(rel, ext);
    case AxiomId::kSeparation:
      if (!params.formula) throw Error(ErrorCode::kInvalidArgument, "separation needs a formula");
      if (params.formula->arity() > 2) {
        throw Error(ErrorCode::kArityTooLarge,
                    "separation formula of arity " + std::to_string(params.formula->arity()));
      }
      return verify_separation(rel, ext, *params.formula);
    case AxiomId::kPowerset:
      return verify_powerset(rel, ext);
  }
  throw Error(ErrorCode::kUnknownAxiom, "unhandled axiom");
}

}  // namespace forcelab
