#include "forcelab/suites.hpp"

#include <algorithm>

#include "forcelab/names.hpp"
#include "forcelab/random.hpp"
#include "forcelab/wfrec.hpp"

namespace forcelab::cli {

void absorb(CheckReport& into, const CheckReport& sub) {
  const std::size_t checked = into.instances_checked + sub.instances_checked;
  const std::size_t unmet = into.instances_unmet + sub.instances_unmet;
  into.record(sub.status, sub.witness, sub.detail);
  into.instances_checked = checked;
  into.instances_unmet = unmet;
}

std::string filter_label(const ForcingNotion& notion, ConditionSet filter) {
  std::string out = "{";
  for (Condition p : filter.members()) {
    if (out.size() > 1) out += ',';
    const HSet& x = notion.element(p);
    const auto n = x.as_natural();
    out += n ? std::to_string(*n) : x.str();
  }
  return out + "}";
}

namespace {

Env random_env(Rng& rng, std::span<const HSet> universe, std::size_t n) {
  Env env(n);
  for (auto& e : env) e = universe[rng.below(universe.size())];
  return env;
}

std::string tagged(std::string check, const ForcingNotion& notion, ConditionSet filter) {
  return check + " G=" + filter_label(notion, filter);
}

CheckStatus verdict(bool ok) { return ok ? CheckStatus::kHolds : CheckStatus::kViolated; }

// A few recursion functionals with different shapes.
const std::vector<Functional>& functionals() {
  static const std::vector<Functional> hs = {
      [](const HSet& x, const PredecessorMap& f) {
        std::vector<HSet> out{x};
        for (const auto& [y, v] : f.values()) out.push_back(opair(y, v));
        return HSet::of(std::move(out));
      },
      [](const HSet&, const PredecessorMap& f) {
        std::vector<HSet> out;
        for (const auto& [y, v] : f.values()) out.push_back(v);
        return HSet::of(std::move(out));
      },
      [](const HSet& x, const PredecessorMap& f) {
        HSet acc = singleton(x);
        for (const auto& [y, v] : f.values()) acc = set_union(acc, v);
        return acc;
      },
  };
  return hs;
}

}  // namespace

std::vector<CheckReport> renaming_suite(std::uint64_t seed, std::size_t instances, std::size_t max_rank) {
  max_rank = std::clamp<std::size_t>(max_rank, 2, 4);
  std::vector<Model> stages;
  for (std::size_t k = 2; k <= max_rank; ++k) stages.push_back(Model::stage(k));

  CheckReport lemma("sats-iff-sats-ren");
  CheckReport functor("ren-functorial");
  Rng rng(derive_seed(seed, kRenamingStream));
  for (std::size_t i = 0; i < instances; ++i) {
    const Model& m = stages[rng.below(stages.size())];
    const std::size_t n = 1 + rng.below(3);
    const std::size_t k = 1 + rng.below(4);
    const Formula phi = random_formula(rng, 1 + rng.below(4), n);
    const Renaming f = random_renaming(rng, n, k);
    const Env target = random_env(rng, m.universe(), k);
    Env source(n);
    for (std::size_t j = 0; j < n; ++j) source[j] = target[f(j)];
    const bool ok = sats(m, phi, source) == sats(m, ren(phi, f), target);
    lemma.record(verdict(ok), std::nullopt, ok ? "" : print(phi));

    const std::size_t l = 1 + rng.below(4);
    const Renaming g = random_renaming(rng, k, l);
    const bool same = ren(ren(phi, f), g) == ren(phi, compose(g, f));
    functor.record(verdict(same), std::nullopt, same ? "" : print(phi));
  }
  return {lemma, functor};
}

std::vector<CheckReport> recursion_suite(std::uint64_t seed, std::size_t instances) {
  CheckReport restr("wfrec-restr");
  CheckReport unfold("wfrec-unfolding");
  Rng rng(derive_seed(seed, kRecursionStream));
  const auto& hs = functionals();
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t field = 1 + rng.below(10);
    const HRelation r = random_relation(rng, field, 10 + static_cast<unsigned>(rng.below(40)), true);
    const HSet a = von_neumann(rng.below(field));
    const Functional& h = hs[rng.below(hs.size())];

    std::vector<HSet> members{a};
    const HRelation closure = trancl(r);
    for (const auto& [x, y] : closure.pairs()) {
      if (y == a) members.push_back(x);
    }
    for (std::size_t j = 0; j < field; ++j) {
      if (rng.coin()) members.push_back(von_neumann(j));
    }
    const HSet big_a = HSet::of(std::move(members));
    const HSet full = wfrec(r, a, h);
    const bool ok = full == wfrec(r.restrict_to(big_a.elements()), a, h);
    restr.record(verdict(ok), ok ? std::nullopt : std::optional<HSet>(r.to_hset()));

    std::unordered_map<HSet, HSet> below;
    for (const auto& [x, y] : r.pairs()) {
      if (y == a) below.emplace(x, wfrec(r, x, h));
    }
    const bool eq = full == h(a, PredecessorMap(std::move(below)));
    unfold.record(verdict(eq), eq ? std::nullopt : std::optional<HSet>(r.to_hset()));
  }
  return {restr, unfold};
}

std::vector<CheckReport> names_suite(const ForcingRelation& rel, std::uint64_t seed, std::size_t random_names) {
  const ForcingNotion& notion = rel.notion();
  Rng rng(derive_seed(seed, kNamesStream));
  SetCollection names(rel.ground().universe().begin(), rel.ground().universe().end());
  for (std::size_t i = 0; i < random_names; ++i) names.push_back(random_name(rng, notion, 1 + rng.below(3), 3));
  const HSet top = notion.top_element();

  std::vector<CheckReport> out;
  for (std::size_t fi = 0; fi < rel.filters().size(); ++fi) {
    const ConditionSet g = rel.filters()[fi].members();
    const NameContext& ctx = rel.extension(fi).ctx();

    CheckReport unfolding(tagged("val-unfolding", notion, g));
    CheckReport mono(tagged("val-monotone", notion, g));
    CheckReport check(tagged("check-name", notion, g));
    CheckReport generic(tagged("generic-name", notion, g));
    CheckReport uni(tagged("union-name", notion, g));
    CheckReport sep(tagged("separation-name", notion, g));

    for (const auto& tau : names) {
      std::vector<HSet> unfolded;
      for (const auto& e : tau.elements()) {
        if (!e.is_pair()) continue;
        const auto p = notion.index_of(e.second());
        if (p && g.contains(*p)) unfolded.push_back(ctx.val(e.first()));
      }
      unfolding.record(verdict(ctx.val(tau) == HSet::of(std::move(unfolded))), tau);
      uni.record(verdict(big_union(ctx.val(tau)) == ctx.val(union_name(notion, tau))), tau);
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(names.size(), 1000); ++i) {
      const HSet& x = names[rng.below(names.size())];
      const HSet y = set_union(x, names[rng.below(names.size())]);
      mono.record(verdict(is_subset(ctx.val(x), ctx.val(y))), opair(x, y));
    }
    for (const auto& x : rel.ground().universe()) check.record(verdict(ctx.val(check_name(x, top)) == x), x);
    generic.record(verdict(ctx.val(g_dot(notion)) == ctx.generic()), g_dot(notion));

    // {<t,p> ∈ A×P : Q} evaluates to {val(t) : t ∈ A, some p ∈ G with Q(<t,p>)}.
    for (std::size_t i = 0; i < std::max<std::size_t>(random_names, 1); ++i) {
      std::vector<HSet> picks;
      for (std::size_t j = rng.below(6); j > 0; --j) picks.push_back(names[rng.below(names.size())]);
      const HSet a = HSet::of(std::move(picks));
      std::vector<HSet> chosen;
      for (const auto& t : a.elements()) {
        for (const auto& p : notion.elements()) {
          if (rng.below(3) == 0) chosen.push_back(opair(t, p));
        }
      }
      const HSet q = HSet::of(chosen);
      const HSet n = name_by_separation(a, notion, [&](const HSet& pair) { return q.contains(pair); });
      std::vector<HSet> expected;
      for (const auto& t : a.elements()) {
        bool live = false;
        for (Condition p : g.members()) live = live || q.contains(opair(t, notion.element(p)));
        if (live) expected.push_back(ctx.val(t));
      }
      sep.record(verdict(ctx.val(n) == HSet::of(std::move(expected))), n);
    }
    for (auto* r : {&unfolding, &mono, &check, &generic, &uni, &sep}) {
      if (r->holds()) r->witness.reset();
      out.push_back(std::move(*r));
    }
  }
  return out;
}

std::vector<CheckReport> fundamental_suite(const ForcingRelation& rel, const std::vector<Formula>& formulas,
                                           std::uint64_t seed, std::size_t envs_per_formula) {
  rel.prepare();
  CheckReport truth("truth-lemma");
  CheckReport density("density");
  CheckReport strengthening("strengthening");
  CheckReport definition("definition-of-forcing");
  Rng rng(derive_seed(seed, kFundamentalStream));
  const auto universe = rel.ground().universe();
  for (const auto& phi : formulas) {
    for (std::size_t e = 0; e < envs_per_formula; ++e) {
      const Env names = random_env(rng, universe, phi.arity());
      absorb(strengthening, strengthening_check(rel, phi, names));
      for (std::size_t fi = 0; fi < rel.filters().size(); ++fi) absorb(truth, truth_lemma_check(rel, fi, phi, names));
      for (Condition p = 0; p < rel.notion().size(); ++p) {
        absorb(density, density_check(rel, p, phi, names));
        absorb(definition, definition_of_forcing_check(rel, p, phi, names));
      }
    }
  }
  return {truth, density, strengthening, definition};
}

std::vector<CheckReport> axioms_suite(const ForcingRelation& rel, const std::vector<Formula>& formulas,
                                      std::size_t separation_formulas) {
  rel.prepare();
  std::vector<Formula> separation;
  for (const auto& phi : formulas) {
    if (separation.size() < separation_formulas && phi.arity() <= 2) separation.push_back(phi);
  }
  std::vector<CheckReport> out;
  for (std::size_t fi = 0; fi < rel.filters().size(); ++fi) {
    const ConditionSet g = rel.filters()[fi].members();
    auto add = [&](CheckReport r) {
      r.axiom = tagged(r.axiom, rel.notion(), g);
      out.push_back(std::move(r));
    };
    for (auto& r : check_extension_structure(rel, fi)) add(std::move(r));
    for (AxiomId axiom : {AxiomId::kExtensionality, AxiomId::kFoundation, AxiomId::kPairing, AxiomId::kUnion,
                          AxiomId::kPowerset}) {
      add(verify_axiom_in_extension(rel, fi, axiom));
    }
    for (const auto& phi : separation) add(verify_axiom_in_extension(rel, fi, AxiomId::kSeparation, {phi}));
  }
  return out;
}

}  // namespace forcelab::cli
