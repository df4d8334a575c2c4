#include <doctest.h>

#include "forcelab/error.hpp"
#include "forcelab/extension.hpp"
#include "forcelab/ground.hpp"
#include "forcelab/random.hpp"

using namespace forcelab;

namespace {

using F = Formula;

HSet n(std::size_t i) { return von_neumann(i); }
const HSet kEmpty;
const HSet kTau = HSet::of({opair(kEmpty, n(0))});

HSet direct_val(const HSet& tau, const HSet& g) {
  std::vector<HSet> out;
  for (const auto& e : tau.elements()) {
    if (e.is_pair() && g.contains(e.second())) out.push_back(direct_val(e.first(), g));
  }
  return HSet::of(std::move(out));
}

}  // namespace

TEST_CASE("building extensions") {
  const ForcingNotion one = preset_notion("one-point");
  const Extension trivial = build_extension(NameContext(Model::stage(3), one, generic_filters(one)[0]));
  // No name in V_3 has a pair <σ, 0> as an element, so every name evaluates to ∅.
  for (const auto& tau : v_stage(3)) CHECK(direct_val(tau, HSet::of({n(0)})) == kEmpty);
  CHECK(std::vector<HSet>(trivial.universe().begin(), trivial.universe().end()) == v_stage(1));
  CHECK(trivial.new_elements().empty());
  CHECK(trivial.name_witness(kEmpty) == kEmpty);
  CHECK_THROWS_AS(trivial.name_witness(n(2)), Error);

  const ForcingNotion v = preset_notion("v-shape");
  const Model v4 = Model::stage(4);
  for (const auto& g : generic_filters(v)) {
    const Extension ext = build_extension(NameContext(v4, v, g));
    CHECK(is_transitive(ext.universe()));
    std::vector<HSet> expected;
    for (const auto& tau : v4.universe()) expected.push_back(direct_val(tau, v.to_hset(g.members())));
    canonicalize(expected);
    CHECK(std::vector<HSet>(ext.universe().begin(), ext.universe().end()) == expected);
    for (const auto& x : ext.universe()) CHECK(direct_val(ext.name_witness(x), v.to_hset(g.members())) == x);
  }

  Caps tiny;
  tiny.model_elements = 10;
  CHECK_THROWS_WITH_AS(build_extension(NameContext(v4, v, generic_filters(v)[0]), tiny),
                       doctest::Contains("model-too-large"), Error);
}

TEST_CASE("extension structure") {
  const ForcingNotion v = preset_notion("v-shape");
  // V_4 is too small for the check names of its rank-3 sets and for Ġ.
  const ForcingRelation small(Model::stage(4), v);
  for (std::size_t i = 0; i < small.filters().size(); ++i) {
    const auto reports = check_extension_structure(small, i);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].holds());
    CHECK(reports[1].status == CheckStatus::kPreconditionUnmet);
    CHECK(reports[2].status == CheckStatus::kPreconditionUnmet);
  }
  const ForcingRelation rich(forcing_ground(3, v), v);
  for (std::size_t i = 0; i < rich.filters().size(); ++i) {
    const auto reports = check_extension_structure(rich, i);
    CHECK(reports[0].holds());
    CHECK(reports[2].holds());
    CHECK(rich.extension(i).contains(rich.extension(i).ctx().generic()));
    CHECK_FALSE(reports[1].violated());
  }
}

TEST_CASE("semantic forcing") {
  const ForcingNotion v = preset_notion("v-shape");
  const ForcingRelation rel(Model::stage(4), v);
  rel.prepare();
  const HSet env1[] = {kEmpty};
  CHECK(rel.forces(v.top(), F::equal(0, 0), env1));

  const HSet names[] = {check_name(kEmpty, v.top_element()), kTau};
  CHECK(rel.forces(0, F::member(0, 1), names));
  CHECK_FALSE(rel.forces(2, F::member(0, 1), names));
  CHECK_FALSE(rel.forces(1, F::member(0, 1), names));
  const auto rows = rel.trace(2, F::member(0, 1), names);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].satisfied);
  CHECK_FALSE(rows[1].satisfied);
  CHECK(rel.trace(0, F::member(0, 1), names).size() == 1);

  const HSet outside[] = {n(5)};
  CHECK_THROWS_WITH_AS(rel.forces(0, F::equal(0, 0), outside), doctest::Contains("env-not-in-model"), Error);
  CHECK_THROWS_WITH_AS(rel.forces(0, F::member(0, 3), names), doctest::Contains("env-too-short"), Error);
  CHECK_THROWS_AS(rel.forces(7, F::equal(0, 0), env1), Error);
  CHECK(rel.filter_index(ConditionSet::of({1, 2})) == 1u);
  CHECK_FALSE(rel.filter_index(ConditionSet::of({2})).has_value());
}

TEST_CASE("fundamental checks") {
  const ForcingNotion v = preset_notion("v-shape");
  const ForcingRelation rel(Model::stage(4), v);
  const HSet names[] = {check_name(kEmpty, v.top_element()), kTau};
  for (std::size_t i = 0; i < rel.filters().size(); ++i) {
    CHECK(truth_lemma_check(rel, i, F::equal(0, 0), names).holds());
    CHECK(truth_lemma_check(rel, i, F::neg(F::equal(0, 0)), names).holds());
    CHECK_FALSE(rel.satisfied(i, F::neg(F::equal(0, 0)), names));
  }
  CHECK(density_check(rel, 0, F::member(0, 1), names).holds());
  CHECK_FALSE(rel.forces(2, F::member(0, 1), names));
  CHECK_FALSE(dense_below(v, ConditionSet::of({0}), 2));
  CHECK(density_check(rel, 2, F::member(0, 1), names).holds());
  CHECK(strengthening_check(rel, F::member(0, 1), names).holds());
  CHECK(strengthening_check(rel, F::member(0, 1), names).instances_checked == 5);
  CHECK(definition_of_forcing_check(rel, 2, F::member(0, 1), names).holds());

  Rng rng(derive_seed(31, 0));
  const auto v4 = v_stage(4);
  for (std::size_t i = 0; i < 30; ++i) {
    const Formula phi = random_formula(rng, 1 + rng.below(3), 2);
    const HSet env[] = {v4[rng.below(v4.size())], v4[rng.below(v4.size())]};
    for (std::size_t g = 0; g < rel.filters().size(); ++g) CHECK(truth_lemma_check(rel, g, phi, env).holds());
  }
}

TEST_CASE("density on random notions") {
  Rng rng(derive_seed(31, 1));
  const char* posets[] = {"v-shape", "diamond", "chain-4", "antichain-3-with-top", "antichain-5-with-top", "chain-6"};
  const auto v3 = v_stage(3);
  for (int i = 0; i < 50; ++i) {
    const ForcingNotion notion = preset_notion(posets[rng.below(6)]);
    const ForcingRelation rel(Model::stage(4), notion);
    const Formula phi = random_formula(rng, 1 + rng.below(3), 2);
    std::vector<HSet> env{random_name(rng, notion, 1, 2), v3[rng.below(v3.size())]};
    if (!rel.ground().contains(env[0])) env[0] = HSet();
    const Condition p = rng.below(notion.size());
    CHECK(density_check(rel, p, phi, env).holds());
  }
}

TEST_CASE("separation name") {
  const ForcingNotion v = preset_notion("v-shape");
  const ForcingRelation rel(Model::stage(4), v);
  for (std::size_t i = 0; i < rel.filters().size(); ++i) {
    const Extension& ext = rel.extension(i);
    for (const auto& pi : rel.ground().universe()) {
      CHECK(ext.ctx().val(sep_name(rel, pi, kEmpty, F::equal(0, 0))) == ext.ctx().val(pi));
      CHECK(ext.ctx().val(sep_name(rel, pi, kEmpty, F::neg(F::equal(0, 0)))) == HSet());
    }
    const HSet c = ext.ctx().val(kTau);
    std::vector<HSet> expected;
    for (const auto& x : c.elements()) {
      if (x.contains(kEmpty)) expected.push_back(x);
    }
    const HSet value = ext.ctx().val(sep_name(rel, kTau, kEmpty, F::member(1, 0)));
    CHECK(value == HSet::of(expected));
    CHECK(value == separation_set(ext.model(), F::member(1, 0), kEmpty, c));
  }
  CHECK_THROWS_WITH_AS(sep_name(rel, kTau, kEmpty, F::member(0, 2)), doctest::Contains("arity-too-large"), Error);
}

TEST_CASE("axioms in extensions") {
  const ForcingNotion v = preset_notion("v-shape");
  const ForcingRelation rel(Model::stage(4), v);
  for (std::size_t i = 0; i < rel.filters().size(); ++i) {
    CHECK(verify_axiom_in_extension(rel, i, AxiomId::kExtensionality).holds());
    CHECK(verify_axiom_in_extension(rel, i, AxiomId::kFoundation).holds());
    CHECK_FALSE(verify_axiom_in_extension(rel, i, AxiomId::kPairing).violated());
    CHECK_FALSE(verify_axiom_in_extension(rel, i, AxiomId::kUnion).violated());
    CHECK_FALSE(verify_axiom_in_extension(rel, i, AxiomId::kPowerset).violated());
    const CheckReport sep = verify_axiom_in_extension(rel, i, AxiomId::kSeparation, AxiomParams{F::member(1, 0)});
    CHECK(sep.holds());
    CHECK(sep.axiom == "separation(Mem 1 0)");
  }
  CHECK_THROWS_AS(verify_axiom_in_extension(rel, 0, AxiomId::kSeparation), Error);
  CHECK_THROWS_WITH_AS(verify_axiom_in_extension(rel, 0, AxiomId::kSeparation, AxiomParams{F::member(0, 2)}),
                       doctest::Contains("arity-too-large"), Error);

  // The rank-3 elements of V_4 have no pair name inside V_4.
  const ForcingRelation big(Model::stage(5), preset_notion("one-point"));
  const CheckReport pairing = verify_axiom_in_extension(big, 0, AxiomId::kPairing);
  CHECK(pairing.status == CheckStatus::kPreconditionUnmet);
}
