#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "forcelab/caps.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/names.hpp"
#include "forcelab/report.hpp"
#include "forcelab/semantics.hpp"

namespace forcelab {

// M[G] = {val(G,τ) : τ ∈ M}, with the first name (in canonical order) that
// produces each element.
class Extension {
 public:
  const NameContext& ctx() const { return ctx_; }
  const Model& model() const { return model_; }
  std::span<const HSet> universe() const { return model_.universe(); }
  bool contains(const HSet& x) const { return model_.contains(x); }
  // Throws kInvalidArgument when x ∉ M[G].
  const HSet& name_witness(const HSet& x) const;
  // M[G] \ M, canonically ordered.
  SetCollection new_elements() const;

 private:
  friend Extension build_extension(const NameContext& ctx, const Caps& caps);
  explicit Extension(NameContext ctx) : ctx_(std::move(ctx)) {}

  NameContext ctx_;
  Model model_;
  std::unordered_map<HSet, HSet> witness_;
};

// Evaluates every name of the ground model, splitting the work across threads.
// Throws kModelTooLarge when |M| exceeds caps.model_elements.
Extension build_extension(const NameContext& ctx, const Caps& caps = {});

// The semantic forcing relation over a fixed ground model and notion:
// p ⊩ φ(τ...) iff M[G] ⊨ φ(val(G,τ)...) for every generic G ∋ p. The generic
// filters are the upward closures of minimal elements; their extensions are
// built on first use. Satisfaction results are memoized. Thread-safe.
class ForcingRelation {
 public:
  ForcingRelation(Model ground, ForcingNotion notion, const Caps& caps = {});
  ~ForcingRelation();
  ForcingRelation(const ForcingRelation&) = delete;
  ForcingRelation& operator=(const ForcingRelation&) = delete;

  const Model& ground() const { return ground_; }
  const ForcingNotion& notion() const { return notion_; }
  const Caps& caps() const { return caps_; }
  const std::vector<GFilter>& filters() const { return filters_; }
  // Index into filters() of the generic filter with these members.
  std::optional<std::size_t> filter_index(ConditionSet members) const;

  const Extension& extension(std::size_t filter) const;
  // Builds every extension, one thread per generic filter.
  void prepare() const;

  // M[G_filter] ⊨ φ at the values of the names. Names must lie in M
  // (kEnvNotInModel) and cover the arity of φ (kEnvTooShort).
  bool satisfied(std::size_t filter, const Formula& phi, std::span<const HSet> names) const;
  bool forces(Condition p, const Formula& phi, std::span<const HSet> names) const;

  struct TraceRow {
    std::size_t filter;
    bool satisfied;
  };
  // One row per generic filter containing p, in filter order.
  std::vector<TraceRow> trace(Condition p, const Formula& phi, std::span<const HSet> names) const;

 private:
  struct State;
  Model ground_;
  ForcingNotion notion_;
  Caps caps_;
  std::vector<GFilter> filters_;
  std::unique_ptr<State> state_;
};

// sats(M[G], φ, vals) ⇔ ∃p ∈ G. p ⊩ φ, for the given generic filter.
CheckReport truth_lemma_check(const ForcingRelation& rel, std::size_t filter, const Formula& phi,
                              std::span<const HSet> names);

// p ⊩ φ ⇔ {p1 : p1 ⊩ φ} is dense below p.
CheckReport density_check(const ForcingRelation& rel, Condition p, const Formula& phi,
                          std::span<const HSet> names);

// p ⊩ φ ∧ p1 ≤ p ⇒ p1 ⊩ φ, over all of P×P.
CheckReport strengthening_check(const ForcingRelation& rel, const Formula& phi,
                                std::span<const HSet> names);

// Recomputes p ⊩ φ by scanning every subset of P for generic filters (instead
// of starting from minimal elements) and compares with forces().
CheckReport definition_of_forcing_check(const ForcingRelation& rel, Condition p, const Formula& phi,
                                        std::span<const HSet> names);

// Environment layout for the separation name, with φ read in context [x, w]:
//
//   index  entry  role
//   0      θ      candidate name, value x
//   1      σ      parameter name, value w
//   2      π      bounding name, value c
//
// n = {<θ,p> ∈ domain(π)×P : p ⊩ (Mem 0 2 ∧ φ)[θ, σ, π]}.
// Throws kArityTooLarge when arity(φ) > 2.
HSet sep_name(const ForcingRelation& rel, const HSet& pi, const HSet& sigma, const Formula& phi);

// Transitivity of M[G], M ⊆ M[G] (through check names) and G ∈ M[G] (through
// Ġ). Literal failures whose witnessing name lies outside M are reported as
// PRECONDITION_UNMET.
std::vector<CheckReport> check_extension_structure(const ForcingRelation& rel, std::size_t filter);

// Axiom verification in M[G_filter]. Extensionality and Foundation are checked
// directly on the universe; Pairing, Union, Separation and Powerset are checked
// through their name constructions, with closure failures of M reported as
// PRECONDITION_UNMET and name-equation failures as VIOLATED.
CheckReport verify_axiom_in_extension(const ForcingRelation& rel, std::size_t filter, AxiomId axiom,
                                      const AxiomParams& params = {});

}  // namespace forcelab
