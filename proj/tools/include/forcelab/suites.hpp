#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forcelab/extension.hpp"
#include "forcelab/formula.hpp"
#include "forcelab/report.hpp"

namespace forcelab::cli {

// Randomness streams, one per suite, all derived from the run seed.
enum Stream : std::uint64_t {
  kRenamingStream = 1,
  kRecursionStream,
  kNamesStream,
  kFundamentalStream,
  kAxiomsStream,
  kFormulaStream,
};

// Adds the instances and status of sub to into.
void absorb(CheckReport& into, const CheckReport& sub);

// "{0,2}" with naturals printed as numbers.
std::string filter_label(const ForcingNotion& notion, ConditionSet filter);

// sats(M, φ, [env_{f(i)}]) ⇔ sats(M, ren(φ, f), env) and functoriality of ren,
// over V_2 .. V_max_rank (max_rank clamped to 2..4).
std::vector<CheckReport> renaming_suite(std::uint64_t seed, std::size_t instances, std::size_t max_rank);

// wfrec over r equals wfrec over r ∩ A×A for predecessor-closed A, and the
// recursion equation F(a) = H(a, F↾r⁻¹(a)), on random acyclic relations.
std::vector<CheckReport> recursion_suite(std::uint64_t seed, std::size_t instances);

// Per generic filter: unfolding of val, monotonicity, check names, Ġ, union
// names and names defined by separation. Names are all of M plus
// random_names seeded names over P.
std::vector<CheckReport> names_suite(const ForcingRelation& rel, std::uint64_t seed, std::size_t random_names);

// Truth lemma, density, strengthening and the definition of forcing for every
// formula, with envs_per_formula seeded environments drawn from M.
std::vector<CheckReport> fundamental_suite(const ForcingRelation& rel, const std::vector<Formula>& formulas,
                                           std::uint64_t seed, std::size_t envs_per_formula);

// Extension structure and the axioms in every generic extension. Separation
// runs for the first separation_formulas formulas of arity ≤ 2.
std::vector<CheckReport> axioms_suite(const ForcingRelation& rel, const std::vector<Formula>& formulas,
                                      std::size_t separation_formulas);

}  // namespace forcelab::cli
