#pragma once

#include <span>

#include "forcelab/caps.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/json.hpp"
#include "forcelab/semantics.hpp"

namespace forcelab {

// The seeds together with everything hereditarily below them.
Model transitive_hull(std::span<const HSet> seeds);

// V_k enlarged by P, ≤ (as pairs), Ġ and the check names of the conditions,
// plus any extra names, closed downward. Over such a ground the names that
// witness G ∈ M[G] and P ⊆ M[G] are available, which V_k alone never offers
// for nontrivial notions.
Model forcing_ground(std::size_t k, const ForcingNotion& notion, std::span<const HSet> extra = {},
                     const Caps& caps = {});

// {"universe": [...]} with sets in nested-array form. Loading checks
// transitivity (kInvalidArgument otherwise) and the model_elements cap.
Json model_to_json(const Model& model);
Model model_from_json(const Json& j, const Caps& caps = {});

}  // namespace forcelab
