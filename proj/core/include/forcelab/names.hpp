#pragma once

#include <functional>
#include <memory>

#include "forcelab/caps.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/hset.hpp"
#include "forcelab/semantics.hpp"
#include "forcelab/wfrec.hpp"

namespace forcelab {

// H_v(G)(y, f) = {f(x) : x ∈ domain(y), ∃p ∈ P. <x,p> ∈ y ∧ p ∈ G}.
Functional hv(const ForcingNotion& notion, ConditionSet filter);

// val(G, τ) = wfrec(edrel(eclose({τ})), τ, H_v(G)), cached across calls.
// Not thread-safe; use one per thread.
class Valuator {
 public:
  Valuator(const ForcingNotion& notion, ConditionSet filter);

  HSet operator()(const HSet& tau);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  Functional h_;
  std::unordered_map<HSet, HSet> cache_;
};

// Ground model, forcing notion and filter. The ground model must be
// transitive and the filter must be a filter of the notion. Whether P, ≤ and 𝟙
// lie in M is reported by notion_in_ground() rather than enforced, since the
// finite stages rarely contain ≤ as a set of pairs.
class NameContext {
 public:
  NameContext(Model ground, ForcingNotion notion, GFilter filter);

  const Model& ground() const { return ground_; }
  const ForcingNotion& notion() const { return notion_; }
  const GFilter& filter() const { return filter_; }
  // G as a set of conditions.
  HSet generic() const;
  bool notion_in_ground() const;

  // Thread-safe, cached.
  HSet val(const HSet& tau) const;

 private:
  struct Cache;
  Model ground_;
  ForcingNotion notion_;
  GFilter filter_;
  std::shared_ptr<Cache> cache_;
};

// chk(x) = {<chk(y), 𝟙> : y ∈ x}.
HSet check_name(const HSet& x, const HSet& top);
// Ġ = {<chk(p), p> : p ∈ P}.
HSet g_dot(const ForcingNotion& notion);

// {<θ,p> ∈ domain(⋃ domain(τ)) × P :
//    ∃<σ,q> ∈ τ. ∃r. <θ,r> ∈ σ ∧ p ≤ r ∧ p ≤ q}
HSet union_name(const ForcingNotion& notion, const HSet& tau);

// {<t,p> : t ∈ A, p ∈ P, Q(<t,p>)}.
HSet name_by_separation(const HSet& a, const ForcingNotion& notion,
                        const std::function<bool(const HSet& pair)>& q);

// {<χ, 𝟙> : χ ∈ M, χ ⊆ domain(π) × P}. Throws kPowNameTooLarge when the grid
// domain(π) × P has more than caps.pow_name_candidates subsets.
HSet pow_name(const Model& ground, const ForcingNotion& notion, const HSet& pi,
              const Caps& caps = {});

}  // namespace forcelab
