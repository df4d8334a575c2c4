#pragma once

#include <functional>
#include <unordered_map>
#include <utility>

#include "forcelab/hset.hpp"
#include "forcelab/relation.hpp"

namespace forcelab {

// Transitive closure: the least transitive relation containing r.
HRelation trancl(const HRelation& r);

// A finite relation is well founded exactly when it has no cycle.
bool is_wf(const HRelation& r);

// {(x, y) ∈ A×A : <x,p> ∈ y for some p}, the "occurs as a name in" relation.
HRelation edrel(const HSet& a);

// The restriction F↾(R⁻¹(a)) handed to a recursion functional. Reading a
// point outside the predecessor set throws kUndefinedPredecessor.
class PredecessorMap {
 public:
  PredecessorMap() = default;
  explicit PredecessorMap(std::unordered_map<HSet, HSet> values) : values_(std::move(values)) {}

  const HSet& at(const HSet& x) const;
  bool defined_at(const HSet& x) const { return values_.count(x) != 0; }
  std::size_t size() const { return values_.size(); }
  const std::unordered_map<HSet, HSet>& values() const { return values_; }

 private:
  std::unordered_map<HSet, HSet> values_;
};

using Functional = std::function<HSet(const HSet& a, const PredecessorMap& f)>;

// F(a) where F(x) = H(x, F↾(r⁻¹(x))). Memoized within the call.
// Throws kNotWellFounded when r has a cycle.
HSet wfrec(const HRelation& r, const HSet& a, const Functional& h);

}  // namespace forcelab
