#pragma once

#include <utility>
#include <vector>

#include "forcelab/hset.hpp"

namespace forcelab {

// A finite binary relation on sets, stored as a sorted, duplicate-free list of
// native pairs. Use to_hset() for the Kuratowski-encoded set of pairs.
class HRelation {
 public:
  using Pair = std::pair<HSet, HSet>;

  HRelation() = default;
  explicit HRelation(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(const HSet& x, const HSet& y) const;

  // Everything appearing on either side.
  SetCollection field() const;

  // r ∩ A×A
  HRelation restrict_to(std::span<const HSet> a) const;

  HSet to_hset() const;

  friend bool operator==(const HRelation&, const HRelation&) = default;

 private:
  std::vector<Pair> pairs_;
};

}  // namespace forcelab
