#include "forcelab/relation.hpp"

#include <algorithm>
#include <unordered_set>

namespace forcelab {

HRelation::HRelation(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool HRelation::contains(const HSet& x, const HSet& y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{x, y});
}

SetCollection HRelation::field() const {
  SetCollection out;
  out.reserve(2 * pairs_.size());
  for (const auto& [x, y] : pairs_) {
    out.push_back(x);
    out.push_back(y);
  }
  canonicalize(out);
  return out;
}

HRelation HRelation::restrict_to(std::span<const HSet> a) const {
  std::unordered_set<HSet> members(a.begin(), a.end());
  std::vector<Pair> kept;
  for (const auto& p : pairs_) {
    if (members.count(p.first) && members.count(p.second)) kept.push_back(p);
  }
  return HRelation(std::move(kept));
}

HSet HRelation::to_hset() const {
  std::vector<HSet> out;
  out.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) out.push_back(opair(x, y));
  return HSet::of(std::move(out));
}

}  // namespace forcelab
