#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forcelab/caps.hpp"

namespace forcelab {

namespace detail {
struct HSetNode;
}

// A hereditarily finite set.
//
// Values are hash-consed: two HSets are structurally equal exactly when they
// point at the same interned node, so equality and hashing are O(1). Elements
// are kept in the canonical order, which is the recursive lexicographic order
// on element sequences (a proper prefix sorts first). Under that order the
// von Neumann naturals sort as 0 < 1 < 2 < ...
//
// Nodes are never freed. The intern table is guarded by a mutex, so HSets may
// be created and shared across threads.
class HSet {
 public:
  HSet();  // the empty set

  // Sorts and deduplicates.
  static HSet of(std::vector<HSet> elements);
  static HSet of(std::initializer_list<HSet> elements) { return of(std::vector<HSet>(elements)); }
  // Trusts the caller: `elements` must already be strictly increasing.
  static HSet from_sorted_unique(std::vector<HSet> elements);

  std::span<const HSet> elements() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::uint32_t rank() const;
  std::size_t hash() const;

  bool contains(const HSet& x) const;

  // Kuratowski pair view: {{a},{a,b}}.
  bool is_pair() const;
  const HSet& first() const;   // throws kNotAPair
  const HSet& second() const;  // throws kNotAPair

  // Returns n when this set is the von Neumann natural n.
  std::optional<std::size_t> as_natural() const;

  friend bool operator==(const HSet& a, const HSet& b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(const HSet& a, const HSet& b);

  // Compact rendering: "{}" for the empty set, "{{},{{}}}" for 2.
  std::string str() const;

 private:
  explicit HSet(const detail::HSetNode* node) : node_(node) {}
  const detail::HSetNode* node_;

  friend struct detail::HSetNode;
};

struct HSetHash {
  std::size_t operator()(const HSet& x) const noexcept { return x.hash(); }
};

// A sorted, duplicate-free collection of sets. Kept separate from HSet so that
// a collection (a model universe, a stage) is not confused with a set value.
using SetCollection = std::vector<HSet>;

// Sorts and deduplicates in place.
void canonicalize(SetCollection& xs);

bool mem(const HSet& x, const HSet& y);
std::uint32_t rank(const HSet& x);

HSet von_neumann(std::size_t n);
HSet singleton(const HSet& x);
HSet upair(const HSet& a, const HSet& b);
HSet opair(const HSet& a, const HSet& b);
const HSet& fst(const HSet& p);
const HSet& snd(const HSet& p);

HSet set_union(const HSet& a, const HSet& b);
HSet set_intersection(const HSet& a, const HSet& b);
HSet set_difference(const HSet& a, const HSet& b);
bool is_subset(const HSet& a, const HSet& b);
HSet big_union(const HSet& x);

// {x : exists p. <x,p> in r}; non-pair elements are ignored.
HSet domain(const HSet& r);
HSet cartprod(const HSet& a, const HSet& b);

// Smallest transitive set containing every element of x (x itself excluded).
HSet eclose(const HSet& x);

bool is_transitive(std::span<const HSet> collection);
bool is_transitive(const HSet& x);

// All sets of rank < k, canonically sorted. Stages are computed once and
// cached. Throws kStageTooLarge when k exceeds caps.max_stage or when the
// stage would hold more than caps.stage_elements sets.
SetCollection v_stage(std::size_t k, const Caps& caps = {});

std::ostream& operator<<(std::ostream& os, const HSet& x);

// The set view of a collection.
HSet to_hset(std::span<const HSet> collection);

}  // namespace forcelab

template <>
struct std::hash<forcelab::HSet> {
  std::size_t operator()(const forcelab::HSet& x) const noexcept { return x.hash(); }
};
