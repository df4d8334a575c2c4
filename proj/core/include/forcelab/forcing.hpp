#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "forcelab/caps.hpp"
#include "forcelab/hset.hpp"
#include "forcelab/json.hpp"

namespace forcelab {

// Index of a condition in ForcingNotion::elements().
using Condition = std::size_t;

// A subset of the conditions of a forcing notion with at most 64 elements.
class ConditionSet {
 public:
  constexpr ConditionSet() = default;
  constexpr explicit ConditionSet(std::uint64_t bits) : bits_(bits) {}
  static ConditionSet of(std::initializer_list<Condition> conditions);
  static constexpr ConditionSet all(std::size_t n) {
    return ConditionSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(Condition p) const { return (bits_ >> p) & 1U; }
  void insert(Condition p) { bits_ |= std::uint64_t{1} << p; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  bool intersects(ConditionSet other) const { return (bits_ & other.bits_) != 0; }
  bool subset_of(ConditionSet other) const { return (bits_ & ~other.bits_) == 0; }
  ConditionSet operator&(ConditionSet other) const { return ConditionSet(bits_ & other.bits_); }
  ConditionSet operator|(ConditionSet other) const { return ConditionSet(bits_ | other.bits_); }

  // Members in increasing index order.
  std::vector<Condition> members() const;

  friend bool operator==(ConditionSet, ConditionSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// A finite partial order with a top element. Elements are stored in canonical
// HSet order, so condition indices are deterministic.
class ForcingNotion {
 public:
  static constexpr std::size_t kMaxElements = 64;

  // Throws kNotReflexive, kNotTransitive, kNotAntisymmetric, kNoTop, or
  // kInvalidArgument (duplicates, pairs over unknown elements, > 64 elements).
  // With auto_reflexive, missing (p,p) pairs are added before validation.
  static ForcingNotion validate(std::vector<HSet> elements,
                                const std::vector<std::pair<HSet, HSet>>& le, const HSet& top,
                                bool auto_reflexive = false);

  std::size_t size() const { return elements_.size(); }
  std::span<const HSet> elements() const { return elements_; }
  const HSet& element(Condition p) const { return elements_.at(p); }
  std::optional<Condition> index_of(const HSet& x) const;

  Condition top() const { return top_; }
  bool le(Condition p, Condition q) const { return below_[q].contains(p); }
  // {p : p ≤ q}
  ConditionSet down_set(Condition q) const { return below_[q]; }
  // {q : p ≤ q}
  ConditionSet up_set(Condition p) const { return above_[p]; }
  const std::vector<Condition>& minimal() const { return minimal_; }
  ConditionSet all() const { return ConditionSet::all(size()); }

  // P as a set, ≤ as a set of Kuratowski pairs, 𝟙.
  HSet carrier() const;
  HSet order_hset() const;
  const HSet& top_element() const { return elements_[top_]; }

  HSet to_hset(ConditionSet s) const;

 private:
  std::vector<HSet> elements_;
  std::vector<ConditionSet> below_;
  std::vector<ConditionSet> above_;
  std::vector<Condition> minimal_;
  Condition top_ = 0;
};

// Certificates recording why a filter is generic.
struct MinimalUpset {
  Condition minimal;
};
struct RSChain {
  std::vector<Condition> chain;  // p_0 ≥ p_1 ≥ ...
};

class GFilter {
 public:
  using Certificate = std::variant<MinimalUpset, RSChain>;

  GFilter(ConditionSet members, Certificate certificate)
      : members_(members), certificate_(std::move(certificate)) {}

  ConditionSet members() const { return members_; }
  bool contains(Condition p) const { return members_.contains(p); }
  const Certificate& certificate() const { return certificate_; }

  friend bool operator==(const GFilter& a, const GFilter& b) { return a.members_ == b.members_; }

 private:
  ConditionSet members_;
  Certificate certificate_;
};

// Upward closed and downward compatible (within the set). The empty set is
// not a filter.
bool is_filter(const ForcingNotion& notion, ConditionSet s);

// Every p has some q ≤ p in D.
bool is_dense(const ForcingNotion& notion, ConditionSet d);
// Every q ≤ p has some r ≤ q in D.
bool dense_below(const ForcingNotion& notion, ConditionSet d, Condition p);

// The generic filters of a finite notion: one upward closure per minimal
// element, in increasing index order.
std::vector<GFilter> generic_filters(const ForcingNotion& notion);

// f, assumed to be a filter, meets every dense subset of P. Scans all 2^|P|
// subsets; throws kPosetTooLarge above caps.poset_scan.
bool is_generic(const ForcingNotion& notion, ConditionSet f, const Caps& caps = {});

// Descends p = p_0 ≥ p_1 ≥ ... with p_{i+1} ∈ D_i, picking at each step the
// first candidate (index order) that is ≤-minimal among the candidates, and
// returns the upward closure of the chain. Throws kDensityViolated when some
// D_i has nothing below the current condition.
GFilter rasiowa_sikorski(const ForcingNotion& notion, const std::vector<ConditionSet>& family,
                         Condition p);

// Named notions: "one-point", "v-shape", "diamond", "chain-N",
// "antichain-N-with-top". Elements are von Neumann naturals.
ForcingNotion preset_notion(std::string_view name);

// {"elements":[0,1,2], "le":[[0,2],...], "top":2, "auto_reflexive":false}.
// Elements are naturals (von Neumann) or nested-array sets.
ForcingNotion notion_from_json(const Json& j);
Json to_json(const ForcingNotion& notion);
// A natural when x is a von Neumann natural, else the nested-array form.
Json element_to_json(const HSet& x);
HSet element_from_json(const Json& j);

}  // namespace forcelab
