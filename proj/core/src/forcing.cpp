#include "forcelab/forcing.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "forcelab/error.hpp"
#include "forcelab/hset_json.hpp"

namespace forcelab {

ConditionSet ConditionSet::of(std::initializer_list<Condition> conditions) {
  ConditionSet s;
  for (auto p : conditions) s.insert(p);
  return s;
}

std::vector<Condition> ConditionSet::members() const {
  std::vector<Condition> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Condition>(std::countr_zero(b)));
  }
  return out;
}

ForcingNotion ForcingNotion::validate(std::vector<HSet> elements,
                                      const std::vector<std::pair<HSet, HSet>>& le, const HSet& top,
                                      bool auto_reflexive) {
  if (elements.empty()) throw Error(ErrorCode::kNoTop, "empty forcing notion");
  if (elements.size() > kMaxElements) {
    throw Error(ErrorCode::kPosetTooLarge, std::to_string(elements.size()) + " conditions");
  }
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate conditions");
  }

  ForcingNotion n;
  n.elements_ = std::move(elements);
  const std::size_t size = n.elements_.size();
  n.below_.assign(size, ConditionSet{});
  n.above_.assign(size, ConditionSet{});

  auto index = [&](const HSet& x) {
    auto i = n.index_of(x);
    if (!i) throw Error(ErrorCode::kInvalidArgument, "order mentions unknown condition " + x.str());
    return *i;
  };
  for (const auto& [p, q] : le) {
    const Condition i = index(p);
    const Condition j = index(q);
    n.below_[j].insert(i);
    n.above_[i].insert(j);
  }
  if (auto_reflexive) {
    for (Condition p = 0; p < size; ++p) {
      n.below_[p].insert(p);
      n.above_[p].insert(p);
    }
  }

  for (Condition p = 0; p < size; ++p) {
    if (!n.le(p, p)) throw Error(ErrorCode::kNotReflexive, "missing " + n.elements_[p].str() + " ≤ itself");
  }
  for (Condition p = 0; p < size; ++p) {
    for (Condition q : n.above_[p].members()) {
      if (!n.above_[q].subset_of(n.above_[p])) {
        throw Error(ErrorCode::kNotTransitive, "order is not transitive at " + n.elements_[q].str());
      }
      if (q != p && n.le(q, p)) {
        throw Error(ErrorCode::kNotAntisymmetric,
                    n.elements_[p].str() + " and " + n.elements_[q].str() + " are ≤ each other");
      }
    }
  }

  auto t = n.index_of(top);
  if (!t) throw Error(ErrorCode::kNoTop, "top " + top.str() + " is not a condition");
  n.top_ = *t;
  if (n.below_[n.top_] != n.all()) throw Error(ErrorCode::kNoTop, top.str() + " is not above everything");

  for (Condition p = 0; p < size; ++p) {
    if (n.below_[p] == ConditionSet::of({p})) n.minimal_.push_back(p);
  }
  return n;
}

std::optional<Condition> ForcingNotion::index_of(const HSet& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return std::nullopt;
  return static_cast<Condition>(it - elements_.begin());
}

HSet ForcingNotion::carrier() const { return HSet::from_sorted_unique(elements_); }

HSet ForcingNotion::order_hset() const {
  std::vector<HSet> pairs;
  for (Condition q = 0; q < size(); ++q) {
    for (Condition p : below_[q].members()) pairs.push_back(opair(elements_[p], elements_[q]));
  }
  return HSet::of(std::move(pairs));
}

HSet ForcingNotion::to_hset(ConditionSet s) const {
  std::vector<HSet> out;
  for (Condition p : s.members()) out.push_back(elements_[p]);
  return HSet::from_sorted_unique(std::move(out));
}

bool is_filter(const ForcingNotion& notion, ConditionSet s) {
  if (s.empty()) return false;
  const auto members = s.members();
  for (Condition p : members) {
    if (!notion.up_set(p).subset_of(s)) return false;
  }
  for (Condition p : members) {
    for (Condition q : members) {
      if (!(notion.down_set(p) & notion.down_set(q) & s).empty()) continue;
      return false;
    }
  }
  return true;
}

bool dense_below(const ForcingNotion& notion, ConditionSet d, Condition p) {
  for (Condition q : notion.down_set(p).members()) {
    if (!notion.down_set(q).intersects(d)) return false;
  }
  return true;
}

bool is_dense(const ForcingNotion& notion, ConditionSet d) {
  for (Condition p = 0; p < notion.size(); ++p) {
    if (!notion.down_set(p).intersects(d)) return false;
  }
  return true;
}

std::vector<GFilter> generic_filters(const ForcingNotion& notion) {
  std::vector<GFilter> out;
  for (Condition m : notion.minimal()) out.emplace_back(notion.up_set(m), MinimalUpset{m});
  return out;
}

bool is_generic(const ForcingNotion& notion, ConditionSet f, const Caps& caps) {
  if (notion.size() > caps.poset_scan) {
    throw Error(ErrorCode::kPosetTooLarge, "genericity scan over 2^" + std::to_string(notion.size()) +
                                               " subsets exceeds cap " + std::to_string(caps.poset_scan));
  }
  const std::uint64_t count = std::uint64_t{1} << notion.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ConditionSet d(bits);
    if (is_dense(notion, d) && !f.intersects(d)) return false;
  }
  return true;
}

GFilter rasiowa_sikorski(const ForcingNotion& notion, const std::vector<ConditionSet>& family,
                         Condition p) {
  if (p >= notion.size()) throw Error(ErrorCode::kInvalidArgument, "condition out of range");
  std::vector<Condition> chain{p};
  Condition current = p;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ConditionSet candidates = notion.down_set(current) & family[i];
    if (candidates.empty()) {
      throw Error(ErrorCode::kDensityViolated,
                  "family member " + std::to_string(i) + " has nothing below " +
                      notion.element(current).str());
    }
    Condition next = notion.size();
    for (Condition q : candidates.members()) {
      if ((notion.down_set(q) & candidates) == ConditionSet::of({q})) {
        next = q;
        break;
      }
    }
    chain.push_back(next);
    current = next;
  }
  return GFilter(notion.up_set(current), RSChain{std::move(chain)});
}

namespace {

std::vector<HSet> naturals(std::size_t n) {
  std::vector<HSet> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(von_neumann(i));
  return out;
}

std::optional<std::size_t> parse_count(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return std::nullopt;
  return value;
}

ForcingNotion chain(std::size_t n) {
  std::vector<std::pair<HSet, HSet>> le;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) le.emplace_back(von_neumann(i), von_neumann(j));
  }
  return ForcingNotion::validate(naturals(n), le, von_neumann(n - 1));
}

ForcingNotion antichain_with_top(std::size_t n) {
  std::vector<std::pair<HSet, HSet>> le;
  for (std::size_t i = 0; i < n; ++i) le.emplace_back(von_neumann(i), von_neumann(n));
  return ForcingNotion::validate(naturals(n + 1), le, von_neumann(n), true);
}

}  // namespace

ForcingNotion preset_notion(std::string_view name) {
  if (name == "one-point" || name == "trivial") return chain(1);
  if (name == "v-shape") return antichain_with_top(2);
  if (name == "diamond") {
    auto n = [](std::size_t i) { return von_neumann(i); };
    return ForcingNotion::validate(naturals(4),
                                   {{n(0), n(1)}, {n(0), n(2)}, {n(0), n(3)}, {n(1), n(3)}, {n(2), n(3)}},
                                   n(3), true);
  }
  if (name.starts_with("chain-")) {
    if (auto k = parse_count(name.substr(6)); k && *k <= ForcingNotion::kMaxElements) return chain(*k);
  }
  constexpr std::string_view kSuffix = "-with-top";
  if (name.starts_with("antichain-") && name.ends_with(kSuffix)) {
    auto digits = name.substr(10, name.size() - 10 - kSuffix.size());
    if (auto k = parse_count(digits); k && *k < ForcingNotion::kMaxElements) return antichain_with_top(*k);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown poset preset '" + std::string(name) + "'");
}

Json element_to_json(const HSet& x) {
  if (auto n = x.as_natural()) return Json(*n);
  return to_json(x);
}

HSet element_from_json(const Json& j) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    return von_neumann(j.get<std::size_t>());
  }
  return hset_from_json(j);
}

ForcingNotion notion_from_json(const Json& j) {
  try {
    std::vector<HSet> elements;
    for (const auto& e : j.at("elements")) elements.push_back(element_from_json(e));
    std::vector<std::pair<HSet, HSet>> le;
    for (const auto& pair : j.at("le")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::kInvalidArgument, "order entries must be [p, q]");
      }
      le.emplace_back(element_from_json(pair[0]), element_from_json(pair[1]));
    }
    const bool auto_reflexive = j.value("auto_reflexive", false);
    return ForcingNotion::validate(std::move(elements), le, element_from_json(j.at("top")),
                                   auto_reflexive);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad poset JSON: ") + e.what());
  }
}

Json to_json(const ForcingNotion& notion) {
  Json j;
  auto elements = Json::array();
  for (const auto& x : notion.elements()) elements.push_back(element_to_json(x));
  j["elements"] = std::move(elements);
  auto le = Json::array();
  for (Condition q = 0; q < notion.size(); ++q) {
    for (Condition p : notion.down_set(q).members()) {
      le.push_back(Json::array({element_to_json(notion.element(p)), element_to_json(notion.element(q))}));
    }
  }
  j["le"] = std::move(le);
  j["top"] = element_to_json(notion.top_element());
  return j;
}

}  // namespace forcelab
