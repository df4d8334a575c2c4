#include "forcelab/names.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

#include "forcelab/error.hpp"

namespace forcelab {

Functional hv(const ForcingNotion& notion, ConditionSet filter) {
  return [notion, filter](const HSet& y, const PredecessorMap& f) {
    std::vector<HSet> out;
    for (const auto& e : y.elements()) {
      if (!e.is_pair()) continue;
      auto p = notion.index_of(e.second());
      if (p && filter.contains(*p)) out.push_back(f.at(e.first()));
    }
    return HSet::of(std::move(out));
  };
}

Valuator::Valuator(const ForcingNotion& notion, ConditionSet filter) : h_(hv(notion, filter)) {}

HSet Valuator::operator()(const HSet& tau) {
  if (auto it = cache_.find(tau); it != cache_.end()) return it->second;
  HSet value = wfrec(edrel(eclose(singleton(tau))), tau, h_);
  cache_.emplace(tau, value);
  return value;
}

struct NameContext::Cache {
  std::mutex mutex;
  std::unique_ptr<Valuator> valuator;
};

NameContext::NameContext(Model ground, ForcingNotion notion, GFilter filter)
    : ground_(std::move(ground)),
      notion_(std::move(notion)),
      filter_(std::move(filter)),
      cache_(std::make_shared<Cache>()) {
  if (!ground_.is_transitive()) throw Error(ErrorCode::kInvalidArgument, "ground model is not transitive");
  if (!is_filter(notion_, filter_.members())) throw Error(ErrorCode::kInvalidArgument, "G is not a filter");
  cache_->valuator = std::make_unique<Valuator>(notion_, filter_.members());
}

HSet NameContext::generic() const { return notion_.to_hset(filter_.members()); }

bool NameContext::notion_in_ground() const {
  return ground_.contains(notion_.carrier()) && ground_.contains(notion_.order_hset()) &&
         ground_.contains(notion_.top_element());
}

HSet NameContext::val(const HSet& tau) const {
  std::lock_guard lock(cache_->mutex);
  return (*cache_->valuator)(tau);
}

namespace {

HSet check_name_memo(const HSet& x, const HSet& top, std::unordered_map<HSet, HSet>& memo) {
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  std::vector<HSet> out;
  for (const auto& y : x.elements()) out.push_back(opair(check_name_memo(y, top, memo), top));
  HSet result = HSet::of(std::move(out));
  memo.emplace(x, result);
  return result;
}

}  // namespace

HSet check_name(const HSet& x, const HSet& top) {
  std::unordered_map<HSet, HSet> memo;
  return check_name_memo(x, top, memo);
}

HSet g_dot(const ForcingNotion& notion) {
  std::vector<HSet> out;
  for (const auto& p : notion.elements()) out.push_back(opair(check_name(p, notion.top_element()), p));
  return HSet::of(std::move(out));
}

HSet union_name(const ForcingNotion& notion, const HSet& tau) {
  const HSet thetas = domain(big_union(domain(tau)));
  std::vector<HSet> out;
  for (const auto& theta : thetas.elements()) {
    // Conditions p with p ≤ q and p ≤ r for some <σ,q> ∈ τ and <θ,r> ∈ σ.
    ConditionSet allowed;
    for (const auto& outer : tau.elements()) {
      if (!outer.is_pair()) continue;
      auto q = notion.index_of(outer.second());
      if (!q) continue;
      for (const auto& inner : outer.first().elements()) {
        if (!inner.is_pair() || inner.first() != theta) continue;
        auto r = notion.index_of(inner.second());
        if (r) allowed = allowed | (notion.down_set(*q) & notion.down_set(*r));
      }
    }
    for (Condition p : allowed.members()) out.push_back(opair(theta, notion.element(p)));
  }
  return HSet::of(std::move(out));
}

HSet name_by_separation(const HSet& a, const ForcingNotion& notion,
                        const std::function<bool(const HSet& pair)>& q) {
  std::vector<HSet> out;
  for (const auto& t : a.elements()) {
    for (const auto& p : notion.elements()) {
      HSet pair = opair(t, p);
      if (q(pair)) out.push_back(std::move(pair));
    }
  }
  return HSet::of(std::move(out));
}

HSet pow_name(const Model& ground, const ForcingNotion& notion, const HSet& pi, const Caps& caps) {
  const HSet grid = cartprod(domain(pi), notion.carrier());
  const std::size_t cells = grid.size();
  if (cells >= 63 || (std::size_t{1} << cells) > caps.pow_name_candidates) {
    throw Error(ErrorCode::kPowNameTooLarge,
                "2^" + std::to_string(cells) + " candidates exceed cap " +
                    std::to_string(caps.pow_name_candidates));
  }
  std::vector<HSet> out;
  for (const auto& chi : ground.universe()) {
    if (is_subset(chi, grid)) out.push_back(opair(chi, notion.top_element()));
  }
  return HSet::of(std::move(out));
}

}  // namespace forcelab
