#include "forcelab/hset.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "forcelab/error.hpp"

namespace forcelab {

namespace detail {

struct HSetNode {
  std::vector<HSet> elements;
  std::uint32_t rank = 0;
  std::size_t hash = 0;
  std::optional<HSet> pair_first;
  std::optional<HSet> pair_second;

  static const HSetNode* intern(std::vector<HSet> elements);
};

}  // namespace detail

namespace {

using detail::HSetNode;

constexpr std::size_t kEmptyHash = 0x6a09e667f3bcc908ULL;

std::size_t mix(std::size_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::size_t structural_hash(const std::vector<HSet>& elements) {
  std::size_t h = kEmptyHash;
  for (const auto& e : elements) h = mix(h ^ (e.hash() + 0x9e3779b97f4a7c15ULL));
  return h ^ elements.size();
}

class InternTable {
 public:
  const HSetNode* intern(std::vector<HSet> elements) {
    const std::size_t h = structural_hash(elements);
    std::lock_guard lock(mutex_);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (it->second->elements == elements) return it->second;
    }
    HSetNode& node = nodes_.emplace_back();
    node.hash = h;
    node.elements = std::move(elements);
    for (const auto& e : node.elements) node.rank = std::max(node.rank, e.rank() + 1);
    detect_pair(node);
    index_.emplace(h, &node);
    return &node;
  }

 private:
  static void detect_pair(HSetNode& node) {
    const auto& es = node.elements;
    if (es.size() == 1 && es[0].size() == 1) {
      node.pair_first = es[0].elements()[0];
      node.pair_second = node.pair_first;
      return;
    }
    if (es.size() != 2) return;
    for (int s = 0; s < 2; ++s) {
      const HSet& single = es[s];
      const HSet& doubleton = es[1 - s];
      if (single.size() != 1 || doubleton.size() != 2) continue;
      const HSet& a = single.elements()[0];
      auto d = doubleton.elements();
      if (d[0] == a) {
        node.pair_first = a;
        node.pair_second = d[1];
        return;
      }
      if (d[1] == a) {
        node.pair_first = a;
        node.pair_second = d[0];
        return;
      }
    }
  }

  std::mutex mutex_;
  std::deque<HSetNode> nodes_;
  std::unordered_multimap<std::size_t, const HSetNode*> index_;
};

InternTable& table() {
  static InternTable instance;
  return instance;
}

const HSetNode* empty_node() {
  static const HSetNode* node = table().intern({});
  return node;
}

}  // namespace

namespace detail {
const HSetNode* HSetNode::intern(std::vector<HSet> elements) {
  return table().intern(std::move(elements));
}
}  // namespace detail

HSet::HSet() : node_(empty_node()) {}

HSet HSet::of(std::vector<HSet> elements) {
  canonicalize(elements);
  return HSet(HSetNode::intern(std::move(elements)));
}

HSet HSet::from_sorted_unique(std::vector<HSet> elements) {
  return HSet(HSetNode::intern(std::move(elements)));
}

std::span<const HSet> HSet::elements() const { return node_->elements; }
std::size_t HSet::size() const { return node_->elements.size(); }
std::uint32_t HSet::rank() const { return node_->rank; }
std::size_t HSet::hash() const { return node_->hash; }

bool HSet::contains(const HSet& x) const {
  const auto& es = node_->elements;
  if (x.rank() >= rank()) return false;
  if (es.size() <= 16) return std::find(es.begin(), es.end(), x) != es.end();
  return std::binary_search(es.begin(), es.end(), x);
}

bool HSet::is_pair() const { return node_->pair_first.has_value(); }

const HSet& HSet::first() const {
  if (!is_pair()) throw Error(ErrorCode::kNotAPair, "fst of " + str());
  return *node_->pair_first;
}

const HSet& HSet::second() const {
  if (!is_pair()) throw Error(ErrorCode::kNotAPair, "snd of " + str());
  return *node_->pair_second;
}

std::optional<std::size_t> HSet::as_natural() const {
  // n = {0, ..., n-1}; in canonical order element i must be the natural i.
  const auto& es = node_->elements;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].size() != i) return std::nullopt;
    if (i > 0 && es[i] != HSet::from_sorted_unique({es.begin(), es.begin() + static_cast<long>(i)})) {
      return std::nullopt;
    }
  }
  return es.size();
}

std::strong_ordering operator<=>(const HSet& a, const HSet& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& ea = a.node_->elements;
  const auto& eb = b.node_->elements;
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = ea[i] <=> eb[i];
    if (c != 0) return c;
  }
  return ea.size() <=> eb.size();
}

std::string HSet::str() const {
  std::string out = "{";
  bool first_elem = true;
  for (const auto& e : node_->elements) {
    if (!first_elem) out += ',';
    first_elem = false;
    out += e.str();
  }
  out += '}';
  return out;
}

void canonicalize(SetCollection& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

bool mem(const HSet& x, const HSet& y) { return y.contains(x); }
std::uint32_t rank(const HSet& x) { return x.rank(); }

HSet von_neumann(std::size_t n) {
  std::vector<HSet> elements;
  elements.reserve(n);
  HSet current;
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(current);
    current = HSet::from_sorted_unique(elements);
  }
  return current;
}

HSet singleton(const HSet& x) { return HSet::from_sorted_unique({x}); }

HSet upair(const HSet& a, const HSet& b) {
  if (a == b) return singleton(a);
  return a < b ? HSet::from_sorted_unique({a, b}) : HSet::from_sorted_unique({b, a});
}

HSet opair(const HSet& a, const HSet& b) { return upair(singleton(a), upair(a, b)); }
const HSet& fst(const HSet& p) { return p.first(); }
const HSet& snd(const HSet& p) { return p.second(); }

HSet set_union(const HSet& a, const HSet& b) {
  std::vector<HSet> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                 std::back_inserter(out));
  return HSet::from_sorted_unique(std::move(out));
}

HSet set_intersection(const HSet& a, const HSet& b) {
  std::vector<HSet> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return HSet::from_sorted_unique(std::move(out));
}

HSet set_difference(const HSet& a, const HSet& b) {
  std::vector<HSet> out;
  std::set_difference(a.elements().begin(), a.elements().end(), b.elements().begin(),
                      b.elements().end(), std::back_inserter(out));
  return HSet::from_sorted_unique(std::move(out));
}

bool is_subset(const HSet& a, const HSet& b) {
  return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                       a.elements().end());
}

HSet big_union(const HSet& x) {
  std::vector<HSet> out;
  for (const auto& e : x.elements()) out.insert(out.end(), e.elements().begin(), e.elements().end());
  return HSet::of(std::move(out));
}

HSet domain(const HSet& r) {
  std::vector<HSet> out;
  for (const auto& e : r.elements()) {
    if (e.is_pair()) out.push_back(e.first());
  }
  return HSet::of(std::move(out));
}

HSet cartprod(const HSet& a, const HSet& b) {
  std::vector<HSet> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) out.push_back(opair(x, y));
  }
  return HSet::of(std::move(out));
}

HSet eclose(const HSet& x) {
  std::unordered_set<HSet> seen;
  std::vector<HSet> stack(x.elements().begin(), x.elements().end());
  std::vector<HSet> out;
  while (!stack.empty()) {
    HSet y = stack.back();
    stack.pop_back();
    if (!seen.insert(y).second) continue;
    out.push_back(y);
    for (const auto& z : y.elements()) {
      if (!seen.count(z)) stack.push_back(z);
    }
  }
  return HSet::of(std::move(out));
}

bool is_transitive(std::span<const HSet> collection) {
  std::unordered_set<HSet> members(collection.begin(), collection.end());
  for (const auto& x : collection) {
    for (const auto& y : x.elements()) {
      if (!members.count(y)) return false;
    }
  }
  return true;
}

bool is_transitive(const HSet& x) { return is_transitive(x.elements()); }

SetCollection v_stage(std::size_t k, const Caps& caps) {
  if (k > caps.max_stage) {
    throw Error(ErrorCode::kStageTooLarge,
                "V_" + std::to_string(k) + " exceeds max stage " + std::to_string(caps.max_stage));
  }
  static std::mutex mutex;
  static std::vector<SetCollection> stages{SetCollection{}};
  std::lock_guard lock(mutex);
  while (stages.size() <= k) {
    const SetCollection& prev = stages.back();
    // |V_{j+1}| = 2^|V_j|; refuse before allocating.
    if (prev.size() >= 63 || (std::size_t{1} << prev.size()) > caps.stage_elements) {
      throw Error(ErrorCode::kStageTooLarge,
                  "V_" + std::to_string(stages.size()) + " would exceed " +
                      std::to_string(caps.stage_elements) + " elements");
    }
    const std::size_t count = std::size_t{1} << prev.size();
    SetCollection next;
    next.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<HSet> elems;
      for (std::size_t i = 0; i < prev.size(); ++i) {
        if (mask & (std::size_t{1} << i)) elems.push_back(prev[i]);
      }
      next.push_back(HSet::from_sorted_unique(std::move(elems)));
    }
    std::sort(next.begin(), next.end());
    stages.push_back(std::move(next));
  }
  if (stages[k].size() > caps.stage_elements) {
    throw Error(ErrorCode::kStageTooLarge, "V_" + std::to_string(k) + " exceeds element cap");
  }
  return stages[k];
}

std::ostream& operator<<(std::ostream& os, const HSet& x) { return os << x.str(); }

HSet to_hset(std::span<const HSet> collection) {
  return HSet::of(std::vector<HSet>(collection.begin(), collection.end()));
}

}  // namespace forcelab
