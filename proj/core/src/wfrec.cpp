#include "forcelab/wfrec.hpp"

#include <algorithm>
#include <unordered_set>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

using Adjacency = std::unordered_map<HSet, std::vector<HSet>>;

Adjacency successors(const HRelation& r) {
  Adjacency out;
  for (const auto& [x, y] : r.pairs()) out[x].push_back(y);
  return out;
}

}  // namespace

HRelation trancl(const HRelation& r) {
  const Adjacency next = successors(r);
  std::vector<HRelation::Pair> pairs;
  for (const auto& [start, direct] : next) {
    std::unordered_set<HSet> seen;
    std::vector<HSet> stack(direct.begin(), direct.end());
    while (!stack.empty()) {
      HSet y = stack.back();
      stack.pop_back();
      if (!seen.insert(y).second) continue;
      pairs.emplace_back(start, y);
      if (auto it = next.find(y); it != next.end()) {
        for (const auto& z : it->second) {
          if (!seen.count(z)) stack.push_back(z);
        }
      }
    }
  }
  return HRelation(std::move(pairs));
}

bool is_wf(const HRelation& r) {
  // Kahn's algorithm: the relation is acyclic iff every node gets peeled.
  std::unordered_map<HSet, std::size_t> indegree;
  const Adjacency next = successors(r);
  for (const auto& [x, y] : r.pairs()) {
    indegree.try_emplace(x, 0);
    ++indegree[y];
  }
  std::vector<HSet> ready;
  for (const auto& [x, d] : indegree) {
    if (d == 0) ready.push_back(x);
  }
  std::size_t peeled = 0;
  while (!ready.empty()) {
    HSet x = ready.back();
    ready.pop_back();
    ++peeled;
    if (auto it = next.find(x); it != next.end()) {
      for (const auto& y : it->second) {
        if (--indegree[y] == 0) ready.push_back(y);
      }
    }
  }
  return peeled == indegree.size();
}

HRelation edrel(const HSet& a) {
  std::vector<HRelation::Pair> pairs;
  for (const auto& y : a.elements()) {
    for (const auto& e : y.elements()) {
      if (e.is_pair() && a.contains(e.first())) pairs.emplace_back(e.first(), y);
    }
  }
  return HRelation(std::move(pairs));
}

const HSet& PredecessorMap::at(const HSet& x) const {
  auto it = values_.find(x);
  if (it == values_.end()) {
    throw Error(ErrorCode::kUndefinedPredecessor, x.str() + " is not a predecessor");
  }
  return it->second;
}

namespace {

class WfrecEvaluator {
 public:
  WfrecEvaluator(const HRelation& r, const Functional& h) : h_(h) {
    for (const auto& [x, y] : r.pairs()) predecessors_[y].push_back(x);
  }

  HSet eval(const HSet& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    std::unordered_map<HSet, HSet> restricted;
    if (auto it = predecessors_.find(a); it != predecessors_.end()) {
      for (const auto& x : it->second) restricted.emplace(x, eval(x));
    }
    HSet value = h_(a, PredecessorMap(std::move(restricted)));
    memo_.emplace(a, value);
    return value;
  }

 private:
  const Functional& h_;
  std::unordered_map<HSet, std::vector<HSet>> predecessors_;
  std::unordered_map<HSet, HSet> memo_;
};

}  // namespace

HSet wfrec(const HRelation& r, const HSet& a, const Functional& h) {
  if (!is_wf(r)) throw Error(ErrorCode::kNotWellFounded, "relation has a cycle");
  WfrecEvaluator evaluator(r, h);
  return evaluator.eval(a);
}

}  // namespace forcelab
