#include <doctest.h>

#include <functional>

#include "forcelab/error.hpp"
#include "forcelab/random.hpp"
#include "forcelab/wfrec.hpp"

using namespace forcelab;

namespace {

HSet n(std::size_t i) { return von_neumann(i); }

// r ∪ r∘r until stable.
HRelation trancl_by_squaring(const HRelation& r) {
  HRelation acc = r;
  for (;;) {
    std::vector<HRelation::Pair> pairs = acc.pairs();
    for (const auto& [x, y] : acc.pairs()) {
      for (const auto& [y2, z] : acc.pairs()) {
        if (y == y2) pairs.emplace_back(x, z);
      }
    }
    HRelation next(std::move(pairs));
    if (next == acc) return acc;
    acc = next;
  }
}

// Plain recursion without memoization.
HSet naive_wfrec(const HRelation& r, const HSet& a, const Functional& h) {
  std::unordered_map<HSet, HSet> values;
  for (const auto& [x, y] : r.pairs()) {
    if (y == a) values.emplace(x, naive_wfrec(r, x, h));
  }
  return h(a, PredecessorMap(std::move(values)));
}

// H(x, f) = {x} ∪ {<y, f(y)> : y a predecessor}, which records the whole
// recursion tree, so any difference between two evaluations shows up.
const Functional kRecordTree = [](const HSet& x, const PredecessorMap& f) {
  std::vector<HSet> out{x};
  for (const auto& [y, v] : f.values()) out.push_back(opair(y, v));
  return HSet::of(std::move(out));
};

}  // namespace

TEST_CASE("trancl") {
  const HRelation r({{n(0), n(1)}, {n(1), n(2)}});
  CHECK(trancl(r) == HRelation({{n(0), n(1)}, {n(1), n(2)}, {n(0), n(2)}}));
  CHECK(trancl(HRelation()).empty());
  Rng rng(derive_seed(5, 0));
  for (int i = 0; i < 100; ++i) {
    const HRelation s = random_relation(rng, 1 + rng.below(8), 20, rng.coin());
    CHECK(trancl(s) == trancl_by_squaring(s));
  }
}

TEST_CASE("is_wf") {
  CHECK(is_wf(HRelation({{n(0), n(1)}})));
  CHECK_FALSE(is_wf(HRelation({{n(0), n(0)}})));
  CHECK_FALSE(is_wf(HRelation({{n(0), n(1)}, {n(1), n(2)}, {n(2), n(0)}})));
  CHECK(is_wf(HRelation()));
  for (const auto& tau : v_stage(4)) CHECK(is_wf(edrel(eclose(singleton(tau)))));
  Rng rng(derive_seed(5, 1));
  for (int i = 0; i < 200; ++i) {
    const auto v5 = v_stage(5);
    const HSet tau = v5[rng.below(v5.size())];
    CHECK(is_wf(edrel(eclose(singleton(tau)))));
  }
}

TEST_CASE("edrel") {
  const HSet q = n(2);
  const HSet tau = HSet::of({opair(HSet(), q)});
  const HRelation r = edrel(eclose(singleton(tau)));
  CHECK(r.contains(HSet(), tau));
  CHECK(edrel(HSet::of({HSet()})).empty());

  Rng rng(derive_seed(5, 2));
  const auto v4 = v_stage(4);
  for (int i = 0; i < 100; ++i) {
    const HSet a = random_subset(rng, v4);
    const HSet b = set_union(a, random_subset(rng, v4));
    const HRelation ra = edrel(a);
    for (const auto& [x, y] : ra.pairs()) CHECK(edrel(b).contains(x, y));
    // Direct scan oracle.
    std::size_t count = 0;
    for (const auto& x : a.elements()) {
      for (const auto& y : a.elements()) {
        bool related = false;
        for (const auto& e : y.elements()) related = related || (e.is_pair() && e.first() == x);
        CHECK(ra.contains(x, y) == related);
        count += related;
      }
    }
    CHECK(ra.size() == count);
  }
}

TEST_CASE("wfrec") {
  const HRelation r({{n(0), n(1)}, {n(1), n(2)}});
  const Functional constant = [](const HSet&, const PredecessorMap&) { return HSet(); };
  CHECK(wfrec(r, n(2), constant) == HSet());
  CHECK_THROWS_WITH_AS(wfrec(HRelation({{n(0), n(0)}}), n(0), constant), doctest::Contains("not-well-founded"),
                       Error);
  const Functional peeks = [](const HSet& x, const PredecessorMap& f) { return f.at(x); };
  CHECK_THROWS_WITH_AS(wfrec(r, n(2), peeks), doctest::Contains("undefined-predecessor"), Error);

  // Rank by recursion over ∈ restricted to V_3.
  std::vector<HRelation::Pair> member_pairs;
  for (const auto& y : v_stage(3)) {
    for (const auto& x : y.elements()) member_pairs.emplace_back(x, y);
  }
  const Functional rank_h = [](const HSet&, const PredecessorMap& f) {
    std::size_t best = 0;
    for (const auto& [y, v] : f.values()) best = std::max(best, *v.as_natural() + 1);
    return von_neumann(best);
  };
  for (const auto& x : v_stage(3)) CHECK(wfrec(HRelation(member_pairs), x, rank_h) == von_neumann(x.rank()));

  Rng rng(derive_seed(5, 3));
  for (int i = 0; i < 100; ++i) {
    const std::size_t field = 1 + rng.below(7);
    const HRelation s = random_relation(rng, field, 35, true);
    const HSet a = n(rng.below(field));
    CHECK(wfrec(s, a, kRecordTree) == naive_wfrec(s, a, kRecordTree));
  }
}

TEST_CASE("wfrec restricted to a predecessor-closed set") {
  Rng rng(derive_seed(5, 4));
  for (int i = 0; i < 200; ++i) {
    const std::size_t field = 1 + rng.below(10);
    const HRelation r = random_relation(rng, field, 30, true);
    const HSet a = n(rng.below(field));
    // A = {a} ∪ trancl(r)-predecessors of a ∪ some noise.
    std::vector<HSet> members{a};
    const HRelation closure = trancl(r);
    for (const auto& [x, y] : closure.pairs()) {
      if (y == a) members.push_back(x);
    }
    for (std::size_t j = 0; j < field; ++j) {
      if (rng.below(3) == 0) members.push_back(n(j));
    }
    const HSet big_a = HSet::of(members);
    CHECK(wfrec(r, a, kRecordTree) == wfrec(r.restrict_to(big_a.elements()), a, kRecordTree));
  }
}
