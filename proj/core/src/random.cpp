#include "forcelab/random.hpp"

#include "forcelab/error.hpp"

namespace forcelab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return mix64(mix64(mix64(seed) ^ stream) ^ index);
}

namespace {

Formula random_atom(Rng& rng, std::size_t context) {
  const std::size_t i = rng.below(context);
  const std::size_t j = rng.below(context);
  return rng.coin() ? Formula::member(i, j) : Formula::equal(i, j);
}

Formula random_formula_in(Rng& rng, std::size_t depth, std::size_t context) {
  // An empty context has no atoms, so it can only be closed off by a quantifier.
  if (context == 0) {
    if (depth < 2) throw Error(ErrorCode::kInvalidArgument, "no closed formula of depth 1");
    return Formula::forall(random_formula_in(rng, depth - 1, 1));
  }
  if (depth <= 1 || rng.below(4) == 0) return random_atom(rng, context);
  if (rng.coin()) {
    return Formula::nand(random_formula_in(rng, depth - 1, context), random_formula_in(rng, depth - 1, context));
  }
  return Formula::forall(random_formula_in(rng, depth - 1, context + 1));
}

}  // namespace

Formula random_formula(Rng& rng, std::size_t max_depth, std::size_t arity) {
  if (max_depth == 0) throw Error(ErrorCode::kInvalidArgument, "formula depth must be positive");
  return random_formula_in(rng, max_depth, arity);
}

Renaming random_renaming(Rng& rng, std::size_t source, std::size_t target) {
  std::vector<std::size_t> table(source);
  for (auto& t : table) t = rng.below(target);
  return Renaming(source, target, std::move(table));
}

HSet random_name(Rng& rng, const ForcingNotion& notion, std::size_t depth, std::size_t width) {
  if (depth == 0) return HSet();
  const std::size_t count = rng.below(width + 1);
  std::vector<HSet> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    pairs.push_back(opair(random_name(rng, notion, rng.below(depth), width),
                          notion.element(rng.below(notion.size()))));
  }
  return HSet::of(std::move(pairs));
}

HRelation random_relation(Rng& rng, std::size_t field, unsigned density, bool acyclic) {
  std::vector<HRelation::Pair> pairs;
  for (std::size_t i = 0; i < field; ++i) {
    for (std::size_t j = acyclic ? i + 1 : 0; j < field; ++j) {
      if (rng.below(100) < density) pairs.emplace_back(von_neumann(i), von_neumann(j));
    }
  }
  return HRelation(std::move(pairs));
}

HSet random_subset(Rng& rng, std::span<const HSet> xs) {
  std::vector<HSet> out;
  for (const auto& x : xs) {
    if (rng.coin()) out.push_back(x);
  }
  return HSet::of(std::move(out));
}

}  // namespace forcelab
