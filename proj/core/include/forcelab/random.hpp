#pragma once

#include <cstdint>
#include <random>

#include "forcelab/formula.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/hset.hpp"
#include "forcelab/relation.hpp"

namespace forcelab {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Independent seed for item `index` of stream `stream` under a run seed.
// Every randomized check draws from its own derived seed, so results do not
// depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

// mt19937_64 with a portable bounded draw (the standard distributions are
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1U) != 0; }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// A formula of depth ≤ max_depth whose free indices are < arity.
Formula random_formula(Rng& rng, std::size_t max_depth, std::size_t arity);

// A renaming with the given source and target sizes (target must be positive
// when source is).
Renaming random_renaming(Rng& rng, std::size_t source, std::size_t target);

// A name of nesting depth ≤ depth: a set of at most `width` pairs <σ, p> with
// σ a smaller random name and p a condition.
HSet random_name(Rng& rng, const ForcingNotion& notion, std::size_t depth, std::size_t width);

// A random relation on the naturals below `field` with roughly `density`
// percent of the off-diagonal pairs; acyclic when `acyclic` (only i < j).
HRelation random_relation(Rng& rng, std::size_t field, unsigned density, bool acyclic);

// A random subset of xs.
HSet random_subset(Rng& rng, std::span<const HSet> xs);

}  // namespace forcelab
