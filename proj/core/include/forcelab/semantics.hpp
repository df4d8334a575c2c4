#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "forcelab/caps.hpp"
#include "forcelab/formula.hpp"
#include "forcelab/hset.hpp"
#include "forcelab/report.hpp"

namespace forcelab {

// A finite set model: a duplicate-free universe. Copies share the underlying
// storage, so passing models by value is cheap.
class Model {
 public:
  Model();
  explicit Model(SetCollection universe);

  // V_k as a model.
  static Model stage(std::size_t k, const Caps& caps = {});

  std::span<const HSet> universe() const;
  std::size_t size() const;
  bool contains(const HSet& x) const;
  bool is_transitive() const;
  // Largest rank present, or 0 for an empty universe.
  std::uint32_t max_rank() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// Environment: env[0] is the head, i.e. the value of index 0.
using Env = std::vector<HSet>;

// M, env |= phi. Forall ranges over the universe of M and pushes the bound
// value at the head. Throws kEnvTooShort if env.size() < arity(phi) and
// kEnvNotInModel if an entry lies outside M.
bool sats(const Model& model, const Formula& phi, std::span<const HSet> env);

// {x ∈ A : M, [x, a] |= phi}. Only members of A that lie in M are considered
// (all of them when M is transitive). Throws kArityTooLarge when arity > 2.
HSet separation_set(const Model& model, const Formula& phi, const HSet& a, const HSet& set);

enum class AxiomId { kExtensionality, kFoundation, kPairing, kUnion, kSeparation, kPowerset };

std::string_view to_string(AxiomId axiom);
// Accepts the to_string spellings plus "separation-instance". Throws kUnknownAxiom.
AxiomId parse_axiom(std::string_view name);

struct AxiomParams {
  std::optional<Formula> formula;  // required for kSeparation
};

// Exhaustively evaluates the axiom relativized to M. Closure axioms are
// checked through their relativized definitions, which reduce to plain
// closure when M is transitive.
CheckReport check_relativized_axiom(const Model& model, AxiomId axiom, const AxiomParams& params = {});

}  // namespace forcelab
