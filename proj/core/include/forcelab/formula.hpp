#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "forcelab/json.hpp"

namespace forcelab {

enum class FormulaKind { kMember, kEqual, kNand, kForall };

// First-order formula over {∈, =} with de Bruijn indices. Nand and Forall are
// the only connectives; the usual sugar elaborates to them on construction.
//
// Index 0 refers to the innermost binder (or, at top level, the head of the
// environment). arity() is the least context size containing every free index.
class Formula {
 public:
  static Formula member(std::size_t i, std::size_t j);
  static Formula equal(std::size_t i, std::size_t j);
  static Formula nand(Formula p, Formula q);
  static Formula forall(Formula p);

  static Formula neg(const Formula& p);
  static Formula conj(const Formula& p, const Formula& q);
  static Formula disj(const Formula& p, const Formula& q);
  static Formula implies(const Formula& p, const Formula& q);
  static Formula iff(const Formula& p, const Formula& q);
  static Formula exists(const Formula& p);

  FormulaKind kind() const { return node_->kind; }
  // Atomic formulas only.
  std::size_t lhs_index() const { return node_->i; }
  std::size_t rhs_index() const { return node_->j; }
  // Nand: left/right. Forall: body() is left().
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  const Formula& body() const { return *node_->left; }

  std::size_t arity() const { return node_->arity; }
  std::size_t depth() const { return node_->depth; }
  // Number of nested Forall binders along the deepest path.
  std::size_t quantifier_depth() const { return node_->quantifier_depth; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    FormulaKind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    std::unique_ptr<Formula> left;
    std::unique_ptr<Formula> right;
    std::size_t arity = 0;
    std::size_t depth = 0;
    std::size_t quantifier_depth = 0;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A total map {0..source-1} -> {0..target-1}.
class Renaming {
 public:
  Renaming(std::size_t source, std::size_t target, std::vector<std::size_t> table);

  static Renaming identity(std::size_t n);

  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  std::size_t operator()(std::size_t i) const;
  const std::vector<std::size_t>& table() const { return table_; }

  friend bool operator==(const Renaming&, const Renaming&) = default;

 private:
  std::size_t source_;
  std::size_t target_;
  std::vector<std::size_t> table_;
};

// id_1 + f : 1+n -> 1+m, i.e. 0 -> 0 and i+1 -> f(i)+1.
Renaming sum_id(const Renaming& f);

// (g ∘ f)(i) = g(f(i)); requires f.target() == g.source().
Renaming compose(const Renaming& g, const Renaming& f);

// Renames the free indices of phi along f. Requires arity(phi) <= f.source(),
// otherwise throws kArityExceedsContext.
Formula ren(const Formula& phi, const Renaming& f);

std::size_t arity(const Formula& phi);

// Grammar (prefix, whitespace separated, parentheses group subformulas):
//   Mem i j | Eq i j | Nand f g | All f | Neg f | And f g | Or f g
//   | Imp f g | Iff f g | Ex f
// Throws Error(kSyntax) with the byte offset of the problem.
Formula parse_formula(std::string_view text);

// Prints the elaborated core syntax (Mem, Eq, Nand, All). Compound arguments
// are parenthesized, so parse_formula(print(phi)) == phi.
std::string print(const Formula& phi);

Json to_json(const Renaming& f);
Renaming renaming_from_json(const Json& j);

}  // namespace forcelab
