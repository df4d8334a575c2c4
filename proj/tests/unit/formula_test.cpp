#include <doctest.h>

#include <functional>

#include "forcelab/error.hpp"
#include "forcelab/formula.hpp"
#include "forcelab/random.hpp"

using namespace forcelab;

namespace {

using F = Formula;

// Same shape, ignoring indices.
bool same_skeleton(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::kMember:
    case FormulaKind::kEqual:
      return true;
    case FormulaKind::kNand:
      return same_skeleton(a.left(), b.left()) && same_skeleton(a.right(), b.right());
    case FormulaKind::kForall:
      return same_skeleton(a.body(), b.body());
  }
  return false;
}

}  // namespace

TEST_CASE("arity") {
  CHECK(F::member(0, 1).arity() == 2);
  CHECK(F::forall(F::member(0, 1)).arity() == 1);
  CHECK(F::forall(F::forall(F::equal(0, 1))).arity() == 0);
  CHECK(F::forall(F::equal(0, 0)).arity() == 0);
  CHECK(F::nand(F::member(3, 0), F::equal(1, 1)).arity() == 4);
  CHECK(arity(F::member(2, 5)) == 6);
}

TEST_CASE("sum_id") {
  const Renaming f(1, 2, {1});
  const Renaming g = sum_id(f);
  CHECK(g.source() == 2);
  CHECK(g.target() == 3);
  CHECK(g(0) == 0);
  CHECK(g(1) == 2);
  CHECK(sum_id(Renaming::identity(3)) == Renaming::identity(4));
  CHECK(sum_id(Renaming(2, 2, {1, 0})).table() == std::vector<std::size_t>{0, 2, 1});
}

TEST_CASE("renaming validation") {
  CHECK_THROWS_AS(Renaming(2, 3, {0}), Error);
  CHECK_THROWS_AS(Renaming(1, 2, {2}), Error);
  CHECK_THROWS_AS(Renaming(2, 2, {0, 1})(2), Error);
  CHECK_THROWS_AS(compose(Renaming::identity(2), Renaming::identity(3)), Error);
  const Json j = to_json(Renaming(2, 3, {2, 0}));
  CHECK(j.dump() == R"({"n":2,"m":3,"map":[2,0]})");
  CHECK(renaming_from_json(j) == Renaming(2, 3, {2, 0}));
}

TEST_CASE("ren") {
  CHECK(ren(F::member(0, 1), Renaming(2, 3, {2, 0})) == F::member(2, 0));
  CHECK(ren(F::forall(F::member(0, 1)), Renaming(1, 2, {1})) == F::forall(F::member(0, 2)));
  CHECK_THROWS_WITH_AS(ren(F::member(0, 3), Renaming::identity(2)), doctest::Contains("arity-exceeds-context"),
                       Error);

  Rng rng(derive_seed(11, 0));
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(4);
    const std::size_t m = 1 + rng.below(4);
    const std::size_t k = 1 + rng.below(4);
    const Formula phi = random_formula(rng, 1 + rng.below(5), n);
    const Renaming f = random_renaming(rng, n, m);
    const Renaming g = random_renaming(rng, m, k);
    CHECK(ren(phi, Renaming::identity(n)) == phi);
    CHECK(same_skeleton(ren(phi, f), phi));
    CHECK(ren(phi, f).arity() <= m);
    CHECK(ren(phi, compose(g, f)) == ren(ren(phi, f), g));
  }
}

TEST_CASE("parsing and printing") {
  CHECK(parse_formula("Mem 0 1") == F::member(0, 1));
  const Formula inner = F::nand(F::member(0, 2), F::equal(0, 1));
  CHECK(parse_formula("And (Mem 0 2) (Eq 0 1)") == F::nand(inner, inner));
  CHECK(parse_formula("Neg (Mem 0 0)") == F::nand(F::member(0, 0), F::member(0, 0)));
  CHECK(parse_formula("Ex (Eq 0 0)") == F::neg(F::forall(F::neg(F::equal(0, 0)))));
  CHECK(parse_formula("Or (Mem 0 1) (Eq 1 0)") == F::nand(F::neg(F::member(0, 1)), F::neg(F::equal(1, 0))));
  CHECK(parse_formula("Imp (Mem 0 1) (Eq 1 0)") == F::nand(F::member(0, 1), F::neg(F::equal(1, 0))));
  CHECK(parse_formula("Iff (Mem 0 1) (Eq 1 0)") ==
        F::conj(F::implies(F::member(0, 1), F::equal(1, 0)), F::implies(F::equal(1, 0), F::member(0, 1))));
  CHECK(parse_formula("  All ( Nand (Mem 0 1)   (Eq 0 0) ) ") ==
        F::forall(F::nand(F::member(0, 1), F::equal(0, 0))));
  CHECK(print(F::nand(F::member(0, 2), F::equal(0, 1))) == "Nand (Mem 0 2) (Eq 0 1)");

  for (const char* bad : {"", "Mem 0", "Mem a 1", "Foo 0 1", "Nand (Mem 0 1)", "Mem 0 1 extra", "(Mem 0 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_WITH_AS(parse_formula(bad), doctest::Contains("syntax"), Error);
  }

  const char* corpus[] = {
      "Mem 0 1",        "Eq 1 1",          "Neg (Mem 1 0)",  "All (Mem 0 1)",       "Ex (Mem 1 0)",
      "And (Mem 0 1) (Eq 0 0)", "Or (Eq 0 1) (Mem 1 0)", "Imp (Mem 0 1) (Mem 1 0)", "Iff (Eq 0 1) (Eq 1 0)",
      "All (All (Eq 0 1))", "Ex (And (Mem 0 1) (Mem 0 2))", "All (Imp (Mem 0 1) (Mem 0 2))",
  };
  for (const char* text : corpus) {
    CAPTURE(text);
    const Formula phi = parse_formula(text);
    const std::string normal = print(phi);
    CHECK(parse_formula(normal) == phi);
    CHECK(print(parse_formula(normal)) == normal);
  }
  Rng rng(derive_seed(11, 1));
  for (int i = 0; i < 50; ++i) {
    const Formula phi = random_formula(rng, 1 + rng.below(5), 3);
    CHECK(parse_formula(print(phi)) == phi);
  }
}
