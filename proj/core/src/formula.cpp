#include "forcelab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::member(std::size_t i, std::size_t j) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::kMember;
  n->i = i;
  n->j = j;
  n->arity = std::max(i, j) + 1;
  n->depth = 1;
  n->hash = combine(combine(1, i), j);
  return Formula(std::move(n));
}

Formula Formula::equal(std::size_t i, std::size_t j) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::kEqual;
  n->i = i;
  n->j = j;
  n->arity = std::max(i, j) + 1;
  n->depth = 1;
  n->hash = combine(combine(2, i), j);
  return Formula(std::move(n));
}

Formula Formula::nand(Formula p, Formula q) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::kNand;
  n->arity = std::max(p.arity(), q.arity());
  n->depth = 1 + std::max(p.depth(), q.depth());
  n->quantifier_depth = std::max(p.quantifier_depth(), q.quantifier_depth());
  n->hash = combine(combine(3, p.hash()), q.hash());
  n->left = std::make_unique<Formula>(std::move(p));
  n->right = std::make_unique<Formula>(std::move(q));
  return Formula(std::move(n));
}

Formula Formula::forall(Formula p) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::kForall;
  n->arity = p.arity() == 0 ? 0 : p.arity() - 1;
  n->depth = 1 + p.depth();
  n->quantifier_depth = 1 + p.quantifier_depth();
  n->hash = combine(4, p.hash());
  n->left = std::make_unique<Formula>(std::move(p));
  return Formula(std::move(n));
}

Formula Formula::neg(const Formula& p) { return nand(p, p); }
Formula Formula::conj(const Formula& p, const Formula& q) { return neg(nand(p, q)); }
Formula Formula::disj(const Formula& p, const Formula& q) { return nand(neg(p), neg(q)); }
Formula Formula::implies(const Formula& p, const Formula& q) { return nand(p, neg(q)); }
Formula Formula::iff(const Formula& p, const Formula& q) {
  return conj(implies(p, q), implies(q, p));
}
Formula Formula::exists(const Formula& p) { return neg(forall(neg(p))); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::kMember:
    case FormulaKind::kEqual:
      return a.lhs_index() == b.lhs_index() && a.rhs_index() == b.rhs_index();
    case FormulaKind::kNand:
      return a.left() == b.left() && a.right() == b.right();
    case FormulaKind::kForall:
      return a.body() == b.body();
  }
  return false;
}

std::size_t arity(const Formula& phi) { return phi.arity(); }

Renaming::Renaming(std::size_t source, std::size_t target, std::vector<std::size_t> table)
    : source_(source), target_(target), table_(std::move(table)) {
  if (table_.size() != source_) {
    throw Error(ErrorCode::kInvalidArgument, "renaming table has " + std::to_string(table_.size()) +
                                                 " entries, expected " + std::to_string(source_));
  }
  for (auto v : table_) {
    if (v >= target_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "renaming value " + std::to_string(v) + " outside target " + std::to_string(target_));
    }
  }
}

Renaming Renaming::identity(std::size_t n) {
  std::vector<std::size_t> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = i;
  return Renaming(n, n, std::move(table));
}

std::size_t Renaming::operator()(std::size_t i) const {
  if (i >= source_) {
    throw Error(ErrorCode::kArityExceedsContext,
                "index " + std::to_string(i) + " outside context " + std::to_string(source_));
  }
  return table_[i];
}

Renaming sum_id(const Renaming& f) {
  std::vector<std::size_t> table;
  table.reserve(f.source() + 1);
  table.push_back(0);
  for (auto v : f.table()) table.push_back(v + 1);
  return Renaming(f.source() + 1, f.target() + 1, std::move(table));
}

Renaming compose(const Renaming& g, const Renaming& f) {
  if (f.target() != g.source()) {
    throw Error(ErrorCode::kInvalidArgument, "renamings do not compose");
  }
  std::vector<std::size_t> table;
  table.reserve(f.source());
  for (auto v : f.table()) table.push_back(g(v));
  return Renaming(f.source(), g.target(), std::move(table));
}

namespace {

Formula ren_unchecked(const Formula& phi, const Renaming& f) {
  switch (phi.kind()) {
    case FormulaKind::kMember:
      return Formula::member(f(phi.lhs_index()), f(phi.rhs_index()));
    case FormulaKind::kEqual:
      return Formula::equal(f(phi.lhs_index()), f(phi.rhs_index()));
    case FormulaKind::kNand:
      return Formula::nand(ren_unchecked(phi.left(), f), ren_unchecked(phi.right(), f));
    case FormulaKind::kForall:
      return Formula::forall(ren_unchecked(phi.body(), sum_id(f)));
  }
  throw Error(ErrorCode::kInvalidArgument, "bad formula kind");
}

}  // namespace

Formula ren(const Formula& phi, const Renaming& f) {
  if (phi.arity() > f.source()) {
    throw Error(ErrorCode::kArityExceedsContext, "arity " + std::to_string(phi.arity()) +
                                                     " exceeds renaming source " +
                                                     std::to_string(f.source()));
  }
  return ren_unchecked(phi, f);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_top() {
    Formula phi = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return phi;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntax, what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::size_t index() {
    skip_space();
    std::size_t value = 0;
    auto first = text_.data() + pos_;
    auto last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected index");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  Formula parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Formula inner = parse();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    const std::size_t at = pos_;
    auto op = word();
    if (op == "Mem") {
      auto i = index();
      return Formula::member(i, index());
    }
    if (op == "Eq") {
      auto i = index();
      return Formula::equal(i, index());
    }
    if (op == "All") return Formula::forall(parse());
    if (op == "Ex") return Formula::exists(parse());
    if (op == "Neg") return Formula::neg(parse());
    if (op == "Nand" || op == "And" || op == "Or" || op == "Imp" || op == "Iff") {
      Formula p = parse();
      Formula q = parse();
      if (op == "Nand") return Formula::nand(std::move(p), std::move(q));
      if (op == "And") return Formula::conj(p, q);
      if (op == "Or") return Formula::disj(p, q);
      if (op == "Imp") return Formula::implies(p, q);
      return Formula::iff(p, q);
    }
    pos_ = at;
    fail(op.empty() ? "expected formula" : "unknown connective '" + std::string(op) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Formula& phi, std::string& out, bool nested) {
  if (nested) out += '(';
  switch (phi.kind()) {
    case FormulaKind::kMember:
      out += "Mem " + std::to_string(phi.lhs_index()) + " " + std::to_string(phi.rhs_index());
      break;
    case FormulaKind::kEqual:
      out += "Eq " + std::to_string(phi.lhs_index()) + " " + std::to_string(phi.rhs_index());
      break;
    case FormulaKind::kNand:
      out += "Nand ";
      print_into(phi.left(), out, true);
      out += ' ';
      print_into(phi.right(), out, true);
      break;
    case FormulaKind::kForall:
      out += "All ";
      print_into(phi.body(), out, true);
      break;
  }
  if (nested) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_top(); }

std::string print(const Formula& phi) {
  std::string out;
  print_into(phi, out, false);
  return out;
}

Json to_json(const Renaming& f) {
  return Json{{"n", f.source()}, {"m", f.target()}, {"map", f.table()}};
}

Renaming renaming_from_json(const Json& j) {
  try {
    return Renaming(j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(),
                    j.at("map").get<std::vector<std::size_t>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad renaming JSON: ") + e.what());
  }
}

}  // namespace forcelab
