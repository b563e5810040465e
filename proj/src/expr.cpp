#include "lcomplex/expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "lcomplex/error.hpp"

namespace lcx {

Expr Expr::add(Expr lhs, Expr rhs) {
  const std::size_t n = lhs.leaf_count() + rhs.leaf_count();
  return Expr(std::make_shared<const Node>(Node{Kind::Add, n, std::move(lhs), std::move(rhs)}));
}

Expr Expr::mul(Expr lhs, Expr rhs) {
  const std::size_t n = lhs.leaf_count() + rhs.leaf_count();
  return Expr(std::make_shared<const Node>(Node{Kind::Mul, n, std::move(lhs), std::move(rhs)}));
}

bool operator==(const Expr& a, const Expr& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.leaf_count() != b.leaf_count()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

u64 evaluate(const Expr& t, u64 l) {
  if (t.is_leaf()) return l;
  const u64 a = evaluate(t.left(), l);
  const u64 b = evaluate(t.right(), l);
  auto r = t.kind() == Expr::Kind::Add ? checked_add(a, b) : checked_mul(a, b);
  if (!r) {
    throw Error(ErrorCode::Overflow, "expression value exceeds 64 bits");
  }
  return *r;
}

Expr repeated_sum(unsigned k) {
  Expr t;
  for (unsigned i = 1; i < k; ++i) t = Expr::add(t, Expr::leaf());
  return t;
}

Expr repeated_product(unsigned k) {
  Expr t;
  for (unsigned i = 1; i < k; ++i) t = Expr::mul(t, Expr::leaf());
  return t;
}

namespace {

void collect_summands(const Expr& t, std::vector<Expr>& out) {
  if (t.kind() == Expr::Kind::Add) {
    collect_summands(t.left(), out);
    collect_summands(t.right(), out);
  } else {
    out.push_back(t);
  }
}

bool scan_long_runs(const Expr& t, bool parent_is_add) {
  if (t.is_leaf()) return false;
  if (t.kind() == Expr::Kind::Add && !parent_is_add) {
    std::vector<Expr> summands;
    collect_summands(t, summands);
    std::size_t ones = 0;
    for (const auto& s : summands) {
      if (s.is_leaf()) ++ones;
      else if (scan_long_runs(s, false)) return true;
    }
    return ones >= 4;
  }
  return scan_long_runs(t.left(), false) || scan_long_runs(t.right(), false);
}

}  // namespace

Expr normalize_ones_runs(const Expr& t) {
  switch (t.kind()) {
    case Expr::Kind::Leaf:
      return t;
    case Expr::Kind::Mul:
      return Expr::mul(normalize_ones_runs(t.left()), normalize_ones_runs(t.right()));
    case Expr::Kind::Add:
      break;
  }

  std::vector<Expr> summands;
  collect_summands(t, summands);

  std::vector<Expr> rebuilt;
  rebuilt.reserve(summands.size());
  std::size_t ones = 0;
  for (const auto& s : summands) {
    if (s.is_leaf()) ++ones;
    else rebuilt.push_back(normalize_ones_runs(s));
  }
  const Expr two = Expr::add(Expr::leaf(), Expr::leaf());
  const Expr four = Expr::mul(two, two);
  for (; ones >= 4; ones -= 4) rebuilt.push_back(four);
  for (; ones > 0; --ones) rebuilt.push_back(Expr::leaf());

  Expr acc = rebuilt.front();
  for (std::size_t i = 1; i < rebuilt.size(); ++i) acc = Expr::add(acc, rebuilt[i]);
  return acc;
}

bool has_long_ones_run(const Expr& t) { return scan_long_runs(t, false); }

MappedExpr map_leaves(const Expr& t, u64 /*from_l*/, u64 to_l) {
  return MappedExpr{t, evaluate(t, to_l)};
}

namespace {

void write_expr(const Expr& t, const std::string& lit, std::string& out, bool wrap) {
  if (t.is_leaf()) {
    out += lit;
    return;
  }
  if (wrap) out += '(';
  write_expr(t.left(), lit, out, true);
  out += t.kind() == Expr::Kind::Add ? '+' : '*';
  write_expr(t.right(), lit, out, true);
  if (wrap) out += ')';
}

class Parser {
 public:
  Parser(std::string_view text, u64 l) : text_(text), l_(l) {}

  Expr parse() {
    Expr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  // expression := operand [('+'|'*') operand]
  Expr expression() {
    Expr lhs = operand();
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '*')) {
      const char op = text_[pos_++];
      Expr rhs = operand();
      return op == '+' ? Expr::add(std::move(lhs), std::move(rhs))
                       : Expr::mul(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr operand() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Expr inner = expression();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    u64 value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected literal");
    if (value != l_) fail("literal " + std::to_string(value) + " differs from l=" + std::to_string(l_));
    pos_ += static_cast<std::size_t>(ptr - first);
    return Expr::leaf();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  u64 l_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Expr& t, u64 l) {
  std::string out;
  write_expr(t, std::to_string(l), out, false);
  return out;
}

Expr parse_expr(std::string_view text, u64 l) { return Parser(text, l).parse(); }

}  // namespace lcx
