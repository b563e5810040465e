#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "lcomplex/intmath.hpp"

namespace lcx {

/// Binary expression over a single literal. The literal's value is not
/// stored in the tree; evaluation takes it as a parameter so one tree can be
/// read over l = 1 and again over l = 2.
///
/// Trees are immutable and share structure, so copies are cheap and
/// concurrent reads need no synchronization.
class Expr {
 public:
  enum class Kind : unsigned char { Leaf, Add, Mul };

  Expr() = default;  // a Leaf

  static Expr leaf() { return Expr{}; }
  static Expr add(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);

  Kind kind() const noexcept;
  bool is_leaf() const noexcept { return !node_; }

  // Precondition: !is_leaf().
  const Expr& left() const noexcept;
  const Expr& right() const noexcept;

  std::size_t leaf_count() const noexcept;

  friend bool operator==(const Expr& a, const Expr& b) noexcept;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind;
  std::size_t leaves;
  Expr lhs;
  Expr rhs;
};

inline Expr::Kind Expr::kind() const noexcept { return node_ ? node_->kind : Kind::Leaf; }
inline const Expr& Expr::left() const noexcept { return node_->lhs; }
inline const Expr& Expr::right() const noexcept { return node_->rhs; }
inline std::size_t Expr::leaf_count() const noexcept { return node_ ? node_->leaves : 1; }

inline std::size_t leaf_count(const Expr& t) noexcept { return t.leaf_count(); }

/// Value of t with every leaf equal to l. Throws Error(Overflow) instead of
/// wrapping when an intermediate value leaves the u64 range.
u64 evaluate(const Expr& t, u64 l);

/// l + l + ... + l with k leaves, left-associated. k >= 1.
Expr repeated_sum(unsigned k);

/// l * l * ... * l with k leaves, left-associated. k >= 1.
Expr repeated_product(unsigned k);

/// Rewrites every flattened sum so that it holds at most three bare leaves.
/// Each group of four leaves becomes (l+l)*(l+l). The rebuilt sum lists the
/// non-leaf summands in their original order, then the inserted products,
/// then the remaining leaves, left-associated. Value over l = 1 and leaf
/// count are preserved.
Expr normalize_ones_runs(const Expr& t);

struct MappedExpr {
  Expr tree;
  u64 value;
};

/// Reinterprets t (read over from_l) with leaf literal to_l and evaluates it.
/// The tree itself is unchanged; only the literal moves.
MappedExpr map_leaves(const Expr& t, u64 from_l, u64 to_l);

/// Fully parenthesized infix, e.g. "((2*2)*2)+2". Only the root is left
/// without parentheses.
std::string to_string(const Expr& t, u64 l);

/// Inverse of to_string. Every literal must equal l. Throws Error(Parse).
Expr parse_expr(std::string_view text, u64 l);

/// True when some flattened sum in t has four or more leaf summands.
bool has_long_ones_run(const Expr& t);

}  // namespace lcx
