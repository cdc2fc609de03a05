#pragma once

// Formulas over the primitive signature {join, neg, star, 0, 1}. Nodes are
// immutable and shared, so macro expansions that reuse a subformula stay a
// DAG rather than blowing up into a tree.

#include <memory>
#include <string>
#include <vector>

namespace lukstar {

enum class NodeKind : unsigned char { Var, Zero, One, Neg, Star, Join };

class Formula {
 public:
  struct Node {
    NodeKind kind;
    int var = -1;
    std::shared_ptr<const Node> lhs, rhs;
  };

  static Formula var(int index);
  static Formula zero();
  static Formula one();

  NodeKind kind() const noexcept { return node_->kind; }
  int var_index() const noexcept { return node_->var; }
  Formula child() const { return Formula(node_->lhs); }
  Formula left() const { return Formula(node_->lhs); }
  Formula right() const { return Formula(node_->rhs); }

  /// 1 + the largest variable index, 0 if closed.
  int num_vars() const;
  /// Number of distinct nodes in the DAG.
  std::size_t dag_size() const;

  /// Primitive syntax; derived connectives appear expanded.
  std::string to_string() const;

  const Node* id() const noexcept { return node_.get(); }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  friend Formula neg(const Formula&);
  friend Formula star(const Formula&);
  friend Formula join(const Formula&, const Formula&);
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Formula neg(const Formula& f);
Formula star(const Formula& f);
Formula join(const Formula& f, const Formula& g);

// Plain abbreviations that need no chain parameter.
Formula meet(const Formula& f, const Formula& g);  // ~(~f | ~g)
Formula plus(const Formula& f);                    // ~*~f
Formula join_all(const std::vector<Formula>& fs);  // 0 when empty
Formula meet_all(const std::vector<Formula>& fs);  // 1 when empty

/// Replace variable `index` by g everywhere.
Formula substitute(const Formula& f, int index, const Formula& g);

}  // namespace lukstar
