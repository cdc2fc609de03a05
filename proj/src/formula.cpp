#include "lukstar/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "lukstar/errors.hpp"

namespace lukstar {

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make(NodeKind k, int var, NodePtr l, NodePtr r) {
  return std::make_shared<const Formula::Node>(
      Formula::Node{k, var, std::move(l), std::move(r)});
}

const NodePtr& zero_node() {
  static const NodePtr z = make(NodeKind::Zero, -1, nullptr, nullptr);
  return z;
}

const NodePtr& one_node() {
  static const NodePtr o = make(NodeKind::One, -1, nullptr, nullptr);
  return o;
}

// Post-order over distinct nodes.
void visit(const Formula::Node* root,
           const std::function<void(const Formula::Node*)>& fn) {
  std::unordered_set<const Formula::Node*> seen;
  std::vector<std::pair<const Formula::Node*, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      fn(n);
      continue;
    }
    if (!seen.insert(n).second) continue;
    stack.push_back({n, true});
    if (n->rhs) stack.push_back({n->rhs.get(), false});
    if (n->lhs) stack.push_back({n->lhs.get(), false});
  }
}

}  // namespace

Formula Formula::var(int index) {
  LUKSTAR_EXPECT(index >= 0);
  return Formula(make(NodeKind::Var, index, nullptr, nullptr));
}

Formula Formula::zero() { return Formula(zero_node()); }
Formula Formula::one() { return Formula(one_node()); }

Formula neg(const Formula& f) {
  return Formula(make(NodeKind::Neg, -1, f.node_, nullptr));
}

Formula star(const Formula& f) {
  return Formula(make(NodeKind::Star, -1, f.node_, nullptr));
}

Formula join(const Formula& f, const Formula& g) {
  return Formula(make(NodeKind::Join, -1, f.node_, g.node_));
}

Formula meet(const Formula& f, const Formula& g) {
  return neg(join(neg(f), neg(g)));
}

Formula plus(const Formula& f) { return neg(star(neg(f))); }

Formula join_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::zero();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = join(acc, fs[k]);
  return acc;
}

Formula meet_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::one();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = meet(acc, fs[k]);
  return acc;
}

int Formula::num_vars() const {
  int m = 0;
  visit(node_.get(), [&](const Node* n) {
    if (n->kind == NodeKind::Var) m = std::max(m, n->var + 1);
  });
  return m;
}

std::size_t Formula::dag_size() const {
  std::size_t c = 0;
  visit(node_.get(), [&](const Node*) { ++c; });
  return c;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case NodeKind::Var: return "p" + std::to_string(var_index());
    case NodeKind::Zero: return "0";
    case NodeKind::One: return "1";
    case NodeKind::Neg: return "~" + child().to_string();
    case NodeKind::Star: return "*" + child().to_string();
    case NodeKind::Join:
      return "(" + left().to_string() + " | " + right().to_string() + ")";
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  std::vector<std::pair<const Formula::Node*, const Formula::Node*>> work{
      {a.node_.get(), b.node_.get()}};
  std::set<std::pair<const Formula::Node*, const Formula::Node*>> done;
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind || x->var != y->var) return false;
    if (!done.insert({x, y}).second) continue;
    if (x->lhs) work.push_back({x->lhs.get(), y->lhs.get()});
    if (x->rhs) work.push_back({x->rhs.get(), y->rhs.get()});
  }
  return true;
}

Formula substitute(const Formula& f, int index, const Formula& g) {
  std::unordered_map<const Formula::Node*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& h) -> Formula {
    auto it = memo.find(h.id());
    if (it != memo.end()) return it->second;
    Formula r = h;
    switch (h.kind()) {
      case NodeKind::Var:
        if (h.var_index() == index) r = g;
        break;
      case NodeKind::Zero:
      case NodeKind::One: break;
      case NodeKind::Neg: r = neg(go(h.child())); break;
      case NodeKind::Star: r = star(go(h.child())); break;
      case NodeKind::Join: r = join(go(h.left()), go(h.right())); break;
    }
    memo.emplace(h.id(), r);
    return r;
  };
  return go(f);
}

}  // namespace lukstar
