#include "lukstar/semantics.hpp"

#include <algorithm>
#include <unordered_map>

namespace lukstar {

namespace {

template <class Leaf, class Un, class Bin>
auto fold(const Formula& f, Leaf leaf, Un un, Bin bin) {
  using R = decltype(leaf(f));
  std::unordered_map<const Formula::Node*, R> memo;
  auto go = [&](auto& self, const Formula& g) -> R {
    auto it = memo.find(g.id());
    if (it != memo.end()) return it->second;
    R r;
    switch (g.kind()) {
      case NodeKind::Var:
      case NodeKind::Zero:
      case NodeKind::One: r = leaf(g); break;
      case NodeKind::Neg:
      case NodeKind::Star: r = un(g.kind(), self(self, g.child())); break;
      case NodeKind::Join:
        r = bin(self(self, g.left()), self(self, g.right()));
        break;
    }
    memo.emplace(g.id(), r);
    return r;
  };
  return go(go, f);
}

std::uint64_t checked_total(int base, int vars, std::uint64_t budget) {
  std::uint64_t t = 1;
  for (int k = 0; k < vars; ++k) {
    t *= static_cast<std::uint64_t>(base);
    if (t > budget)
      throw BudgetExceeded(std::to_string(base) + "^" + std::to_string(vars) +
                           " valuations exceed the budget of " +
                           std::to_string(budget));
  }
  return t;
}

}  // namespace

Elem eval(const Formula& f, const Chain& chain, const Valuation& v) {
  for (const Elem& e : v) LUKSTAR_EXPECT(chain.contains(e));
  const int r = fold(
      f,
      [&](const Formula& g) -> int {
        switch (g.kind()) {
          case NodeKind::Zero: return 0;
          case NodeKind::One: return chain.n();
          default:
            if (g.var_index() >= static_cast<int>(v.size()))
              throw UnboundVariable("p" + std::to_string(g.var_index()) +
                                    " has no value");
            return v[g.var_index()].num;
        }
      },
      [&](NodeKind k, int x) {
        return k == NodeKind::Neg ? chain.n() - x : std::max(0, 2 * x - chain.n());
      },
      [](int x, int y) { return std::max(x, y); });
  return chain.elem(r);
}

int eval(const Formula& f, const StarAlgebra& alg, const std::vector<int>& v) {
  return fold(
      f,
      [&](const Formula& g) -> int {
        switch (g.kind()) {
          case NodeKind::Zero: return 0;
          case NodeKind::One: return alg.top();
          default:
            if (g.var_index() >= static_cast<int>(v.size()))
              throw UnboundVariable("p" + std::to_string(g.var_index()) +
                                    " has no value");
            return v[g.var_index()];
        }
      },
      [&](NodeKind k, int x) {
        return k == NodeKind::Neg ? alg.inv(x) : alg.star(x);
      },
      [](int x, int y) { return std::max(x, y); });
}

// ---------------------------------------------------------------------------

BatchEvaluator::BatchEvaluator(const StarAlgebra& alg,
                               const std::vector<Formula>& roots, int vars)
    : alg_(alg), vars_(vars) {
  LUKSTAR_EXPECT(alg.size() <= 65536);
  for (int k = 0; k < vars; ++k) total_ *= static_cast<std::uint64_t>(alg.size());

  // Topological order over the shared DAG of all roots.
  std::unordered_map<const Formula::Node*, int> slot;
  for (const Formula& r : roots) {
    const int s = fold(
        r,
        [&](const Formula& g) -> int {
          auto it = slot.find(g.id());
          if (it != slot.end()) return it->second;
          Instr in{g.kind()};
          if (g.kind() == NodeKind::Var) {
            if (g.var_index() >= vars)
              throw UnboundVariable("p" + std::to_string(g.var_index()) +
                                    " has no value");
            in.a = g.var_index();
          }
          code_.push_back(in);
          return slot[g.id()] = static_cast<int>(code_.size()) - 1;
        },
        [&](NodeKind k, int x) {
          code_.push_back(Instr{k, x});
          return static_cast<int>(code_.size()) - 1;
        },
        [&](int x, int y) {
          code_.push_back(Instr{NodeKind::Join, x, y});
          return static_cast<int>(code_.size()) - 1;
        });
    root_slot_.push_back(s);
  }
  cells_.assign(code_.size() * kChunk, 0);
}

int BatchEvaluator::digit(std::uint64_t index, int var) const {
  // p0 is the most significant digit.
  const auto base = static_cast<std::uint64_t>(alg_.size());
  for (int k = vars_ - 1; k > var; --k) index /= base;
  return static_cast<int>(index % base);
}

void BatchEvaluator::run(std::uint64_t first, std::size_t count) {
  LUKSTAR_EXPECT(count <= kChunk && first + count <= total_);
  const auto& star = alg_.star_table();
  const auto top = static_cast<std::uint16_t>(alg_.top());
  for (std::size_t pc = 0; pc < code_.size(); ++pc) {
    const Instr& in = code_[pc];
    std::uint16_t* out = &cells_[pc * kChunk];
    switch (in.kind) {
      case NodeKind::Var:
        for (std::size_t t = 0; t < count; ++t)
          out[t] = static_cast<std::uint16_t>(digit(first + t, in.a));
        break;
      case NodeKind::Zero: std::fill(out, out + count, 0); break;
      case NodeKind::One: std::fill(out, out + count, top); break;
      case NodeKind::Neg: {
        const std::uint16_t* x = &cells_[in.a * kChunk];
        for (std::size_t t = 0; t < count; ++t) out[t] = top - x[t];
        break;
      }
      case NodeKind::Star: {
        const std::uint16_t* x = &cells_[in.a * kChunk];
        for (std::size_t t = 0; t < count; ++t)
          out[t] = static_cast<std::uint16_t>(star[x[t]]);
        break;
      }
      case NodeKind::Join: {
        const std::uint16_t* x = &cells_[in.a * kChunk];
        const std::uint16_t* y = &cells_[in.b * kChunk];
        for (std::size_t t = 0; t < count; ++t) out[t] = std::max(x[t], y[t]);
        break;
      }
    }
  }
}

const std::uint16_t* BatchEvaluator::root(std::size_t r) const {
  return &cells_[root_slot_.at(r) * kChunk];
}

// ---------------------------------------------------------------------------

Verdict consequence(const Matrix& m, const std::vector<Formula>& premises,
                    const Formula& f, std::uint64_t budget) {
  int vars = f.num_vars();
  for (const Formula& p : premises) vars = std::max(vars, p.num_vars());
  checked_total(m.n + 1, vars, budget);

  const StarAlgebra alg = StarAlgebra::lukasiewicz(Chain(m.n));
  std::vector<Formula> roots(premises);
  roots.push_back(f);
  BatchEvaluator ev(alg, roots, vars);

  Verdict v;
  v.valuations = ev.total();
  for (std::uint64_t first = 0; first < ev.total(); first += BatchEvaluator::kChunk) {
    const auto count = static_cast<std::size_t>(
        std::min<std::uint64_t>(BatchEvaluator::kChunk, ev.total() - first));
    ev.run(first, count);
    const std::uint16_t* goal = ev.root(premises.size());
    for (std::size_t t = 0; t < count; ++t) {
      if (m.designated(goal[t])) continue;
      bool all = true;
      for (std::size_t p = 0; p < premises.size() && all; ++p)
        all = m.designated(ev.root(p)[t]);
      if (!all) continue;
      v.holds = false;
      Valuation cm;
      for (int k = 0; k < vars; ++k) cm.push_back(Elem(ev.digit(first + t, k), m.n));
      v.countermodel = std::move(cm);
      return v;
    }
  }
  return v;
}

Verdict is_valid(const Matrix& m, const Formula& f, std::uint64_t budget) {
  return consequence(m, {}, f, budget);
}

}  // namespace lukstar
