#include "lukstar/term_synth.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lukstar/subalgebra.hpp"

namespace lukstar {

namespace {

int step(const StarAlgebra& alg, UnOp op, int j) {
  switch (op) {
    case UnOp::STAR: return alg.star(j);
    case UnOp::PLUS: return alg.plus(j);
    case UnOp::NEG: return alg.inv(j);
  }
  return j;
}

Elem step(UnOp op, const Elem& x) {
  switch (op) {
    case UnOp::STAR: return star(x);
    case UnOp::PLUS: return plus(x);
    case UnOp::NEG: return neg(x);
  }
  return x;
}

char symbol(UnOp op) {
  switch (op) {
    case UnOp::STAR: return '*';
    case UnOp::PLUS: return '+';
    case UnOp::NEG: return '~';
  }
  return '?';
}

UnaryTerm repeat(UnOp op, int k) { return UnaryTerm{std::vector<UnOp>(k, op)}; }

}  // namespace

// ---------------------------------------------------------------------------
// UnaryTerm / DeltaTerm

Elem UnaryTerm::apply(const Elem& x) const {
  Elem r = x;
  for (UnOp op : ops) r = step(op, r);
  return r;
}

int UnaryTerm::apply(const StarAlgebra& alg, int j) const {
  for (UnOp op : ops) j = step(alg, op, j);
  return j;
}

Formula UnaryTerm::apply(const Formula& f) const {
  Formula r = f;
  for (UnOp op : ops) {
    switch (op) {
      case UnOp::STAR: r = star(r); break;
      case UnOp::PLUS: r = plus(r); break;
      case UnOp::NEG: r = neg(r); break;
    }
  }
  return r;
}

std::string UnaryTerm::to_string() const {
  if (ops.empty()) return "id";
  std::string s;
  for (auto it = ops.rbegin(); it != ops.rend();) {
    auto run = it;
    while (run != ops.rend() && *run == *it) ++run;
    const auto len = run - it;
    s += symbol(*it);
    if (len > 1) s += "^" + std::to_string(len);
    it = run;
  }
  return s;
}

UnaryTerm UnaryTerm::then(const UnaryTerm& outer) const {
  UnaryTerm r = *this;
  r.ops.insert(r.ops.end(), outer.ops.begin(), outer.ops.end());
  return r;
}

Elem DeltaTerm::apply(const Elem& x) const {
  return total ? Elem(x.den, x.den) : term.apply(x);
}

int DeltaTerm::apply(const StarAlgebra& alg, int j) const {
  if (!total) return term.apply(alg, j);
  const int d = term.apply(alg, j);
  return std::max(d, alg.inv(d));
}

Formula DeltaTerm::apply(const Formula& f) const {
  if (!total) return term.apply(f);
  Formula d = term.apply(f);
  return join(d, neg(d));
}

std::string DeltaTerm::to_string() const {
  if (!total) return term.to_string();
  const std::string d = term.to_string();
  return "(" + d + " | ~" + d + ")";
}

// ---------------------------------------------------------------------------
// Separation

bool is_separated(const StarAlgebra& alg, int a, int b) {
  if (a <= b) throw NotOrdered("separation needs a > b");
  return (alg.positive(a) && !alg.positive(b)) || b == 0 || a == alg.top();
}

bool is_separated(const Elem& a, const Elem& b) {
  LUKSTAR_EXPECT(a.den == b.den);
  return is_separated(StarAlgebra::lukasiewicz(Chain(a.den)), a.num, b.num);
}

UnaryTerm separating_term(const StarAlgebra& alg, int a, int b) {
  if (!is_separated(alg, a, b)) throw NotSeparated("pair is not separated");
  const int limit = alg.size();
  auto least = [&](UnOp op, int from, int goal) {
    int v = from;
    for (int k = 0; k <= limit; ++k) {
      if (v == goal) return k;
      v = step(alg, op, v);
    }
    throw NoTermFound("separating exponent not found");
  };
  UnaryTerm t;
  if (alg.positive(a) && !alg.positive(b)) {
    t = repeat(UnOp::STAR, 1).then(
        repeat(UnOp::PLUS, least(UnOp::PLUS, alg.star(a), alg.top())));
  } else if (b == 0) {
    t = repeat(UnOp::PLUS, least(UnOp::PLUS, a, alg.top()));
  } else {
    t = repeat(UnOp::STAR, least(UnOp::STAR, b, 0));
  }
  if (t.apply(alg, a) != alg.top() || t.apply(alg, b) != 0)
    throw NoTermFound("separating term does not separate");
  return t;
}

UnaryTerm separating_term(const Elem& a, const Elem& b) {
  LUKSTAR_EXPECT(a.den == b.den);
  return separating_term(StarAlgebra::lukasiewicz(Chain(a.den)), a.num, b.num);
}

// ---------------------------------------------------------------------------
// Delta synthesis

DeltaTerm synth_delta(const StarAlgebra& alg, int a,
                      const std::vector<int>* values, SynthTrace* trace) {
  LUKSTAR_EXPECT(0 <= a && a <= alg.top());
  const int m = alg.top();
  if (values) LUKSTAR_EXPECT(static_cast<int>(values->size()) == alg.size());
  if (a == 0) return DeltaTerm{true, repeat(UnOp::STAR, m)};
  if (a == m) return DeltaTerm{false, repeat(UnOp::STAR, m)};

  int x = a, y = a - 1;
  UnaryTerm acc;
  if (trace) trace->pairs.push_back({x, y});
  std::set<std::pair<int, int>> seen;

  while (!is_separated(alg, x, y)) {
    if (!seen.insert({x, y}).second)
      throw NoTermFound("separation procedure does not terminate");
    UnaryTerm run;
    if (!alg.positive(y) && x == alg.inv(x)) {
      // x is the negation fixpoint: one double separates.
      run.ops.push_back(UnOp::PLUS);
      x = alg.plus(x);
      y = alg.plus(y);
    } else {
      // Both positive: square. Both at most the fixpoint: double. The run
      // length is the largest that keeps the pair apart, cut short as soon
      // as the pair separates.
      const UnOp op = alg.positive(y) ? UnOp::STAR : UnOp::PLUS;
      while (true) {
        const int nx = step(alg, op, x), ny = step(alg, op, y);
        if (nx <= ny) break;
        if (values) {
          const int d0 = (*values)[x] - (*values)[y];
          const int d1 = (*values)[nx] - (*values)[ny];
          LUKSTAR_EXPECT(is_separated(alg, nx, ny) || d1 == 2 * d0);
        }
        run.ops.push_back(op);
        x = nx;
        y = ny;
        if (is_separated(alg, x, y)) break;
      }
    }
    acc = acc.then(run);
    if (trace) {
      trace->steps.push_back(run);
      trace->pairs.push_back({x, y});
    }
  }
  const UnaryTerm fin = separating_term(alg, x, y);
  if (trace) trace->finish = fin;
  return DeltaTerm{false, acc.then(fin)};
}

DeltaTerm synth_delta(const Chain& chain, const Elem& a, SynthTrace* trace) {
  LUKSTAR_EXPECT(chain.contains(a));
  std::vector<int> values(chain.size());
  for (int k = 0; k <= chain.n(); ++k) values[k] = k;
  return synth_delta(StarAlgebra::lukasiewicz(chain), a.num, &values, trace);
}

// ---------------------------------------------------------------------------
// Connectives

Connectives::Connectives(int n) : n_(n) {
  LUKSTAR_EXPECT(n >= 1);
  const Chain c(n);
  delta_.reserve(n + 1);
  for (int k = 0; k <= n; ++k) delta_.push_back(synth_delta(c, c.elem(k)));
}

const DeltaTerm& Connectives::delta_term(int k) const {
  LUKSTAR_EXPECT(0 <= k && k <= n_);
  return delta_[k];
}

Formula Connectives::delta(int k, const Formula& f) const {
  return delta_term(k).apply(f);
}

std::vector<Formula> Connectives::deltas(const Formula& f) const {
  std::vector<Formula> out;
  out.reserve(n_ + 1);
  for (int k = 0; k <= n_; ++k) out.push_back(delta(k, f));
  return out;
}

std::vector<Formula> Connectives::chis(const std::vector<Formula>& ds) const {
  LUKSTAR_EXPECT(static_cast<int>(ds.size()) == n_ + 1);
  std::vector<Formula> out;
  out.reserve(n_ + 1);
  for (int k = 0; k <= n_; ++k) {
    if (k == n_)
      out.push_back(ds[n_]);
    else if (k == 0)
      out.push_back(neg(ds[1]));
    else
      out.push_back(meet(ds[k], neg(ds[k + 1])));
  }
  return out;
}

Formula Connectives::chi(int k, const Formula& f) const {
  LUKSTAR_EXPECT(0 <= k && k <= n_);
  if (k == n_) return delta(n_, f);
  if (k == 0) return neg(delta(1, f));
  return meet(delta(k, f), neg(delta(k + 1, f)));
}

Formula Connectives::strong_neg(int i, const Formula& f) const {
  return neg(delta(i, f));
}

Formula Connectives::arrow(int i, const Formula& f, const Formula& g) const {
  return join(strong_neg(i, f), g);
}

Formula Connectives::iff(int i, const Formula& f, const Formula& g) const {
  return meet(arrow(i, f, g), arrow(i, g, f));
}

Formula Connectives::crisp_imp(const Formula& f, const Formula& g) const {
  const auto cx = chis(deltas(f));
  const auto dy = deltas(g);
  std::vector<Formula> terms;
  terms.reserve(n_ + 1);
  for (int k = 0; k <= n_; ++k) terms.push_back(meet(cx[k], dy[k]));
  return join_all(terms);
}

Formula Connectives::goedel_imp(const Formula& f, const Formula& g) const {
  return join(crisp_imp(f, g), g);
}

Formula Connectives::approx(const Formula& f, const Formula& g) const {
  return baaz(meet(goedel_imp(f, g), goedel_imp(g, f)));
}

Formula Connectives::luk_imp(const Formula& f, const Formula& g) const {
  if (!term_equivalent(n_)) throw NotTermEquivalent(in_pi(n_));
  const Chain c(n_);
  const auto cx = chis(deltas(f));
  const auto cy = chis(deltas(g));

  // t_{i,j}(x, y) with t(i/n, j/n) = min(1, 1 - i/n + j/n).
  auto t = [&](int i, int j) -> Formula {
    if (i == n_) return g;
    if (n_ == 4) {
      if (j == 0) return neg(f);
      if (i == 3 && j == 2) return f;
      if (i == 3 && j == 1) return star(f);
      if (i == 2 && j == 1) return neg(g);
      LUKSTAR_EXPECT(false);
    }
    return transfer_term(c, c.elem(i), c.elem(n_ - i + j)).apply(f);
  };

  std::vector<Formula> parts{crisp_imp(f, g)};
  for (int i = 1; i <= n_; ++i)
    for (int j = 0; j < i; ++j)
      parts.push_back(meet(meet(cx[i], cy[j]), t(i, j)));
  return join_all(parts);
}

// ---------------------------------------------------------------------------

Formula synth_chi(const Chain& chain, const Elem& a) {
  LUKSTAR_EXPECT(chain.contains(a));
  return Connectives(chain.n()).chi(a.num, Formula::var(0));
}

Formula synth_crisp_imp(const Chain& chain) {
  return Connectives(chain.n()).crisp_imp(Formula::var(0), Formula::var(1));
}

Formula synth_goedel_imp(const Chain& chain) {
  return Connectives(chain.n()).goedel_imp(Formula::var(0), Formula::var(1));
}

Formula synth_luk_imp(const Chain& chain) {
  return Connectives(chain.n()).luk_imp(Formula::var(0), Formula::var(1));
}

UnaryTerm transfer_term(const Chain& chain, const Elem& a, const Elem& b) {
  LUKSTAR_EXPECT(chain.contains(a) && chain.contains(b));
  if (a.num == 0 || a.num == chain.n())
    throw BoundaryElement("transfer term needs a source other than 0 and 1");
  if (!is_strictly_simple(chain))
    throw NotStrictlySimple("L*_" + std::to_string(chain.size()) +
                            " has a proper non-trivial subalgebra");

  const StarAlgebra alg = StarAlgebra::lukasiewicz(chain);
  std::vector<int> parent(chain.size(), -2);
  std::vector<UnOp> via(chain.size());
  std::deque<int> queue{a.num};
  parent[a.num] = -1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (cur == b.num) break;
    for (UnOp op : {UnOp::STAR, UnOp::PLUS, UnOp::NEG}) {
      const int nx = step(alg, op, cur);
      if (parent[nx] != -2) continue;
      parent[nx] = cur;
      via[nx] = op;
      queue.push_back(nx);
    }
  }
  // Strict simplicity guarantees reachability.
  LUKSTAR_EXPECT(parent[b.num] != -2);
  UnaryTerm t;
  for (int v = b.num; parent[v] != -1; v = parent[v]) t.ops.push_back(via[v]);
  std::reverse(t.ops.begin(), t.ops.end());
  LUKSTAR_EXPECT(t.apply(a) == b);
  return t;
}

}  // namespace lukstar
