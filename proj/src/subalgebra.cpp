#include "lukstar/subalgebra.hpp"

#include <algorithm>
#include <set>

namespace lukstar {

PSequence run_p(const Chain& chain, const Elem& a) {
  LUKSTAR_EXPECT(chain.contains(a));
  PRun r = run_p(StarAlgebra::lukasiewicz(chain), a.num);
  PSequence p{a, {}, r.loop_target};
  for (int k : r.seq) p.seq.push_back(chain.elem(k));
  LUKSTAR_EXPECT(static_cast<int>(p.seq.size()) <= std::max(1, chain.n() - 1));
  return p;
}

Subalgebra::Subalgebra(const Chain& chain, std::vector<Elem> elems)
    : chain_(chain), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  LUKSTAR_EXPECT(contains(chain.zero()) && contains(chain.one()));
  for (const Elem& x : elems_) {
    LUKSTAR_EXPECT(chain.contains(x));
    LUKSTAR_EXPECT(contains(neg(x)) && contains(star(x)));
  }
}

bool Subalgebra::contains(const Elem& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::vector<int> Subalgebra::numerators() const {
  std::vector<int> out;
  out.reserve(elems_.size());
  for (const Elem& x : elems_) out.push_back(x.num);
  return out;
}

StarAlgebra Subalgebra::as_star_algebra() const {
  return restrict_to(StarAlgebra::lukasiewicz(chain_), numerators());
}

namespace {

Subalgebra from_indices(const Chain& chain, const std::vector<int>& idx) {
  std::vector<Elem> e;
  e.reserve(idx.size());
  for (int k : idx) e.push_back(chain.elem(k));
  return Subalgebra(chain, std::move(e));
}

}  // namespace

Subalgebra generated(const Chain& chain, const Elem& a) {
  LUKSTAR_EXPECT(chain.contains(a));
  return from_indices(chain,
                      generated_indices(StarAlgebra::lukasiewicz(chain), a.num));
}

Subalgebra generated_by_set(const Chain& chain, const std::vector<Elem>& xs) {
  // The signature is unary apart from join, which every subset of a chain is
  // closed under, so the closure is the union of the one-generated closures.
  const StarAlgebra alg = StarAlgebra::lukasiewicz(chain);
  std::set<int> all{0, chain.n()};
  for (const Elem& x : xs) {
    LUKSTAR_EXPECT(chain.contains(x));
    for (int k : generated_indices(alg, x.num)) all.insert(k);
  }
  return from_indices(chain, {all.begin(), all.end()});
}

std::vector<Subalgebra> all_subalgebras(const Chain& chain, int bound) {
  if (chain.n() > bound)
    throw BoundExceeded("subalgebra enumeration limited to n <= " +
                        std::to_string(bound));
  const StarAlgebra alg = StarAlgebra::lukasiewicz(chain);
  const int sz = chain.size();

  // Distinct one-generated subalgebras as membership masks.
  std::set<std::vector<char>> atoms;
  for (int k = 1; k < chain.n(); ++k) {
    std::vector<char> m(sz, 0);
    for (int j : generated_indices(alg, k)) m[j] = 1;
    atoms.insert(std::move(m));
  }

  // Every subalgebra is a union of one-generated ones; close under union.
  std::vector<char> trivial(sz, 0);
  trivial[0] = trivial[sz - 1] = 1;
  std::set<std::vector<char>> found{trivial};
  std::vector<std::vector<char>> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<std::vector<char>> next;
    for (const auto& s : frontier) {
      for (const auto& a : atoms) {
        std::vector<char> u(s);
        for (int j = 0; j < sz; ++j) u[j] |= a[j];
        if (found.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> keys;
  for (const auto& m : found) {
    std::vector<int> idx;
    for (int j = 0; j < sz; ++j)
      if (m[j]) idx.push_back(j);
    keys.push_back(std::move(idx));
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subalgebra> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(from_indices(chain, k));
  return out;
}

bool is_strictly_simple(const Chain& chain) {
  const StarAlgebra alg = StarAlgebra::lukasiewicz(chain);
  // a and its negation generate the same subalgebra, so positives suffice.
  for (int k = 1; k < chain.n(); ++k) {
    if (!alg.positive(k) && alg.inv(k) != k) continue;
    if (static_cast<int>(generated_indices(alg, k).size()) != chain.size())
      return false;
  }
  return true;
}

bool is_strictly_simple_sub(const Subalgebra& s) {
  const StarAlgebra alg = s.as_star_algebra();
  for (int j = 1; j < alg.top(); ++j) {
    // The negation fixpoint counts: {0, 1/2, 1} is a subalgebra of its own.
    if (!alg.positive(j) && alg.inv(j) != j) continue;
    if (static_cast<int>(generated_indices(alg, j).size()) != alg.size())
      return false;
  }
  return true;
}

}  // namespace lukstar
