#include "lukstar/igchain.hpp"

#include <algorithm>
#include <map>

namespace lukstar {

namespace {

// Goedel operations on a chain with indices 0..m.
struct Goedel {
  int m;
  int imp(int x, int y) const { return x <= y ? m : y; }
  int ng(int x) const { return x == 0 ? m : 0; }
  int inv(int x) const { return m - x; }
  int delta(int x) const { return ng(inv(x)); }
  int eqv(int x, int y) const { return std::min(imp(x, y), imp(y, x)); }
};

void require_valid(const AbstractIGChain& c) {
  const IGReport r = validate_igstar(c);
  if (!r.ok())
    throw NotValidated("not an IG-star chain: " + r.violations.front().item +
                       " fails");
}

}  // namespace

IGReport validate_igstar(const AbstractIGChain& c) {
  const Goedel g{c.top()};
  const int m = c.top();
  IGReport r;
  auto check = [&](const char* item, bool ok, std::vector<int> elems) {
    if (!ok) r.violations.push_back({item, std::move(elems)});
  };
  auto s = [&](int x) { return c.star(x); };
  // D(~x => x): x is at least its negation.
  auto upper = [&](int x) { return g.delta(g.imp(g.inv(x), x)); };

  for (int x = 0; x <= m; ++x) {
    check("star1", g.delta(std::max(x, g.inv(x))) == g.delta(g.eqv(x, s(x))), {x});
    check("star2", g.delta(g.imp(x, g.inv(x))) == g.ng(s(x)), {x});
    check("star3",
          std::min(g.inv(g.delta(g.imp(x, g.inv(x)))), g.inv(g.delta(x))) <=
              g.inv(g.delta(g.imp(x, s(x)))),
          {x});
    check("IG1", g.inv(g.inv(x)) == x, {x});
    check("IG2", g.ng(x) <= g.inv(x), {x});
    check("IG4", std::max(g.delta(x), g.ng(g.delta(x))) == m, {x});
    for (int y = 0; y <= m; ++y) {
      check("star4",
            std::min({upper(x), upper(y), g.inv(g.delta(g.imp(x, y)))}) <=
                g.inv(g.delta(g.imp(s(x), s(y)))),
            {x, y});
      check("star5",
            std::min({upper(x), upper(y), g.delta(g.eqv(s(x), s(y)))}) <=
                g.delta(g.eqv(x, y)),
            {x, y});
      check("IG3", g.delta(g.imp(x, y)) == g.delta(g.imp(g.inv(y), g.inv(x))), {x, y});
      check("IG5", g.delta(std::max(x, y)) <= std::max(g.delta(x), g.delta(y)), {x, y});
      check("IG6", g.delta(g.imp(x, y)) <= g.imp(g.delta(x), g.delta(y)), {x, y});
    }
  }
  return r;
}

std::vector<Block> simple_partition(const AbstractIGChain& c) {
  require_valid(c);
  std::vector<std::vector<int>> cores;
  for (int x = 1; x < c.top(); ++x) {
    const PRun r = run_p(c, x);
    std::vector<int> core = generated_indices(c, r.seq[r.loop_target - 1]);
    if (std::find(cores.begin(), cores.end(), core) == cores.end())
      cores.push_back(std::move(core));
  }
  std::sort(cores.begin(), cores.end(),
            [](const auto& a, const auto& b) { return a[1] < b[1]; });

  std::vector<Block> out;
  for (auto& core : cores) {
    Block b{std::move(core), {}};
    for (int x = 1; x < c.top(); ++x) {
      const std::vector<int> gen = generated_indices(c, x);
      if (std::includes(gen.begin(), gen.end(), b.core.begin(), b.core.end()))
        b.attracted.push_back(x);
    }
    out.push_back(std::move(b));
  }
  return out;
}

bool verify_embedding(const AbstractIGChain& c, const Embedding& e) {
  const auto& v = e.numerators;
  if (static_cast<int>(v.size()) != c.size() || e.k < 1) return false;
  if (v.front() != 0 || v.back() != e.k) return false;
  for (int j = 0; j <= c.top(); ++j) {
    if (j > 0 && v[j - 1] >= v[j]) return false;
    const BigInt sq = 2 * v[j] - e.k;
    if (v[c.star(j)] != (sq > 0 ? sq : BigInt(0))) return false;
    if (v[c.inv(j)] != e.k - v[j]) return false;
  }
  return true;
}

std::string to_string(Representability::Reason r) {
  switch (r) {
    case Representability::Reason::None: return "none";
    case Representability::Reason::PeriodicSkeleton: return "periodic_skeleton";
    case Representability::Reason::SharedSkeleton: return "shared_skeleton";
    case Representability::Reason::EmbeddingFailed: return "embedding_failed";
  }
  return {};
}

Representability is_representable(const AbstractIGChain& c) {
  using Reason = Representability::Reason;
  const std::vector<Block> blocks = simple_partition(c);
  Representability out;

  // Condition 1: no periodic skeleton inside a strictly simple core.
  // Coatoms first, so witnesses are the skeletons of the coatoms.
  for (const Block& b : blocks)
    for (int x : std::vector<int>(b.core.rbegin(), b.core.rend()))
      if (c.interior(x) && c.positive(x)) {
        SkSeq s = skeleton(c, x);
        if (is_periodic(s)) {
          out.reason = Reason::PeriodicSkeleton;
          out.witness = std::move(s);
          out.witness_elems = {x};
          return out;
        }
      }

  // Condition 2: distinct cores never share a skeleton.
  std::map<SkSeq, std::pair<std::size_t, int>> seen;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (int x : std::vector<int>(blocks[k].core.rbegin(), blocks[k].core.rend()))
      if (c.interior(x) && c.positive(x)) {
        SkSeq s = skeleton(c, x);
        auto [it, fresh] = seen.emplace(s, std::pair{k, x});
        if (!fresh && it->second.first != k) {
          out.reason = Reason::SharedSkeleton;
          out.witness = std::move(s);
          out.witness_elems = {it->second.second, x};
          return out;
        }
      }

  // Embedding: each core goes to the fixed point of its coatom's skeleton,
  // the rest of its block to preimages along procedure P.
  std::vector<std::optional<Rational>> lam(c.size());
  lam[0] = Rational(0);
  lam[c.top()] = Rational(1);
  bool clash = false;
  auto assign = [&](int j, const Rational& v) {
    if (lam[j]) {
      clash = clash || *lam[j] != v;
      return false;
    }
    lam[j] = v;
    return true;
  };
  for (const Block& b : blocks) {
    const int coatom = b.core[b.core.size() - 2];
    const Rational start = c.positive(coatom)
                               ? fixed_point(skeleton(c, coatom))
                               : Rational(1, 2);  // core {0, ~x = x, 1}
    std::vector<int> work;
    if (assign(coatom, start)) work.push_back(coatom);
    while (!work.empty()) {
      const int x = work.back();
      work.pop_back();
      if (assign(c.star(x), star(*lam[x]))) work.push_back(c.star(x));
      if (assign(c.inv(x), inv(*lam[x]))) work.push_back(c.inv(x));
    }
  }
  for (int x = 1; x < c.top(); ++x) {
    if (lam[x] || !c.positive(x)) continue;
    const PRun r = run_p(c, x);
    SkSeq path;
    std::size_t j = 0;
    for (; j < r.seq.size() && !lam[r.seq[j]]; ++j)
      path.push_back(r.starred[j] ? Sym::STAR : Sym::INV);
    if (j == r.seq.size() || *lam[r.seq[j]] <= 0 || *lam[r.seq[j]] >= 1) {
      clash = true;
      break;
    }
    // Every element on the path so far is unassigned; fill them all.
    Rational v = solve_preimage(path, *lam[r.seq[j]]);
    for (std::size_t i = 0; i < j; ++i) {
      assign(r.seq[i], v);
      assign(c.inv(r.seq[i]), inv(v));
      v = path[i] == Sym::STAR ? star(v) : inv(v);
    }
  }
  for (int x = 0; x <= c.top() && !clash; ++x)
    if (!lam[x]) {
      if (lam[c.inv(x)])
        lam[x] = inv(*lam[c.inv(x)]);
      else
        clash = true;
    }

  if (!clash) {
    Embedding e{1, {}};
    for (const auto& v : lam) e.k = boost::multiprecision::lcm(e.k, denominator(*v));
    for (const auto& v : lam) e.numerators.push_back(numerator(*v) * (e.k / denominator(*v)));
    if (verify_embedding(c, e)) {
      out.representable = true;
      out.embedding = std::move(e);
      return out;
    }
  }
  out.reason = Reason::EmbeddingFailed;
  return out;
}

REquationReport check_r_equations(const AbstractIGChain& c, int n,
                                  std::size_t keep) {
  require_valid(c);
  LUKSTAR_EXPECT(n >= 1);
  const int size = c.size();
  REquationReport rep;
  std::size_t kept1 = 0, kept2 = 0;

  SkSeq seq;
  std::vector<int> f(size);
  for (int x = 0; x < size; ++x) f[x] = x;

  auto evaluate = [&] {
    ++rep.sequences;
    const int t = static_cast<int>(seq.size());
    std::vector<int> fixed;
    for (int x = 1; x < c.top(); ++x)
      if (f[x] == x) fixed.push_back(x);
    if (fixed.size() >= 2) {
      for (int x : fixed)
        for (int y : fixed) {
          if (x == y) continue;
          ++rep.r2_failures;
          if (kept2 < keep) {
            ++kept2;
            rep.failures.push_back({"R2n", seq, 1, x, y});
          }
        }
    }
    for (int r = 2; r * t <= n + 1; ++r) {
      for (int x = 1; x < c.top(); ++x) {
        const int y = f[x];
        if (y == x) continue;
        int z = y;
        for (int k = 1; k < r; ++k) z = f[z];
        if (z != x) continue;
        ++rep.r1_failures;
        if (kept1 < keep) {
          ++kept1;
          rep.failures.push_back({"R1n", seq, r, x, y});
        }
      }
    }
  };

  auto extend = [&](auto& self) -> void {
    if (is_well_formed(seq)) evaluate();
    if (static_cast<int>(seq.size()) >= n + 1) return;
    for (Sym o : {Sym::STAR, Sym::INV}) {
      if (seq.empty() && o == Sym::INV) continue;
      if (o == Sym::INV && seq.back() == Sym::INV) continue;
      const std::vector<int> saved = f;
      for (int& v : f) v = o == Sym::STAR ? c.star(v) : c.inv(v);
      seq.push_back(o);
      self(self);
      seq.pop_back();
      f = saved;
    }
  };
  extend(extend);
  return rep;
}

}  // namespace lukstar
