#pragma once

#include <vector>

#include "lukstar/chain.hpp"
#include "lukstar/star_algebra.hpp"

namespace lukstar {

/// The sequence produced by procedure P from `start`: a_1 = start, then
/// star while positive, negation otherwise, until an element repeats.
struct PSequence {
  Elem start;
  std::vector<Elem> seq;
  int loop_target = 1;  // 1-based j with a_{k+1} = a_j
};

PSequence run_p(const Chain& chain, const Elem& a);

/// A subset of L_{n+1} closed under neg and star, containing 0 and 1.
class Subalgebra {
 public:
  /// elems must be closed; checked.
  Subalgebra(const Chain& chain, std::vector<Elem> elems);

  const Chain& chain() const noexcept { return chain_; }
  const std::vector<Elem>& elems() const noexcept { return elems_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  bool contains(const Elem& x) const;
  std::vector<int> numerators() const;

  /// Re-indexed as an abstract star algebra (index k = k-th smallest).
  StarAlgebra as_star_algebra() const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) {
    return a.chain_ == b.chain_ && a.numerators() == b.numerators();
  }

 private:
  Chain chain_;
  std::vector<Elem> elems_;
};

Subalgebra generated(const Chain& chain, const Elem& a);
Subalgebra generated_by_set(const Chain& chain, const std::vector<Elem>& xs);

/// Every subalgebra exactly once, sorted by size then lexicographically.
/// Throws BoundExceeded when n > bound.
std::vector<Subalgebra> all_subalgebras(const Chain& chain, int bound = 64);

/// True iff the only proper subalgebra is {0,1}.
bool is_strictly_simple(const Chain& chain);

/// True iff every positive a != 1 of s, and 1/2 if present, generates s.
/// Vacuously true on {0,1}.
bool is_strictly_simple_sub(const Subalgebra& s);

}  // namespace lukstar
