#pragma once

// A finite chain 0 < 1 < ... < m with the order-reversing involution
// inv(j) = m - j and an arbitrary star table. This is the common currency of
// subalgebras of L*_{n+1} (re-indexed), abstract IG-star chains, and the
// restricted Delta synthesis.

#include <vector>

#include "lukstar/chain.hpp"

namespace lukstar {

class StarAlgebra {
 public:
  /// star[j] is the image of index j; size is star.size() >= 2.
  explicit StarAlgebra(std::vector<int> star);

  /// L*_{n+1} itself: index k stands for k/n.
  static StarAlgebra lukasiewicz(const Chain& chain);

  int top() const noexcept { return static_cast<int>(star_.size()) - 1; }
  int size() const noexcept { return static_cast<int>(star_.size()); }

  int star(int j) const { return star_[checked(j)]; }
  int inv(int j) const { return top() - checked(j); }
  int plus(int j) const { return inv(star(inv(j))); }
  bool positive(int j) const { return 2 * checked(j) > top(); }
  bool interior(int j) const { return 0 < j && j < top(); }

  const std::vector<int>& star_table() const noexcept { return star_; }

  friend bool operator==(const StarAlgebra&, const StarAlgebra&) = default;

 private:
  int checked(int j) const {
    LUKSTAR_EXPECT(0 <= j && j <= top());
    return j;
  }
  std::vector<int> star_;
};

/// One run of procedure P on indices. starred[i] tells whether step i applied
/// star (true) or the involution (false); the last step maps seq.back() to
/// seq[loop_target - 1].
struct PRun {
  std::vector<int> seq;
  std::vector<bool> starred;
  int loop_target = 1;  // 1-based
};

/// Throws BoundaryElement for 0 and top.
PRun run_p(const StarAlgebra& alg, int a);

/// Indices of the subalgebra generated by a (0 and top always included),
/// ascending.
std::vector<int> generated_indices(const StarAlgebra& alg, int a);

/// Restriction of alg to a subset closed under star and inv (ascending
/// indices). The result is re-indexed 0..k-1.
StarAlgebra restrict_to(const StarAlgebra& alg, const std::vector<int>& elems);

}  // namespace lukstar
