#pragma once

// Exact arithmetic on the finite Lukasiewicz chain L_{n+1} = {0, 1/n, ..., 1}.
//
// Elements are numerators over the ambient denominator n. Nothing is ever
// reduced to lowest terms: 2/4 stays 2/4 inside L_5. Mixing elements of
// chains with different n is a contract violation.

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "lukstar/errors.hpp"

namespace lukstar {

/// An element k/n of L_{n+1}.
struct Elem {
  int num = 0;
  int den = 1;

  constexpr Elem() = default;
  Elem(int k, int n) : num(k), den(n) {
    LUKSTAR_EXPECT(n >= 1);
    LUKSTAR_EXPECT(0 <= k && k <= n);
  }

  friend bool operator==(const Elem& a, const Elem& b) {
    LUKSTAR_EXPECT(a.den == b.den);
    return a.num == b.num;
  }
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
    LUKSTAR_EXPECT(a.den == b.den);
    return a.num <=> b.num;
  }
};

std::string to_string(const Elem& x);
std::ostream& operator<<(std::ostream& os, const Elem& x);

/// The chain L_{n+1}, n >= 1.
class Chain {
 public:
  explicit Chain(int n);

  int n() const noexcept { return n_; }
  int size() const noexcept { return n_ + 1; }

  Elem elem(int k) const { return Elem(k, n_); }
  Elem zero() const { return Elem(0, n_); }
  Elem one() const { return Elem(n_, n_); }
  /// (n-1)/n
  Elem coatom() const { return Elem(n_ - 1, n_); }
  /// 1/n
  Elem atom() const { return Elem(1, n_); }

  bool contains(const Elem& x) const noexcept { return x.den == n_; }

  /// All elements in ascending order.
  std::vector<Elem> elements() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int n_;
};

// Lukasiewicz negation 1 - x.
Elem neg(const Elem& x);
// Square: max{0, 2x - 1}.
Elem star(const Elem& x);
// Double: min{1, 2x}, the negation dual of star.
Elem plus(const Elem& x);

Elem join(const Elem& x, const Elem& y);
Elem meet(const Elem& x, const Elem& y);

// min{1, 1 - x + y}
Elem luk_imp(const Elem& x, const Elem& y);
// max{0, x + y - 1}
Elem luk_conj(const Elem& x, const Elem& y);
// min{1, x + y}
Elem oplus(const Elem& x, const Elem& y);

/// 1 if x <= y, y otherwise.
Elem goedel_imp(const Elem& x, const Elem& y);
/// 1 if x <= y, 0 otherwise.
Elem crisp_imp(const Elem& x, const Elem& y);

/// Indicator of the top element.
Elem baaz_delta(const Elem& x);

/// x > 1 - x
bool is_positive(const Elem& x);

}  // namespace lukstar
