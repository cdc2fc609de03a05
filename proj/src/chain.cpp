#include "lukstar/chain.hpp"

#include <algorithm>

namespace lukstar {

namespace {

void same_chain(const Elem& x, const Elem& y) { LUKSTAR_EXPECT(x.den == y.den); }

}  // namespace

std::string to_string(const Elem& x) {
  return std::to_string(x.num) + "/" + std::to_string(x.den);
}

std::ostream& operator<<(std::ostream& os, const Elem& x) {
  return os << to_string(x);
}

Chain::Chain(int n) : n_(n) { LUKSTAR_EXPECT(n >= 1); }

std::vector<Elem> Chain::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (int k = 0; k <= n_; ++k) out.emplace_back(k, n_);
  return out;
}

Elem neg(const Elem& x) { return Elem(x.den - x.num, x.den); }

Elem star(const Elem& x) { return Elem(std::max(0, 2 * x.num - x.den), x.den); }

Elem plus(const Elem& x) { return Elem(std::min(x.den, 2 * x.num), x.den); }

Elem join(const Elem& x, const Elem& y) {
  same_chain(x, y);
  return Elem(std::max(x.num, y.num), x.den);
}

Elem meet(const Elem& x, const Elem& y) {
  same_chain(x, y);
  return Elem(std::min(x.num, y.num), x.den);
}

Elem luk_imp(const Elem& x, const Elem& y) {
  same_chain(x, y);
  return Elem(std::min(x.den, x.den - x.num + y.num), x.den);
}

Elem luk_conj(const Elem& x, const Elem& y) {
  same_chain(x, y);
  return Elem(std::max(0, x.num + y.num - x.den), x.den);
}

Elem oplus(const Elem& x, const Elem& y) {
  same_chain(x, y);
  return Elem(std::min(x.den, x.num + y.num), x.den);
}

Elem goedel_imp(const Elem& x, const Elem& y) {
  same_chain(x, y);
  return x.num <= y.num ? Elem(x.den, x.den) : y;
}

Elem crisp_imp(const Elem& x, const Elem& y) {
  same_chain(x, y);
  return Elem(x.num <= y.num ? x.den : 0, x.den);
}

Elem baaz_delta(const Elem& x) {
  return Elem(x.num == x.den ? x.den : 0, x.den);
}

bool is_positive(const Elem& x) { return 2 * x.num > x.den; }

}  // namespace lukstar
