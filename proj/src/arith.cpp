#include "lukstar/arith.hpp"

#include <string>

namespace lukstar {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t pow2_mod(std::int64_t e, std::int64_t n) {
  LUKSTAR_EXPECT(n >= 1 && e >= 0);
  std::int64_t r = 1 % n;
  for (std::int64_t i = 0; i < e; ++i) r = (2 * r) % n;
  return r;
}

PiVerdict in_pi(std::int64_t n) {
  LUKSTAR_EXPECT(n >= 2);
  PiVerdict v;
  v.n = n;
  v.prime = is_prime(n);
  if (!v.prime || n == 2) return v;

  const std::int64_t half = (n - 1) / 2;
  std::int64_t p = 1;
  for (std::int64_t m = 1; m < half; ++m) {
    p = (2 * p) % n;
    if (p == 1 || p == n - 1) {
      v.witness_m = m;
      v.sign = p == 1 ? 1 : -1;
      return v;
    }
  }
  // Euler's criterion: 2^{(n-1)/2} is a square root of 1 mod n.
  p = (2 * p) % n;
  LUKSTAR_EXPECT(p == 1 || p == n - 1);
  v.in_pi = true;
  return v;
}

bool is_fermat_prime(std::int64_t n) {
  LUKSTAR_EXPECT(n >= 2);
  const std::int64_t m = n - 1;
  return is_prime(n) && m > 0 && (m & (m - 1)) == 0;
}

bool term_equivalent(std::int64_t n) {
  LUKSTAR_EXPECT(n >= 2);
  if (n == 2 || n == 4) return true;
  if (n % 2 == 0) return false;
  return in_pi(n).in_pi;
}

std::vector<std::int64_t> pi_below(std::int64_t limit) {
  LUKSTAR_EXPECT(limit >= 3);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 3; n < limit; n += 2)
    if (in_pi(n).in_pi) out.push_back(n);
  return out;
}

namespace {

std::string describe(const PiVerdict& v) {
  std::string s = "n = " + std::to_string(v.n) + " is not term-equivalent: ";
  if (!v.prime) return s + "not prime";
  if (v.witness_m)
    return s + "2^" + std::to_string(*v.witness_m) + " = " +
           (*v.sign > 0 ? "+1" : "-1") + " mod " + std::to_string(v.n);
  return s + "even";
}

}  // namespace

NotTermEquivalent::NotTermEquivalent(PiVerdict v)
    : Error(describe(v)), verdict_(v) {}

}  // namespace lukstar
