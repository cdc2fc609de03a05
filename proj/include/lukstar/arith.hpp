#pragma once

// Number-theoretic side: the prime class Pi and the term-equivalence verdict.

#include <cstdint>
#include <optional>
#include <vector>

#include "lukstar/errors.hpp"

namespace lukstar {

struct PiVerdict {
  std::int64_t n = 0;
  bool prime = false;
  bool in_pi = false;
  // Least 0 < m < (n-1)/2 with 2^m = +-1 (mod n); only for odd primes outside Pi.
  std::optional<std::int64_t> witness_m;
  std::optional<int> sign;
};

/// Deterministic trial division.
bool is_prime(std::int64_t n);

/// 2^e mod n by iterated doubling.
std::int64_t pow2_mod(std::int64_t e, std::int64_t n);

PiVerdict in_pi(std::int64_t n);
bool is_fermat_prime(std::int64_t n);

/// n = 2, n = 4, or n an odd member of Pi. Even n > 4 is never.
bool term_equivalent(std::int64_t n);

std::vector<std::int64_t> pi_below(std::int64_t limit);

/// Raised when a Lukasiewicz-implication term is requested for an n whose
/// chain with square is not term-equivalent to the MV-chain.
class NotTermEquivalent : public Error {
 public:
  explicit NotTermEquivalent(PiVerdict v);
  const PiVerdict& verdict() const noexcept { return verdict_; }

 private:
  PiVerdict verdict_;
};

}  // namespace lukstar
