#pragma once

// Finite Goedel chains with involution and a star operator, given by a star
// table over indices 0..m (involution j -> m - j, order = index order).
// Validation, the partition into attracted blocks, representability with an
// explicit embedding into some L*_{k+1}, and the (R1n)/(R2n) equations.

#include <optional>
#include <string>
#include <vector>

#include "lukstar/skeleton.hpp"
#include "lukstar/star_algebra.hpp"

namespace lukstar {

using AbstractIGChain = StarAlgebra;

struct Violation {
  std::string item;        // "star1".."star5", "IG1".."IG6"
  std::vector<int> elems;  // offending x (and y)
};

struct IGReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// star1..star5 over every element / pair, plus the IG equations 1..6.
IGReport validate_igstar(const AbstractIGChain& c);

struct Block {
  std::vector<int> core;      // a strictly simple subalgebra B, with 0 and top
  std::vector<int> attracted; // B^+ = {x interior : <x> contains B}
};

/// Blocks ordered by the smallest interior element of their core. Throws
/// NotValidated.
std::vector<Block> simple_partition(const AbstractIGChain& c);

/// A map index -> numerator / k.
struct Embedding {
  BigInt k;
  std::vector<BigInt> numerators;
};

/// Pointwise check that e is injective, order preserving and commutes with
/// star and the involution.
bool verify_embedding(const AbstractIGChain& c, const Embedding& e);

struct Representability {
  enum class Reason { None, PeriodicSkeleton, SharedSkeleton, EmbeddingFailed };

  bool representable = false;
  Reason reason = Reason::None;
  SkSeq witness;                   // offending skeleton
  std::vector<int> witness_elems;  // b, or b and c
  std::optional<Embedding> embedding;
};

std::string to_string(Representability::Reason r);

/// Throws NotValidated.
Representability is_representable(const AbstractIGChain& c);

struct REquationFailure {
  std::string equation;  // "R1n" or "R2n"
  SkSeq r_seq;
  int r = 1;             // repetitions (R1n only)
  int x = 0, y = 0;
};

struct REquationReport {
  std::vector<REquationFailure> failures;  // capped sample
  std::size_t r1_failures = 0, r2_failures = 0;  // full counts
  std::size_t sequences = 0;  // sk-sequences R tried
  bool ok() const noexcept { return r1_failures + r2_failures == 0; }
};

/// Every sk-sequence R and every r with r * |R| <= n + 1, over all pairs.
/// At most `keep` failures are stored per equation. Throws NotValidated.
REquationReport check_r_equations(const AbstractIGChain& c, int n,
                                  std::size_t keep = 64);

}  // namespace lukstar
