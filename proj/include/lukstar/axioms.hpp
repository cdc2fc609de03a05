#pragma once

// Brute-force verifiers for the Hilbert calculus, the equational
// presentation and the translations between the matrix logics. Schema
// metavariables are fresh atoms (p0, p1, p2), which covers every instance
// because evaluation is compositional.

#include <cstdint>
#include <string>
#include <vector>

#include "lukstar/formula.hpp"
#include "lukstar/semantics.hpp"
#include "lukstar/star_algebra.hpp"
#include "lukstar/term_synth.hpp"

namespace lukstar {

struct Failure {
  std::string item;        // e.g. "Ax7", "Eq9", "(xiv)"
  std::string params;      // e.g. "a=3/5 b=1/5"; empty if none
  std::vector<int> valuation;  // numerators / indices of the counterexample
};

struct CheckReport {
  std::vector<Failure> failures;
  std::size_t checked = 0;  // schema instances or equation instances
  bool ok() const noexcept { return failures.empty(); }
  void merge(const CheckReport& other);
};

/// CPL schemas, Ax1..Ax12 over every parameter, and soundness of MP.
CheckReport check_hilbert_axioms(const Matrix& m);

/// Eq1..Eq9 on `alg`, using the Delta_a terms synthesized for L*_{n+1}
/// evaluated with alg's own star and involution. alg.size() must be n+1.
CheckReport check_lambda_equations(const StarAlgebra& alg, int n);
inline CheckReport check_lambda_equations(const Chain& c) {
  return check_lambda_equations(StarAlgebra::lukasiewicz(c), c.n());
}

/// Ax1 with its metavariables restricted to Boolean formulas Delta_a p0 and
/// Delta_b p1. The unrestricted schema is not valid (see the README).
CheckReport check_ax1_boolean(const Matrix& m);

/// Items (i)..(xvi) of the list of derived theorems.
CheckReport check_lemma_theorems(const Matrix& m);

/// *a =>_c a and (a =>_c b) -> (*a =>_c *b).
CheckReport check_crisp_star_theorems(const Matrix& m);

struct Sample {
  std::vector<Formula> premises;
  Formula goal;
};

/// Random (premises, goal) over the primitive signature, `vars` variables,
/// depth at most `depth`, 0..2 premises. Deterministic in the seed.
std::vector<Sample> random_samples(std::uint32_t seed, int count, int depth,
                                   int vars);

/// Both translation directions between Lambda*_{n+1,n} and Lambda*_{n+1,i}
/// and the round trips, for every sample.
CheckReport check_translations(int n, int i, const std::vector<Sample>& samples);

}  // namespace lukstar
