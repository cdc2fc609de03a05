#pragma once

// Explicit terms for Delta_a, chi_a and the implications, following the
// separation procedure: push the pair (a, a^-) apart with runs of square
// and double until it is separated, then finish with a single separating
// term.

#include <string>
#include <utility>
#include <vector>

#include "lukstar/arith.hpp"
#include "lukstar/chain.hpp"
#include "lukstar/formula.hpp"
#include "lukstar/star_algebra.hpp"

namespace lukstar {

// NEG never appears in Delta terms; transfer terms may use it.
enum class UnOp : unsigned char { STAR, PLUS, NEG };

/// A composition of unary operations. ops[0] is applied to the argument
/// first, so {STAR, PLUS} is +*x in the usual right-to-left notation.
struct UnaryTerm {
  std::vector<UnOp> ops;

  Elem apply(const Elem& x) const;
  int apply(const StarAlgebra& alg, int j) const;
  Formula apply(const Formula& f) const;

  /// Outermost first with run-length exponents: "+*^2+*". Empty is "id".
  std::string to_string() const;

  UnaryTerm then(const UnaryTerm& outer) const;
  friend bool operator==(const UnaryTerm&, const UnaryTerm&) = default;
};

/// Delta_a. For a = 0 the term is the constant-1 formula
/// Delta_1 x | ~Delta_1 x and `term` holds Delta_1.
struct DeltaTerm {
  bool total = false;
  UnaryTerm term;

  Elem apply(const Elem& x) const;
  int apply(const StarAlgebra& alg, int j) const;
  Formula apply(const Formula& f) const;
  std::string to_string() const;
};

/// Intermediate pairs (as indices) and the runs applied between them.
struct SynthTrace {
  std::vector<std::pair<int, int>> pairs;
  std::vector<UnaryTerm> steps;
  UnaryTerm finish;
};

/// (a, b) with a > b: a positive and b not, or b = 0, or a = 1.
/// Throws NotOrdered unless a > b.
bool is_separated(const Elem& a, const Elem& b);
bool is_separated(const StarAlgebra& alg, int a, int b);

/// t with t(a) = 1 and t(b) = 0, trying the three cases in order with the
/// least exponent. Throws NotSeparated.
UnaryTerm separating_term(const Elem& a, const Elem& b);
UnaryTerm separating_term(const StarAlgebra& alg, int a, int b);

DeltaTerm synth_delta(const Chain& chain, const Elem& a,
                      SynthTrace* trace = nullptr);

/// The same procedure inside any finite star algebra. `values`, when given,
/// are numerators over a common denominator and enable the distance-doubling
/// check. Throws NoTermFound if the pair sequence cycles.
DeltaTerm synth_delta(const StarAlgebra& alg, int a,
                      const std::vector<int>* values = nullptr,
                      SynthTrace* trace = nullptr);

/// The defined connectives of L*_{n+1}, with every Delta_{k/n} synthesized
/// once up front. Parameters are numerators k of k/n.
class Connectives {
 public:
  explicit Connectives(int n);

  int n() const noexcept { return n_; }
  const DeltaTerm& delta_term(int k) const;

  Formula delta(int k, const Formula& f) const;
  Formula chi(int k, const Formula& f) const;
  /// Delta_k(f) for k = 0..n, sharing nothing but f.
  std::vector<Formula> deltas(const Formula& f) const;
  /// chi_k from a full deltas() vector.
  std::vector<Formula> chis(const std::vector<Formula>& ds) const;

  Formula baaz(const Formula& f) const { return delta(n_, f); }
  Formula strong_neg(int i, const Formula& f) const;           // ~Delta_i f
  Formula arrow(int i, const Formula& f, const Formula& g) const;
  Formula iff(int i, const Formula& f, const Formula& g) const;
  Formula crisp_imp(const Formula& f, const Formula& g) const;
  Formula goedel_imp(const Formula& f, const Formula& g) const;
  /// Delta_1((f =>_G g) & (g =>_G f)): 1 iff equal.
  Formula approx(const Formula& f, const Formula& g) const;
  /// Throws NotTermEquivalent.
  Formula luk_imp(const Formula& f, const Formula& g) const;

 private:
  int n_;
  std::vector<DeltaTerm> delta_;
};

Formula synth_chi(const Chain& chain, const Elem& a);
Formula synth_crisp_imp(const Chain& chain);
Formula synth_goedel_imp(const Chain& chain);
Formula synth_luk_imp(const Chain& chain);

/// Shortest word over {STAR, PLUS, NEG} sending a to b (BFS, STAR tried
/// first). Throws NotStrictlySimple, BoundaryElement.
UnaryTerm transfer_term(const Chain& chain, const Elem& a, const Elem& b);

}  // namespace lukstar
