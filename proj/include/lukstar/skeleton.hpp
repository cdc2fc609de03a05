#pragma once

// Skeletons (the op sequence procedure P picks) and the clamped affine maps
// they induce on [0,1], with exact rational endpoints.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lukstar/star_algebra.hpp"

namespace lukstar {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Sym : unsigned char { STAR, INV };

/// Symbols in application order: s[0] is applied first.
using SkSeq = std::vector<Sym>;

/// "[*,*,~]"
std::string to_string(const SkSeq& s);
/// Accepts "[*,*,~]", "* * ~", "**~" and the words STAR/INV. Throws
/// MalformedSequence on anything else.
SkSeq parse_skseq(const std::string& text);

/// [*^n1, ~, *^n2, ..., ~, *^nk]: starts with a star, contains a negation,
/// and never has two negations in a row.
bool is_well_formed(const SkSeq& s);

/// s repeated `times` times.
SkSeq repeat(const SkSeq& s, int times);

/// True iff s = (k)R for a strict prefix R and some k >= 2.
bool is_periodic(const SkSeq& s);

/// Sk(A, a). Throws BoundaryElement unless a is positive and not the top.
SkSeq skeleton(const StarAlgebra& alg, int a);

/// f_S on [0,1]: 0 up to lo, affine in between, 1 from hi on; mirrored when
/// decreasing.
struct PLMap {
  Rational lo{0};
  Rational hi{1};
  bool increasing = true;

  Rational operator()(const Rational& x) const;
  friend bool operator==(const PLMap&, const PLMap&) = default;
};

PLMap plmap_of(const SkSeq& s);
/// g after f.
PLMap compose(const PLMap& f, const PLMap& g);

/// The unique solution of f_S(x) = x, which lies above 1/2. Throws
/// MalformedSequence unless s is well formed.
Rational fixed_point(const SkSeq& s);

/// The unique x with f_S(x) = d. Throws OutOfRange unless 0 < d < 1.
Rational solve_preimage(const SkSeq& s, const Rational& d);

/// Exact square and negation on [0,1].
Rational star(const Rational& x);
Rational inv(const Rational& x);

}  // namespace lukstar
