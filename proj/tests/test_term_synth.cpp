#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lukstar/arith.hpp"
#include "lukstar/semantics.hpp"
#include "lukstar/subalgebra.hpp"
#include "lukstar/term_synth.hpp"

using namespace lukstar;
using enum UnOp;

namespace {

Elem indicator(const Chain& c, bool b) { return b ? c.one() : c.zero(); }

}  // namespace

TEST_CASE("application order is innermost first") {
  const UnaryTerm t{{STAR, PLUS}};
  CHECK(t.to_string() == "+*");
  CHECK(t.apply(Elem(7, 11)) == plus(star(Elem(7, 11))));
  CHECK(UnaryTerm{{STAR, PLUS, STAR, STAR, PLUS}}.to_string() == "+*^2+*");
  CHECK(UnaryTerm{}.to_string() == "id");
}

TEST_CASE("separation") {
  CHECK(is_separated(Elem(8, 11), Elem(5, 11)));
  CHECK_FALSE(is_separated(Elem(8, 11), Elem(7, 11)));
  CHECK(is_separated(Elem(3, 11), Elem(0, 11)));
  CHECK_THROWS_AS(is_separated(Elem(3, 11), Elem(5, 11)), NotOrdered);
  CHECK_THROWS_AS(separating_term(Elem(10, 11), Elem(6, 11)), NotSeparated);
}

TEST_CASE("separating terms use the least exponent") {
  // (a, 0) with ++a = 1: a = 3/11 -> 6/11 -> 1.
  CHECK(separating_term(Elem(3, 11), Elem(0, 11)).ops == std::vector{PLUS, PLUS});
  // (1, b) with *b = 0.
  CHECK(separating_term(Elem(11, 11), Elem(4, 11)).ops == std::vector{STAR});
}

TEST_CASE("separating terms separate every separated pair") {
  for (int n = 2; n <= 25; ++n) {
    const Chain c(n);
    for (int a = 1; a <= n; ++a)
      for (int b = 0; b < a; ++b) {
        if (!is_separated(c.elem(a), c.elem(b))) continue;
        const UnaryTerm t = separating_term(c.elem(a), c.elem(b));
        CHECK(t.apply(c.elem(a)) == c.one());
        CHECK(t.apply(c.elem(b)) == c.zero());
      }
  }
}

TEST_CASE("Delta terms at n = 11") {
  const Chain c(11);
  CHECK(synth_delta(c, Elem(8, 11)).term.ops == std::vector{STAR, PLUS, STAR, STAR, PLUS});
  CHECK(synth_delta(c, Elem(9, 11)).term.ops == std::vector{STAR, STAR, PLUS, PLUS});
  CHECK(synth_delta(c, Elem(11, 11)).term.ops == std::vector<UnOp>(11, STAR));
  const DeltaTerm zero = synth_delta(c, Elem(0, 11));
  CHECK(zero.total);
  for (const Elem& x : c.elements()) CHECK(zero.apply(x) == c.one());
}

TEST_CASE("Delta terms are indicators, monotone, and nested in a") {
  for (int n = 2; n <= 30; ++n) {
    const Chain c(n);
    std::vector<DeltaTerm> d;
    for (const Elem& a : c.elements()) d.push_back(synth_delta(c, a));
    for (int a = 0; a <= n; ++a)
      for (int x = 0; x <= n; ++x) {
        REQUIRE(d[a].apply(c.elem(x)) == indicator(c, x >= a));
        if (x > 0) CHECK(d[a].term.apply(c.elem(x - 1)) <= d[a].term.apply(c.elem(x)));
        if (a < n) CHECK(d[a + 1].apply(c.elem(x)) <= d[a].apply(c.elem(x)));
      }
  }
}

TEST_CASE("pair distance doubles at each unseparated step") {
  for (int n = 3; n <= 40; ++n) {
    const Chain c(n);
    for (int a = 1; a < n; ++a) {
      SynthTrace tr;
      synth_delta(c, c.elem(a), &tr);
      REQUIRE(tr.pairs.size() == tr.steps.size() + 1);
      for (std::size_t k = 0; k < tr.steps.size(); ++k) {
        const auto [x0, y0] = tr.pairs[k];
        const auto [x1, y1] = tr.pairs[k + 1];
        if (is_separated(c.elem(x1), c.elem(y1))) continue;
        CHECK(x1 - y1 == (x0 - y0) << tr.steps[k].ops.size());
      }
    }
  }
}

TEST_CASE("the procedure works inside every subalgebra") {
  for (int n = 2; n <= 17; ++n)
    for (const Subalgebra& s : all_subalgebras(Chain(n))) {
      const StarAlgebra alg = s.as_star_algebra();
      const auto vals = s.numerators();
      for (int a = 0; a <= alg.top(); ++a) {
        const DeltaTerm t = synth_delta(alg, a, &vals);
        for (int x = 0; x <= alg.top(); ++x)
          CHECK(t.apply(alg, x) == (x >= a ? alg.top() : 0));
      }
    }
}

TEST_CASE("chi and the derived implications") {
  for (int n : {2, 3, 5, 11}) {
    const Chain c(n);
    for (const Elem& a : c.elements()) {
      const Formula chi = synth_chi(c, a);
      for (const Elem& x : c.elements()) CHECK(eval(chi, c, {x}) == indicator(c, x == a));
    }
    const Formula ci = synth_crisp_imp(c), gi = synth_goedel_imp(c);
    for (const Elem& x : c.elements())
      for (const Elem& y : c.elements()) {
        CHECK(eval(ci, c, {x, y}) == crisp_imp(x, y));
        CHECK(eval(gi, c, {x, y}) == goedel_imp(x, y));
      }
  }
  CHECK(eval(synth_goedel_imp(Chain(11)), Chain(11), {Elem(8, 11), Elem(3, 11)}) ==
        Elem(3, 11));
}

TEST_CASE("chi at n = 11, a = 8/11 is Delta_8 and not Delta_9") {
  const Chain c(11);
  const Formula x = Formula::var(0);
  const Formula expect = meet(synth_delta(c, Elem(8, 11)).apply(x),
                              neg(synth_delta(c, Elem(9, 11)).apply(x)));
  for (const Elem& v : c.elements())
    CHECK(eval(synth_chi(c, Elem(8, 11)), c, {v}) == eval(expect, c, {v}));
}

TEST_CASE("transfer terms") {
  CHECK(transfer_term(Chain(7), Elem(3, 7), Elem(3, 7)).ops.empty());
  CHECK(transfer_term(Chain(5), Elem(4, 5), Elem(3, 5)).ops == std::vector{STAR});
  const UnaryTerm t = transfer_term(Chain(7), Elem(6, 7), Elem(1, 7));
  CHECK(t.apply(Elem(6, 7)) == Elem(1, 7));
  CHECK_THROWS_AS(transfer_term(Chain(17), Elem(16, 17), Elem(3, 17)), NotStrictlySimple);
}

TEST_CASE("Lukasiewicz implication") {
  for (int n : {2, 3, 4, 5, 7, 11, 13}) {
    const Chain c(n);
    const Formula f = synth_luk_imp(c);
    for (const Elem& x : c.elements())
      for (const Elem& y : c.elements()) REQUIRE(eval(f, c, {x, y}) == luk_imp(x, y));
  }
  CHECK_THROWS_AS(synth_luk_imp(Chain(9)), NotTermEquivalent);
  try {
    synth_luk_imp(Chain(17));
    FAIL("expected NotTermEquivalent");
  } catch (const NotTermEquivalent& e) {
    CHECK(e.verdict().n == 17);
    CHECK(e.verdict().prime);
    CHECK_FALSE(e.verdict().in_pi);
  }
}
