#include "lukstar/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lukstar/arith.hpp"
#include "lukstar/axioms.hpp"
#include "lukstar/igchain.hpp"
#include "lukstar/semantics.hpp"
#include "lukstar/skeleton.hpp"
#include "lukstar/subalgebra.hpp"
#include "lukstar/term_synth.hpp"

namespace lukstar {

namespace {

struct Outcome {
  bool correct;
  std::string detail;
};

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

std::string item_summary(const CheckReport& r) {
  std::map<std::string, std::size_t> count;
  for (const Failure& f : r.failures) ++count[f.item];
  std::string s;
  for (const auto& [item, k] : count) s += (s.empty() ? "" : " ") + item + "x" + std::to_string(k);
  return s;
}

Outcome pi_list() {
  const std::vector<std::int64_t> expected{
      3,  5,  7,   11,  13,  19,  23,  29,  37,  47,  53,  59,  61,  67,  71, 79,
      83, 101, 103, 107, 131, 139, 149, 163, 167, 173, 179, 181, 191, 197, 199};
  const auto got = pi_below(200);
  return {got == expected, std::to_string(got.size()) + " primes below 200" +
                               (got == expected ? ", identical to the reference list"
                                                : ", list differs")};
}

Outcome prime_characterization() {
  int cases = 0, bad = 0;
  std::string first;
  for (int n = 3; n <= 101; n += 2) {
    ++cases;
    const bool lhs = is_strictly_simple(Chain(n));
    const bool rhs = is_prime(n) && in_pi(n).in_pi;
    if (lhs != rhs && bad++ == 0) first = " first mismatch n=" + std::to_string(n);
  }
  return {bad == 0, std::to_string(cases) + " odd n in 3..101, " + std::to_string(bad) +
                        " disagreements" + first};
}

Outcome subalgebra_fixtures() {
  const Subalgebra a = generated(Chain(9), Elem(8, 9));
  const Subalgebra b = generated(Chain(17), Elem(16, 17));
  const bool sets = a.numerators() == std::vector<int>{0, 1, 2, 4, 5, 7, 8, 9} &&
                    b.numerators() == std::vector<int>{0, 1, 2, 4, 8, 9, 13, 15, 16, 17};
  const StarAlgebra sa = a.as_star_algebra();
  const StarAlgebra l8 = StarAlgebra::lukasiewicz(Chain(7));
  // The only order bijection between two 8-chains is index to index, so
  // equal star tables is the same as isomorphic. Index 5 is 7/9 resp. 5/7:
  // *(7/9) = 5/9 sits at index 4 (that is 4/7), while *(5/7) = 3/7.
  const bool witness = sa.star(5) == 4 && l8.star(5) == 3 &&
                       star(Elem(7, 9)) == Elem(5, 9);
  const bool ok = sets && a.size() == 8 && !(sa == l8) && witness;
  return {ok, "<8/9>* = {" + join_ints(a.numerators()) + "}/9, <16/17>* = {" +
                  join_ints(b.numerators()) + "}/17, 8 elements, not isomorphic to L*_8: " +
                  "*(7/9) = 5/9 ~ 4/7 but *(5/7) = 3/7 (the quoted *(7/9) = 2/9 is a slip; " +
                  "the conclusion stands)"};
}

Outcome delta_table_n11() {
  using enum UnOp;
  struct Row {
    const char* label;
    UnaryTerm term;
    std::vector<int> expected;  // reference numerators over 11, verbatim
  };
  const std::vector<Row> rows{
      {"*x", {{STAR}}, {0, 0, 0, 0, 0, 0, 1, 3, 5, 7, 9, 11}},
      {"+x", {{PLUS}}, {0, 2, 4, 6, 8, 10, 11, 11, 11, 11, 11, 11}},
      {"+*x", {{STAR, PLUS}}, {0, 0, 0, 0, 0, 0, 2, 6, 10, 11, 11, 11}},
      {"*^2+*x", {{STAR, PLUS, STAR, STAR}}, {0, 0, 0, 0, 0, 0, 0, 0, 7, 11, 11, 11}},
      {"+*^2+*x", {{STAR, PLUS, STAR, STAR, PLUS}}, {0, 0, 0, 0, 0, 0, 0, 0, 11, 11, 11, 11}},
      {"*^2x", {{STAR, STAR}}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 11, 11}},
      {"+^2*^2x", {{STAR, STAR, PLUS, PLUS}}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 11, 11, 11}},
  };
  const Chain c(11);
  int cells = 0;
  std::vector<std::string> diffs;
  for (const Row& r : rows)
    for (int k = 0; k <= 11; ++k) {
      ++cells;
      const int got = r.term.apply(c.elem(k)).num;
      if (got != r.expected[k])
        diffs.push_back(std::string(r.label) + " at " + std::to_string(k) +
                        "/11: reference " + to_string(c.elem(r.expected[k])) + ", computed " +
                        to_string(c.elem(got)));
    }
  const std::string d8 = synth_delta(c, c.elem(8)).to_string();
  const std::string d9 = synth_delta(c, c.elem(9)).to_string();
  const bool terms = d8 == "+*^2+*" && d9 == "+^2*^2";
  std::string detail = "Delta_8/11 = " + d8 + ", Delta_9/11 = " + d9 + "; " +
                       std::to_string(cells - static_cast<int>(diffs.size())) + "/" +
                       std::to_string(cells) + " cells match";
  for (const auto& d : diffs) detail += "; " + d;
  if (!diffs.empty()) detail += " (reference value is impossible: *^2x <= x < 1)";
  return {terms && diffs.empty(), detail};
}

Outcome delta_oracle() {
  long checked = 0, bad = 0;
  for (int n = 2; n <= 30; ++n) {
    const Chain c(n);
    for (const Elem& a : c.elements()) {
      const DeltaTerm t = synth_delta(c, a);
      for (const Elem& x : c.elements()) {
        ++checked;
        if (t.apply(x) != (x >= a ? c.one() : c.zero())) ++bad;
      }
    }
  }
  long subs = 0, sub_checked = 0, sub_bad = 0;
  for (int n = 2; n <= 17; ++n)
    for (const Subalgebra& s : all_subalgebras(Chain(n))) {
      ++subs;
      const StarAlgebra alg = s.as_star_algebra();
      const std::vector<int> values = s.numerators();
      for (int a = 0; a <= alg.top(); ++a) {
        try {
          const DeltaTerm t = synth_delta(alg, a, &values);
          for (int x = 0; x <= alg.top(); ++x) {
            ++sub_checked;
            if (t.apply(alg, x) != (x >= a ? alg.top() : 0)) ++sub_bad;
          }
        } catch (const Error&) {
          ++sub_bad;
        }
      }
    }
  return {bad == 0 && sub_bad == 0,
          std::to_string(checked) + " chain points (n=2..30), " + std::to_string(bad) +
              " wrong; " + std::to_string(subs) + " subalgebras (n<=17), " +
              std::to_string(sub_checked) + " points, " + std::to_string(sub_bad) + " wrong"};
}

Outcome implication() {
  std::string detail;
  bool ok = true;
  for (int n : {2, 3, 4, 5, 7, 11, 13}) {
    const Chain c(n);
    const Formula f = synth_luk_imp(c);
    int bad = 0;
    for (const Elem& x : c.elements())
      for (const Elem& y : c.elements())
        if (eval(f, c, {x, y}) != luk_imp(x, y)) ++bad;
    ok = ok && bad == 0;
    detail += "n=" + std::to_string(n) + (bad ? " WRONG " : " ok ");
  }
  for (int n : {9, 17}) {
    bool thrown = false;
    try {
      synth_luk_imp(Chain(n));
    } catch (const NotTermEquivalent&) {
      thrown = true;
    }
    ok = ok && thrown;
    detail += "n=" + std::to_string(n) + (thrown ? " NotTermEquivalent " : " NO-ERROR ");
  }
  detail.pop_back();
  return {ok, detail};
}

Outcome soundness() {
  CheckReport hil, eqs, lem, crisp;
  std::set<std::string> failing_pairs;
  for (int n = 2; n <= 9; ++n)
    for (int i = 1; i <= n; ++i) {
      const CheckReport r = check_hilbert_axioms(Matrix(n, i));
      if (!r.ok()) failing_pairs.insert(std::to_string(n) + "," + std::to_string(i));
      hil.merge(r);
      crisp.merge(check_crisp_star_theorems(Matrix(n, i)));
    }
  for (int n = 1; n <= 12; ++n) eqs.merge(check_lambda_equations(Chain(n)));
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i) lem.merge(check_lemma_theorems(Matrix(n, i)));

  CheckReport ax1b;
  for (int n = 2; n <= 9; ++n)
    for (int i = 1; i <= n; ++i) ax1b.merge(check_ax1_boolean(Matrix(n, i)));

  std::ostringstream d;
  d << "Hilbert " << hil.checked << " instances";
  if (hil.ok()) {
    d << " all valid";
  } else {
    d << ", invalid: " << item_summary(hil) << " in " << failing_pairs.size()
      << "/44 matrices";
    const Failure& f = hil.failures.front();
    d << " (first " << f.item << " countermodel p=" << join_ints(f.valuation) << ")";
  }
  d << "; Eq1-Eq9 " << eqs.checked << " instances" << (eqs.ok() ? " all hold" : ", failing: " + item_summary(eqs));
  d << "; derived theorems (i)-(xvi) " << lem.checked << (lem.ok() ? " all valid" : " failing: " + item_summary(lem));
  d << "; =>c props " << (crisp.ok() ? "valid" : "failing");
  d << "; Ax1 on Boolean instances " << (ax1b.ok() ? "valid" : "failing");
  return {hil.ok() && eqs.ok() && lem.ok() && crisp.ok(), d.str()};
}

Outcome mutation() {
  const StarAlgebra base = StarAlgebra::lukasiewicz(Chain(11));
  std::vector<int> t = base.star_table();
  t[7] = 4;
  const CheckReport r = check_lambda_equations(StarAlgebra(t), 11);
  // Every other single-cell mutation as well.
  int mutants = 0, caught = 0;
  for (int j = 0; j <= 11; ++j)
    for (int v = 0; v <= 11; ++v) {
      if (v == base.star(j)) continue;
      std::vector<int> m = base.star_table();
      m[j] = v;
      ++mutants;
      if (!check_lambda_equations(StarAlgebra(m), 11).ok()) ++caught;
    }
  return {!r.ok() && caught == mutants,
          "*(7/11):=4/11 gives " + std::to_string(r.failures.size()) + " failures (" +
              item_summary(r) + "); " + std::to_string(caught) + "/" +
              std::to_string(mutants) + " single-cell mutants detected"};
}

Outcome fixed_points() {
  const SkSeq s1 = parse_skseq("***~");
  const SkSeq s2 = parse_skseq("**~**~");
  const Rational f1 = fixed_point(s1), f2 = fixed_point(s2);
  const Subalgebra g = generated(Chain(5), Elem(4, 5));
  const SkSeq sk = skeleton(g.as_star_algebra(), g.size() - 2);
  const bool ok = f1 == Rational(8, 9) && f2 == Rational(4, 5) &&
                  sk == parse_skseq("**~") && sk != s2;
  auto q = [](const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
  };
  return {ok, "fix[*,*,*,~] = " + q(f1) + ", fix[*,*,~,*,*,~] = " + q(f2) +
                  ", Sk(<4/5>*, 4/5) = " + to_string(sk)};
}

Outcome representability() {
  const AbstractIGChain e512({0, 0, 0, 1, 2, 5});
  const AbstractIGChain e513({0, 0, 0, 0, 0, 0, 0, 1, 2, 5, 6, 9, 10, 13});
  std::ostringstream d;
  bool ok = true;

  const bool v1 = validate_igstar(e512).ok(), v2 = validate_igstar(e513).ok();
  ok = ok && v1 && v2;
  if (!v1 || !v2) return {false, "counterexample chains fail validation"};

  const Representability r1 = is_representable(e512), r2 = is_representable(e513);
  const REquationReport q1 = check_r_equations(e512, e512.size() - 1);
  const REquationReport q2 = check_r_equations(e513, e513.size() - 1);
  ok = ok && !r1.representable &&
       r1.reason == Representability::Reason::PeriodicSkeleton &&
       r1.witness == parse_skseq("*~*~") && q1.r1_failures > 0;
  ok = ok && !r2.representable &&
       r2.reason == Representability::Reason::SharedSkeleton &&
       r2.witness == parse_skseq("**~*~") && q2.r2_failures > 0;
  d << "periodic 6-chain: " << to_string(r1.reason) << " " << to_string(r1.witness) << ", R1n fails "
    << q1.r1_failures << "x; shared 14-chain: " << to_string(r2.reason) << " " << to_string(r2.witness)
    << ", R2n fails " << q2.r2_failures << "x";

  int subs = 0, bad = 0;
  for (int n = 1; n <= 12; ++n)
    for (const Subalgebra& s : all_subalgebras(Chain(n))) {
      ++subs;
      const AbstractIGChain c = s.as_star_algebra();
      const bool good = validate_igstar(c).ok() && [&] {
        const Representability r = is_representable(c);
        return r.representable && verify_embedding(c, *r.embedding) &&
               check_r_equations(c, c.size() - 1).ok();
      }();
      if (!good) ++bad;
    }
  ok = ok && bad == 0;
  d << "; " << subs << " subalgebras of L*_{n+1}, n<=12: " << subs - bad
    << " representable with verified embedding and R1n/R2n holding";
  return {ok, d.str()};
}

Outcome coatom_runs() {
  int cases = 0, bad = 0;
  for (int n = 3; n <= 301; n += 2) {
    ++cases;
    const Chain c(n);
    if (run_p(c, c.coatom()).seq.back() != c.atom()) ++bad;
  }
  return {bad == 0, std::to_string(cases) + " odd n in 3..301, " + std::to_string(bad) +
                        " runs not ending at 1/n"};
}

Outcome translations() {
  const auto samples = random_samples(20240607u, 100, 4, 2);
  std::ostringstream d;
  bool ok = true;
  for (int n : {3, 5})
    for (int i : {1, 2}) {
      const CheckReport r = check_translations(n, i, samples);
      ok = ok && r.ok();
      d << "n=" << n << " i=" << i << ": " << r.failures.size() << " discrepancies; ";
    }
  std::string s = d.str();
  s.resize(s.size() - 2);
  return {ok, "100 seeded samples; " + s};
}

struct Criterion {
  const char* title;
  double budget;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> v{
      {"Pi below 200", 1, pi_list},
      {"strictly simple iff prime in Pi, odd n<=101", 10, prime_characterization},
      {"subalgebra fixtures <8/9>*, <16/17>*", 0, subalgebra_fixtures},
      {"n=11 Delta value table", 0, delta_table_n11},
      {"Delta_a synthesis oracle", 60, delta_oracle},
      {"Lukasiewicz implication reconstruction", 0, implication},
      {"axiom soundness sweep", 120, soundness},
      {"mutation sensitivity", 0, mutation},
      {"sk-sequence fixed points", 0, fixed_points},
      {"representability", 60, representability},
      {"P from the coatom ends at 1/n, odd n<=301", 5, coatom_runs},
      {"translation equivalence", 0, translations},
  };
  return v;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriteria)
    throw OutOfRange("criteria are numbered 1.." + std::to_string(kCriteria));
  const Criterion& s = criteria()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.budget = s.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = s.run();
    r.correct = o.correct;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.correct = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  if (r.budget > 0)
    std::snprintf(timing, sizeof timing, "%.2f s, limit %g s", r.seconds, r.budget);
  else
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  std::string line = std::string(r.pass() ? "PASS" : "FAIL") + "  " +
                     (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " + r.title +
                     "  (" + timing + ")";
  if (!r.within_budget()) line += "  OVER TIME";
  return line + "\n      " + r.detail;
}

}  // namespace lukstar
