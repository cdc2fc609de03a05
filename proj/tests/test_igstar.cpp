#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lukstar/igchain.hpp"
#include "lukstar/skeleton.hpp"
#include "lukstar/subalgebra.hpp"

using namespace lukstar;

namespace {

const AbstractIGChain kPeriodic({0, 0, 0, 1, 2, 5});
const AbstractIGChain kShared({0, 0, 0, 0, 0, 0, 0, 1, 2, 5, 6, 9, 10, 13});

SkSeq S(const char* s) { return parse_skseq(s); }

StarAlgebra luk(int n) { return StarAlgebra::lukasiewicz(Chain(n)); }

// Direct evaluation of the clamped maps, symbol by symbol.
Rational apply_seq(const SkSeq& s, Rational x) {
  for (Sym o : s) x = o == Sym::STAR ? star(x) : inv(x);
  return x;
}

bool is_rotation(const SkSeq& a, const SkSeq& b) {
  if (a.size() != b.size()) return false;
  SkSeq aa = a;
  aa.insert(aa.end(), a.begin(), a.end());
  return std::search(aa.begin(), aa.end(), b.begin(), b.end()) != aa.end();
}

std::vector<Subalgebra> strictly_simple_subs(int n) {
  // One per coatom orbit: the subalgebras generated by single elements that
  // are strictly simple and nontrivial.
  std::vector<Subalgebra> out;
  const Chain c(n);
  for (int k = 1; k < n; ++k) {
    Subalgebra g = generated(c, c.elem(k));
    if (g.size() > 3 && is_strictly_simple_sub(g) &&
        std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("sequence syntax") {
  CHECK(S("**~") == SkSeq{Sym::STAR, Sym::STAR, Sym::INV});
  CHECK(S("[STAR, INV]") == SkSeq{Sym::STAR, Sym::INV});
  CHECK(to_string(S("*~*")) == "[*,~,*]");
  CHECK_THROWS_AS(S("*x"), MalformedSequence);
  CHECK(is_well_formed(S("**~")));
  CHECK_FALSE(is_well_formed(S("~*")));
  CHECK_FALSE(is_well_formed(S("***")));
  CHECK_FALSE(is_well_formed(S("*~~")));
}

TEST_CASE("skeletons") {
  CHECK(skeleton(luk(9), 8) == S("***~"));
  CHECK(skeleton(luk(9), 5) == S("*~**"));
  const Subalgebra g = generated(Chain(5), Elem(4, 5));
  CHECK(skeleton(g.as_star_algebra(), g.size() - 2) == S("**~"));
  CHECK_THROWS_AS(skeleton(luk(9), 9), BoundaryElement);
  CHECK_THROWS_AS(skeleton(luk(9), 3), BoundaryElement);
}

TEST_CASE("clamped affine maps") {
  const PLMap s = plmap_of(S("*"));
  CHECK(s.lo == Rational(1, 2));
  CHECK(s.hi == Rational(1));
  CHECK(s.increasing);
  const PLMap v = plmap_of(S("~"));
  CHECK(v.lo == Rational(0));
  CHECK(v.hi == Rational(1));
  CHECK_FALSE(v.increasing);
  CHECK_FALSE(plmap_of(S("***~")).increasing);
}

TEST_CASE("maps agree with symbol-by-symbol evaluation") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    SkSeq s;
    const int len = 1 + static_cast<int>(rng() % 9);
    for (int k = 0; k < len; ++k) s.push_back(rng() % 3 ? Sym::STAR : Sym::INV);
    const PLMap f = plmap_of(s);
    for (int k = 0; k <= 16; ++k) CHECK(f(Rational(k, 16)) == apply_seq(s, Rational(k, 16)));
    const std::size_t cut = rng() % (s.size() + 1);
    const SkSeq a(s.begin(), s.begin() + cut), b(s.begin() + cut, s.end());
    if (!a.empty() && !b.empty()) CHECK(compose(plmap_of(a), plmap_of(b)) == f);
  }
}

TEST_CASE("fixed points") {
  CHECK(fixed_point(S("***~")) == Rational(8, 9));
  CHECK(fixed_point(S("**~**~")) == Rational(4, 5));
  CHECK(fixed_point(S("**~")) == Rational(4, 5));
  CHECK(apply_seq(S("**~"), Rational(4, 5)) == Rational(4, 5));
  CHECK_THROWS_AS(fixed_point(S("**")), MalformedSequence);
}

TEST_CASE("every well-formed sequence has its fixed point above 1/2") {
  // All well-formed sequences up to length 12.
  std::vector<SkSeq> level{S("*")};
  int count = 0;
  for (int len = 1; len <= 12; ++len) {
    std::vector<SkSeq> next;
    for (const SkSeq& s : level) {
      if (is_well_formed(s)) {
        const Rational f = fixed_point(s);
        CHECK(f > Rational(1, 2));
        CHECK(f < 1);
        CHECK(apply_seq(s, f) == f);
        ++count;
      }
      for (Sym o : {Sym::STAR, Sym::INV}) {
        if (o == Sym::INV && s.back() == Sym::INV) continue;
        SkSeq t = s;
        t.push_back(o);
        next.push_back(std::move(t));
      }
    }
    level = std::move(next);
  }
  CHECK(count > 100);
}

TEST_CASE("preimages") {
  CHECK(solve_preimage(S("*"), Rational(1, 3)) == Rational(2, 3));
  CHECK(solve_preimage(S("~"), Rational(1, 4)) == Rational(3, 4));
  CHECK(solve_preimage(S("**"), Rational(1, 5)) == Rational(4, 5));
  CHECK(apply_seq(S("*~**"), solve_preimage(S("*~**"), Rational(3, 7))) == Rational(3, 7));
  CHECK_THROWS_AS(solve_preimage(S("*"), Rational(1)), OutOfRange);
}

TEST_CASE("periodicity") {
  CHECK(is_periodic(S("*~*~")));
  CHECK_FALSE(is_periodic(S("***~")));
  CHECK_FALSE(is_periodic(S("*")));
  CHECK(is_periodic(repeat(S("**~"), 3)));
}

TEST_CASE("strictly simple subalgebras up to n = 60") {
  int seen = 0;
  for (int n = 3; n <= 60; ++n)
    for (const Subalgebra& b : strictly_simple_subs(n)) {
      ++seen;
      const StarAlgebra alg = b.as_star_algebra();
      const int coatom = alg.top() - 1;
      const SkSeq sk = skeleton(alg, coatom);
      CHECK_FALSE(is_periodic(sk));
      // The coatom is the fixed point of its own skeleton.
      CHECK(fixed_point(sk) == Rational(b.numerators()[coatom], n));
      // Members of the coatom's run carry rotated skeletons.
      for (int x : run_p(alg, coatom).seq)
        if (alg.positive(x)) CHECK(is_rotation(skeleton(alg, x), sk));
    }
  CHECK(seen > 40);
}

TEST_CASE("validation") {
  CHECK(validate_igstar(kPeriodic).ok());
  CHECK(validate_igstar(kShared).ok());
  for (int n = 1; n <= 12; ++n)
    for (const Subalgebra& s : all_subalgebras(Chain(n)))
      CHECK(validate_igstar(s.as_star_algebra()).ok());
  std::vector<int> t = luk(5).star_table();
  t[4] = 4;
  const IGReport r = validate_igstar(StarAlgebra(t));
  CHECK_FALSE(r.ok());
  bool star1 = false;
  for (const Violation& v : r.violations) star1 = star1 || v.item == "star1";
  CHECK(star1);
}

TEST_CASE("partition into strictly simple blocks") {
  const auto l18 = simple_partition(luk(17));
  REQUIRE(l18.size() == 2);
  CHECK(l18[0].core == std::vector<int>{0, 1, 2, 4, 8, 9, 13, 15, 16, 17});
  CHECK(l18[1].core == std::vector<int>{0, 3, 5, 6, 7, 10, 11, 12, 14, 17});

  const auto two = simple_partition(kShared);
  REQUIRE(two.size() == 2);
  CHECK(two[0].attracted == std::vector<int>{1, 3, 6, 7, 10, 12});
  CHECK(two[1].attracted == std::vector<int>{2, 4, 5, 8, 9, 11});

  const auto three = simple_partition(AbstractIGChain({0, 0, 2}));
  REQUIRE(three.size() == 1);
  CHECK(three[0].attracted == std::vector<int>{1});

  CHECK_THROWS_AS(simple_partition(StarAlgebra({0, 1, 2})), NotValidated);
}

TEST_CASE("blocks cover the interior disjointly") {
  for (int n = 2; n <= 40; ++n) {
    std::vector<int> hits(n + 1, 0);
    for (const Block& b : simple_partition(luk(n)))
      for (int x : b.attracted) ++hits[x];
    for (int x = 1; x < n; ++x) CHECK(hits[x] == 1);
  }
}

TEST_CASE("the two non-representable chains") {
  const Representability a = is_representable(kPeriodic);
  CHECK_FALSE(a.representable);
  CHECK(a.reason == Representability::Reason::PeriodicSkeleton);
  CHECK(a.witness == S("*~*~"));

  const Representability b = is_representable(kShared);
  CHECK_FALSE(b.representable);
  CHECK(b.reason == Representability::Reason::SharedSkeleton);
  CHECK(b.witness == S("**~*~"));
  CHECK(b.witness_elems.size() == 2);
}

TEST_CASE("an explicit embedding") {
  const Representability r = is_representable(generated(Chain(9), Elem(8, 9)).as_star_algebra());
  REQUIRE(r.representable);
  REQUIRE(r.embedding);
  CHECK(r.embedding->k == 9);
  CHECK(r.embedding->numerators ==
        std::vector<BigInt>{0, 1, 2, 4, 5, 7, 8, 9});
  Embedding broken = *r.embedding;
  broken.numerators[3] = 3;
  CHECK_FALSE(verify_embedding(generated(Chain(9), Elem(8, 9)).as_star_algebra(), broken));
}

TEST_CASE("R-equations") {
  const REquationReport a = check_r_equations(kPeriodic, 5);
  CHECK(a.r1_failures > 0);
  bool found = false;
  for (const REquationFailure& f : a.failures)
    found = found || (f.equation == "R1n" && f.r_seq == S("*~") && f.r == 2 &&
                      (f.x == 3 || f.x == 4));
  CHECK(found);

  const REquationReport b = check_r_equations(kShared, 13);
  CHECK(b.r2_failures > 0);
  CHECK(b.r1_failures == 0);
  found = false;
  for (const REquationFailure& f : b.failures)
    found = found || (f.equation == "R2n" && f.r_seq == S("**~*~"));
  CHECK(found);
}

TEST_CASE("representability agrees with the R-equations") {
  for (int n = 1; n <= 12; ++n)
    for (const Subalgebra& s : all_subalgebras(Chain(n))) {
      const AbstractIGChain c = s.as_star_algebra();
      const Representability r = is_representable(c);
      REQUIRE(r.representable);
      CHECK(verify_embedding(c, *r.embedding));
      CHECK(check_r_equations(c, c.top()).ok());
    }
  CHECK_FALSE(check_r_equations(kPeriodic, 5).ok());
  CHECK_FALSE(check_r_equations(kShared, 13).ok());
}
