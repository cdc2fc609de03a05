#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lukstar/subalgebra.hpp"

using namespace lukstar;

namespace {

std::vector<Elem> elems(int n, std::initializer_list<int> nums) {
  std::vector<Elem> v;
  for (int k : nums) v.emplace_back(k, n);
  return v;
}

// Closure by fixpoint iteration over a bitset; shares no code with the library.
std::set<int> closure(int n, std::set<int> s) {
  s.insert(0);
  s.insert(n);
  for (bool grew = true; grew;) {
    grew = false;
    for (int k : std::set<int>(s)) {
      for (int v : {n - k, std::max(0, 2 * k - n)})
        grew = s.insert(v).second || grew;
    }
  }
  return s;
}

std::set<int> as_set(const Subalgebra& s) {
  const auto v = s.numerators();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("procedure P") {
  const PSequence a = run_p(Chain(9), Elem(8, 9));
  CHECK(a.seq == elems(9, {8, 7, 5, 1}));
  const PSequence b = run_p(Chain(5), Elem(4, 5));
  CHECK(b.seq == elems(5, {4, 3, 1}));
  const PSequence c = run_p(Chain(3), Elem(2, 3));
  CHECK(c.seq == elems(3, {2, 1}));
  CHECK(c.loop_target == 1);
  CHECK_THROWS_AS(run_p(Chain(5), Elem(5, 5)), BoundaryElement);
  CHECK_THROWS_AS(run_p(Chain(5), Elem(0, 5)), BoundaryElement);
}

TEST_CASE("P terminates within n - 1 steps and closes its loop") {
  for (int n = 2; n <= 80; ++n) {
    const Chain ch(n);
    for (int k = 1; k < n; ++k) {
      const PSequence p = run_p(ch, ch.elem(k));
      REQUIRE(static_cast<int>(p.seq.size()) <= n - 1);
      const Elem last = p.seq.back();
      const Elem next = is_positive(last) ? star(last) : neg(last);
      CHECK(next == p.seq[p.loop_target - 1]);
    }
  }
}

TEST_CASE("P from the coatom ends at the atom for odd n") {
  for (int n = 3; n <= 301; n += 2) {
    const Chain ch(n);
    CHECK(run_p(ch, ch.coatom()).seq.back() == ch.atom());
  }
}

TEST_CASE("generated subalgebras") {
  CHECK(generated(Chain(9), Elem(8, 9)).elems() == elems(9, {0, 1, 2, 4, 5, 7, 8, 9}));
  CHECK(generated(Chain(17), Elem(16, 17)).elems() ==
        elems(17, {0, 1, 2, 4, 8, 9, 13, 15, 16, 17}));
  for (int n = 1; n <= 9; ++n) {
    CHECK(generated(Chain(n), Chain(n).one()).elems() == elems(n, {0, n}));
    CHECK(generated(Chain(n), Chain(n).zero()).elems() == elems(n, {0, n}));
  }
}

TEST_CASE("generated agrees with an independent closure and with negation") {
  for (int n = 1; n <= 40; ++n) {
    const Chain ch(n);
    for (int k = 0; k <= n; ++k) {
      const Subalgebra g = generated(ch, ch.elem(k));
      CHECK(as_set(g) == closure(n, {k}));
      CHECK(g == generated(ch, neg(ch.elem(k))));
    }
  }
}

TEST_CASE("generated_by_set") {
  CHECK(generated_by_set(Chain(4), elems(4, {2})).elems() == elems(4, {0, 2, 4}));
  CHECK(generated_by_set(Chain(6), {}).elems() == elems(6, {0, 6}));
  CHECK(generated_by_set(Chain(9), elems(9, {8})) == generated(Chain(9), Elem(8, 9)));
  CHECK(as_set(generated_by_set(Chain(12), elems(12, {7, 3}))) == closure(12, {7, 3}));
}

TEST_CASE("subalgebra constructor rejects non-closed sets") {
  CHECK_THROWS(Subalgebra(Chain(9), elems(9, {0, 8, 9})));
}

TEST_CASE("all_subalgebras") {
  auto sets = [](int n) {
    std::vector<std::vector<int>> v;
    for (const Subalgebra& s : all_subalgebras(Chain(n))) v.push_back(s.numerators());
    return v;
  };
  CHECK(sets(2) == std::vector<std::vector<int>>{{0, 2}, {0, 1, 2}});
  CHECK(sets(3) == std::vector<std::vector<int>>{{0, 3}, {0, 1, 2, 3}});
  const auto four = sets(4);
  CHECK(std::find(four.begin(), four.end(), std::vector<int>{0, 2, 4}) != four.end());
  CHECK(four.back() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(all_subalgebras(Chain(65)), BoundExceeded);
}

TEST_CASE("all_subalgebras matches closures of every subset") {
  for (int n = 1; n <= 14; ++n) {
    std::set<std::set<int>> expected;
    for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
      std::set<int> gens;
      for (int k = 0; k <= n; ++k)
        if (mask >> k & 1) gens.insert(k);
      expected.insert(closure(n, gens));
    }
    std::set<std::set<int>> got;
    for (const Subalgebra& s : all_subalgebras(Chain(n))) {
      // closed under neg and star
      for (const Elem& x : s.elems()) {
        CHECK(s.contains(neg(x)));
        CHECK(s.contains(star(x)));
      }
      CHECK(got.insert(as_set(s)).second);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("strict simplicity") {
  CHECK(is_strictly_simple(Chain(2)));
  CHECK_FALSE(is_strictly_simple(Chain(17)));
  CHECK_FALSE(is_strictly_simple(Chain(4)));
  CHECK(is_strictly_simple(Chain(11)));
  CHECK(is_strictly_simple_sub(generated(Chain(5), Elem(4, 5))));
  CHECK(is_strictly_simple_sub(generated(Chain(5), Elem(5, 5))));
  // <3/4>* contains {0, 1/2, 1}.
  CHECK_FALSE(is_strictly_simple_sub(generated(Chain(4), Elem(3, 4))));
  const Chain c18(17);
  CHECK_FALSE(is_strictly_simple_sub(generated_by_set(c18, c18.elements())));
}

TEST_CASE("strict simplicity is decided by the coatom for n != 4") {
  for (int n = 2; n <= 60; ++n) {
    if (n == 4) continue;
    const Chain ch(n);
    CHECK(is_strictly_simple(ch) == (generated(ch, ch.coatom()).size() == ch.size()));
  }
}

TEST_CASE("embedded MV-subchains stay closed") {
  for (int n = 2; n <= 60; ++n)
    for (int m = 1; m <= n; ++m) {
      if (n % m) continue;
      std::set<int> img;
      for (int k = 0; k <= m; ++k) img.insert(k * (n / m));
      CHECK(closure(n, img) == img);
    }
}
