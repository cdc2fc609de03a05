#include "lukstar/axioms.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace lukstar {

void CheckReport::merge(const CheckReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  checked += other.checked;
}

namespace {

const Formula A = Formula::var(0);
const Formula B = Formula::var(1);
const Formula G = Formula::var(2);

std::string frac(int k, int n) { return std::to_string(k) + "/" + std::to_string(n); }

class SchemaChecker {
 public:
  explicit SchemaChecker(const Matrix& m) : m_(m), c_(m.n) {}

  const Connectives& c() const { return c_; }
  int n() const { return m_.n; }
  int i() const { return m_.i; }

  Formula to(const Formula& f, const Formula& g) const { return c_.arrow(m_.i, f, g); }
  Formula iff(const Formula& f, const Formula& g) const { return c_.iff(m_.i, f, g); }
  Formula D(int a, const Formula& f) const { return c_.delta(a, f); }
  Formula X(int a, const Formula& f) const { return c_.chi(a, f); }
  Formula crisp(const Formula& f, const Formula& g) const { return c_.crisp_imp(f, g); }

  void valid(const std::string& item, const std::string& params, const Formula& f) {
    consequence_holds(item, params, {}, f);
  }

  void consequence_holds(const std::string& item, const std::string& params,
                         const std::vector<Formula>& premises, const Formula& f) {
    const Verdict v = consequence(m_, premises, f);
    ++report.checked;
    if (v.holds) return;
    Failure fl{item, params, {}};
    for (const Elem& e : *v.countermodel) fl.valuation.push_back(e.num);
    report.failures.push_back(std::move(fl));
  }

  std::string a(int k) const { return "a=" + frac(k, m_.n); }
  std::string ab(int k, int l) const { return a(k) + " b=" + frac(l, m_.n); }

  CheckReport report;

 private:
  Matrix m_;
  Connectives c_;
};

int luk_star(int a, int n) { return std::max(0, 2 * a - n); }

}  // namespace

CheckReport check_hilbert_axioms(const Matrix& m) {
  SchemaChecker s(m);
  const int n = m.n;
  auto to = [&](const Formula& f, const Formula& g) { return s.to(f, g); };
  auto iff = [&](const Formula& f, const Formula& g) { return s.iff(f, g); };

  s.valid("CPL1", "", to(A, join(A, B)));
  s.valid("CPL2", "", to(A, join(B, A)));
  s.valid("CPL3", "", to(to(A, G), to(to(B, G), to(join(A, B), G))));
  s.valid("CPL4", "", to(A, to(B, A)));
  s.valid("CPL5", "", to(to(A, B), to(to(B, G), to(A, G))));
  s.valid("CPL6", "", join(A, to(A, B)));

  s.valid("Ax1", "", to(iff(A, B), iff(neg(A), neg(B))));
  s.valid("Ax2", "", iff(neg(neg(A)), A));
  s.valid("Ax3", "", to(neg(join(A, B)), neg(A)));
  s.valid("Ax4", "", to(neg(A), to(neg(B), neg(join(A, B)))));

  for (int a = 0; a <= n; ++a) {
    const Formula da = s.D(a, A);
    // Delta_0 is constantly 1, so a = 0 would contradict the definition.
    for (int b = 0; b <= n && a > 0; ++b)
      s.valid("Ax5", s.ab(a, b), iff(s.D(a, s.D(b, A)), s.D(b, A)));
    s.valid("Ax6", s.a(a), join(da, neg(da)));
    if (a < n) s.valid("Ax7", s.a(a), to(s.D(a + 1, A), da));
    s.valid("Ax8", s.a(a), iff(s.D(a, join(A, B)), join(da, s.D(a, B))));
    if (a < n) s.valid("Ax9", s.a(a), iff(s.D(n - a, neg(A)), neg(s.D(a + 1, A))));
    s.valid("Ax11", s.a(a), to(da, s.D(luk_star(a, n), star(A))));
    if (a < n)
      s.valid("Ax12", s.a(a), to(s.D(luk_star(a, n) + 1, star(A)), s.D(a + 1, A)));
  }
  s.valid("Ax10", "", to(s.D(m.i, A), A));

  s.consequence_holds("MP", "", {A, to(A, B)}, B);
  return std::move(s.report);
}

CheckReport check_ax1_boolean(const Matrix& m) {
  SchemaChecker s(m);
  for (int a = 0; a <= m.n; ++a)
    for (int b = 0; b <= m.n; ++b) {
      const Formula x = s.D(a, A), y = s.D(b, B);
      s.valid("Ax1", s.ab(a, b), s.to(s.iff(x, y), s.iff(neg(x), neg(y))));
    }
  return std::move(s.report);
}

CheckReport check_lemma_theorems(const Matrix& m) {
  SchemaChecker s(m);
  const int n = m.n;
  auto to = [&](const Formula& f, const Formula& g) { return s.to(f, g); };
  auto iff = [&](const Formula& f, const Formula& g) { return s.iff(f, g); };
  auto D = [&](int a, const Formula& f) { return s.D(a, f); };
  auto X = [&](int a, const Formula& f) { return s.X(a, f); };

  std::vector<Formula> chis;
  for (int a = 0; a <= n; ++a) chis.push_back(X(a, A));
  s.valid("(viii)", "", join_all(chis));
  s.valid("(v)", "", to(A, D(m.i, A)));
  s.valid("(vi)", "", to(meet(A, s.c().strong_neg(m.i, A)), B));

  for (int a = 0; a <= n; ++a) {
    s.valid("(i)", s.a(a), to(D(a, A), to(neg(D(a, A)), B)));
    if (a < n) {
      s.valid("(ii)", s.a(a), to(D(a + 1, A), to(D(n - a, neg(A)), B)));
      s.valid("(iii)", s.a(a), join(D(a + 1, A), D(n - a, neg(A))));
    }
    s.valid("(iv)", s.a(a), iff(D(a, A), D(a, neg(neg(A)))));
    s.valid("(vii)", s.a(a), to(X(a, join(A, B)), join(X(a, A), X(a, B))));
    s.valid("(xii)", s.a(a), iff(X(a, A), X(n - a, neg(A))));
    s.valid("(xiii)", s.a(a), to(X(a, A), X(luk_star(a, n), star(A))));
    s.valid("(xv)", s.a(a),
            iff(D(a, A), join_all({chis.begin() + a, chis.end()})));
    for (int b = 0; b <= n; ++b) {
      if (a != b) s.valid("(ix)", s.ab(a, b), to(meet(X(a, A), X(b, A)), B));
      s.valid("(x)", s.ab(a, b),
              iff(to(D(a, A), D(b, B)), to(neg(D(b, B)), neg(D(a, A)))));
      s.valid("(xi)", s.ab(a, b),
              to(meet(X(a, A), X(b, B)), X(std::max(a, b), join(A, B))));
      // Delta_b evaluated at the parameter a is 0 or 1.
      const int db = a >= b ? n : 0;
      s.valid("(xiv)", s.ab(a, b), to(X(a, A), X(db, D(b, A))));
      if (b >= a) s.valid("(xvi)", s.ab(a, b), to(D(b, A), D(a, A)));
    }
  }
  return std::move(s.report);
}

CheckReport check_crisp_star_theorems(const Matrix& m) {
  SchemaChecker s(m);
  s.valid("crisp-star", "", s.crisp(star(A), A));
  s.valid("crisp-mono", "",
          s.to(s.crisp(A, B), s.crisp(star(A), star(B))));
  return std::move(s.report);
}

CheckReport check_lambda_equations(const StarAlgebra& alg, int n) {
  LUKSTAR_EXPECT(alg.size() == n + 1);
  const Connectives c(n);
  const int top = alg.top();
  CheckReport r;

  auto D = [&](int a, int x) { return c.delta_term(a).apply(alg, x); };
  auto baaz = [&](int x) { return x == top ? top : 0; };
  auto imp = [&](int x, int y) { return x <= y ? top : y; };  // Goedel
  auto check = [&](const char* item, int a, std::vector<int> xs, bool ok) {
    ++r.checked;
    if (!ok)
      r.failures.push_back(
          {item, a < 0 ? std::string() : "a=" + frac(a, n), std::move(xs)});
  };

  for (int x = 0; x <= top; ++x) {
    check("Eq1", -1, {x}, D(n, x) == baaz(x) && D(0, x) == top);
    for (int y = 0; y <= top; ++y)
      check("Eq7", -1, {x, y},
            imp(baaz(imp(x, y)), imp(alg.star(x), alg.star(y))) == top);
  }
  for (int a = 0; a <= n; ++a) {
    for (int x = 0; x <= top; ++x) {
      for (int b = 0; b <= n && a > 0; ++b)  // Eq1 fixes Delta_0 = 1
        check("Eq2", a, {x, b}, D(a, D(b, x)) == D(b, x));
      check("Eq3", a, {x}, std::max(D(a, x), alg.inv(D(a, x))) == top);
      if (a < n) {
        check("Eq4", a, {x}, imp(D(a + 1, x), D(a, x)) == top);
        check("Eq6", a, {x}, imp(D(n - a, alg.inv(x)), alg.inv(D(a + 1, x))) == top);
        check("Eq9", a, {x},
              imp(D(luk_star(a, n) + 1, alg.star(x)), D(a + 1, x)) == top);
      }
      check("Eq8", a, {x}, imp(D(a, x), D(luk_star(a, n), alg.star(x))) == top);
      for (int y = 0; y <= top; ++y)
        check("Eq5", a, {x, y}, D(a, std::max(x, y)) == std::max(D(a, x), D(a, y)));
    }
  }
  return r;
}

std::vector<Sample> random_samples(std::uint32_t seed, int count, int depth,
                                   int vars) {
  std::mt19937 rng(seed);
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  std::function<Formula(int)> gen = [&](int d) -> Formula {
    if (d == 0 || pick(4) == 0) {
      const int leaf = pick(vars + 2);
      if (leaf == vars) return Formula::zero();
      if (leaf == vars + 1) return Formula::one();
      return Formula::var(leaf);
    }
    switch (pick(3)) {
      case 0: return neg(gen(d - 1));
      case 1: return star(gen(d - 1));
      default: {
        Formula l = gen(d - 1);
        return join(l, gen(d - 1));
      }
    }
  };
  std::vector<Sample> out;
  for (int k = 0; k < count; ++k) {
    Sample s{{}, Formula::zero()};
    const int premises = pick(3);
    for (int p = 0; p < premises; ++p) s.premises.push_back(gen(depth));
    s.goal = gen(depth);
    out.push_back(std::move(s));
  }
  return out;
}

CheckReport check_translations(int n, int i, const std::vector<Sample>& samples) {
  const Matrix mn(n, n), mi(n, i);
  const Connectives c(n);
  auto tau1 = [&](const Formula& f) { return c.delta(n, f); };
  auto tau2 = [&](const Formula& f) { return c.delta(i, f); };
  auto map = [](const std::vector<Formula>& fs, auto t) {
    std::vector<Formula> out;
    for (const Formula& f : fs) out.push_back(t(f));
    return out;
  };

  CheckReport r;
  auto check = [&](const char* item, std::size_t k, bool ok) {
    ++r.checked;
    if (!ok) r.failures.push_back({item, "sample=" + std::to_string(k), {}});
  };
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Sample& s = samples[k];
    check("tau1", k,
          consequence(mn, s.premises, s.goal).holds ==
              consequence(mi, map(s.premises, tau1), tau1(s.goal)).holds);
    check("tau2", k,
          consequence(mi, s.premises, s.goal).holds ==
              consequence(mn, map(s.premises, tau2), tau2(s.goal)).holds);
    const Formula back_n = tau2(tau1(s.goal));
    check("round-trip-n", k,
          consequence(mn, {s.goal}, back_n).holds &&
              consequence(mn, {back_n}, s.goal).holds);
    const Formula back_i = tau1(tau2(s.goal));
    check("round-trip-i", k,
          consequence(mi, {s.goal}, back_i).holds &&
              consequence(mi, {back_i}, s.goal).holds);
  }
  return r;
}

}  // namespace lukstar
