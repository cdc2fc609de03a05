#include "lukstar/skeleton.hpp"

#include <algorithm>
#include <cctype>

namespace lukstar {

std::string to_string(const SkSeq& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += s[k] == Sym::STAR ? "*" : "~";
  }
  return out + "]";
}

SkSeq parse_skseq(const std::string& text) {
  SkSeq s;
  for (std::size_t k = 0; k < text.size();) {
    const char ch = text[k];
    if (ch == '*') {
      s.push_back(Sym::STAR);
      ++k;
    } else if (ch == '~') {
      s.push_back(Sym::INV);
      ++k;
    } else if (text.compare(k, 4, "STAR") == 0) {
      s.push_back(Sym::STAR);
      k += 4;
    } else if (text.compare(k, 3, "INV") == 0) {
      s.push_back(Sym::INV);
      k += 3;
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' ||
               ch == '[' || ch == ']') {
      ++k;
    } else {
      throw MalformedSequence("unexpected '" + std::string(1, ch) +
                              "' in sequence at offset " + std::to_string(k));
    }
  }
  return s;
}

bool is_well_formed(const SkSeq& s) {
  if (s.empty() || s.front() != Sym::STAR) return false;
  bool has_inv = false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != Sym::INV) continue;
    has_inv = true;
    if (k + 1 < s.size() && s[k + 1] == Sym::INV) return false;
  }
  return has_inv;
}

SkSeq repeat(const SkSeq& s, int times) {
  SkSeq out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), s.begin(), s.end());
  return out;
}

bool is_periodic(const SkSeq& s) {
  const std::size_t n = s.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t k = p; k < n && ok; ++k) ok = s[k] == s[k - p];
    if (ok) return true;
  }
  return false;
}

SkSeq skeleton(const StarAlgebra& alg, int a) {
  if (!alg.interior(a) || !alg.positive(a))
    throw BoundaryElement("skeletons start at a positive element other than 1");
  const PRun r = run_p(alg, a);
  SkSeq s;
  for (bool st : r.starred) s.push_back(st ? Sym::STAR : Sym::INV);
  return s;
}

Rational PLMap::operator()(const Rational& x) const {
  if (increasing) {
    if (x <= lo) return 0;
    if (x >= hi) return 1;
    return (x - lo) / (hi - lo);
  }
  if (x <= lo) return 1;
  if (x >= hi) return 0;
  return (hi - x) / (hi - lo);
}

PLMap plmap_of(const SkSeq& s) {
  PLMap f;
  for (Sym o : s) {
    if (o == Sym::INV) {
      f.increasing = !f.increasing;
    } else if (f.increasing) {
      f.lo = (f.lo + f.hi) / 2;  // f(x) <= 1/2 below the midpoint
    } else {
      f.hi = (f.lo + f.hi) / 2;
    }
  }
  return f;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // g is clamped affine, so g o f is too; its breakpoints are the f-preimages
  // of g's breakpoints.
  auto pre = [&](const Rational& d) -> Rational {
    if (f.increasing) return f.lo + d * (f.hi - f.lo);
    return f.hi - d * (f.hi - f.lo);
  };
  PLMap h;
  h.increasing = f.increasing == g.increasing;
  Rational a = pre(g.lo), b = pre(g.hi);
  if (a > b) std::swap(a, b);
  h.lo = a;
  h.hi = b;
  return h;
}

Rational fixed_point(const SkSeq& s) {
  if (!is_well_formed(s))
    throw MalformedSequence(to_string(s) + " is not an sk-sequence");
  const PLMap f = plmap_of(s);
  const Rational& a = f.lo;
  const Rational& b = f.hi;
  if (f.increasing) return a / (1 - b + a);
  return b / (1 + b - a);
}

Rational solve_preimage(const SkSeq& s, const Rational& d) {
  if (d <= 0 || d >= 1)
    throw OutOfRange("preimages are unique only for 0 < d < 1");
  const PLMap f = plmap_of(s);
  if (f.increasing) return (f.hi - f.lo) * d + f.lo;
  return f.lo + (1 - d) * (f.hi - f.lo);
}

Rational star(const Rational& x) {
  const Rational y = 2 * x - 1;
  return y > 0 ? y : Rational(0);
}

Rational inv(const Rational& x) { return 1 - x; }

}  // namespace lukstar
