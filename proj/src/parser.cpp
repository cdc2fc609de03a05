#include "lukstar/parser.hpp"

#include <cctype>
#include <unordered_map>

namespace lukstar {

namespace {

using Kind = Syntax::Kind;

std::shared_ptr<Syntax> node(Kind k, std::vector<SyntaxPtr> args = {}) {
  auto s = std::make_shared<Syntax>();
  s->kind = k;
  s->args = std::move(args);
  return s;
}

class Parser {
 public:
  explicit Parser(const std::string& t) : text_(t) {}

  SyntaxPtr run() {
    SyntaxPtr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(const std::string& tok) {
    skip();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  int integer() {
    skip();
    if (!at_digit()) fail("expected an integer");
    long v = 0;
    while (at_digit()) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  int optional_index() {
    // The index must follow the arrow directly: "-> 1" targets the constant.
    if (at_digit()) return integer();
    return -1;
  }

  SyntaxPtr expr() {
    SyntaxPtr lhs = unary();
    while (true) {
      skip();
      std::shared_ptr<Syntax> op;
      if (eat("|")) {
        op = node(Kind::Join);
      } else if (eat("&")) {
        op = node(Kind::Meet);
      } else if (eat("<->")) {
        op = node(Kind::Iff);
        op->index = optional_index();
      } else if (eat("->")) {
        op = node(Kind::Arrow);
        op->index = optional_index();
      } else if (eat("=>c")) {
        op = node(Kind::Crisp);
      } else if (eat("=>g")) {
        op = node(Kind::Goedel);
      } else {
        return lhs;
      }
      SyntaxPtr rhs = unary();
      op->args = {lhs, rhs};
      lhs = op;
    }
  }

  SyntaxPtr unary() {
    if (eat("~")) return node(Kind::Neg, {unary()});
    if (eat("*")) return node(Kind::Star, {unary()});
    return atom();
  }

  SyntaxPtr macro(Kind k) {
    expect("[");
    const int a = integer();
    expect("/");
    const std::size_t at = pos_;
    const int b = integer();
    if (b == 0) {
      pos_ = at;
      fail("zero denominator");
    }
    expect("]");
    expect("(");
    SyntaxPtr arg = expr();
    expect(")");
    auto s = node(k, {arg});
    s->num = a;
    s->den = b;
    return s;
  }

  SyntaxPtr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat("(")) {
      SyntaxPtr e = expr();
      expect(")");
      return e;
    }
    if (eat("D")) return macro(Kind::Delta);
    if (eat("X")) return macro(Kind::Chi);
    if (eat("p")) {
      auto s = node(Kind::Var);
      s->var = integer();
      return s;
    }
    if (at_digit()) {
      const std::size_t at = pos_;
      const int v = integer();
      if (v == 0) return node(Kind::Zero);
      if (v == 1) return node(Kind::One);
      pos_ = at;
      fail("only the constants 0 and 1 are allowed");
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Syntax::to_string() const {
  auto bin = [&](const std::string& op) {
    return "(" + args[0]->to_string() + " " + op + " " + args[1]->to_string() + ")";
  };
  auto idx = [&] { return index < 0 ? std::string() : std::to_string(index); };
  switch (kind) {
    case Kind::Var: return "p" + std::to_string(var);
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Neg: return "~" + args[0]->to_string();
    case Kind::Star: return "*" + args[0]->to_string();
    case Kind::Join: return bin("|");
    case Kind::Meet: return bin("&");
    case Kind::Arrow: return bin("->" + idx());
    case Kind::Iff: return bin("<->" + idx());
    case Kind::Crisp: return bin("=>c");
    case Kind::Goedel: return bin("=>g");
    case Kind::Delta:
    case Kind::Chi:
      return std::string(kind == Kind::Delta ? "D[" : "X[") + std::to_string(num) +
             "/" + std::to_string(den) + "](" + args[0]->to_string() + ")";
  }
  return {};
}

SyntaxPtr parse(const std::string& text) { return Parser(text).run(); }

Formula expand(const SyntaxPtr& root, const Connectives& c, int default_i) {
  const int n = c.n();
  std::unordered_map<const Syntax*, Formula> memo;

  auto param = [&](const Syntax& s) {
    // a/b names k/n iff a*n is divisible by b and the value is in [0,1].
    if (s.num > s.den || (static_cast<long>(s.num) * n) % s.den != 0)
      throw OutOfRange(std::to_string(s.num) + "/" + std::to_string(s.den) +
                       " is not an element of L_" + std::to_string(n + 1));
    return static_cast<int>(static_cast<long>(s.num) * n / s.den);
  };
  auto filter = [&](const Syntax& s) {
    const int i = s.index < 0 ? default_i : s.index;
    if (i < 1 || i > n)
      throw OutOfRange("filter index " + std::to_string(i) + " outside 1.." +
                       std::to_string(n));
    return i;
  };

  auto go = [&](auto& self, const SyntaxPtr& s) -> Formula {
    auto it = memo.find(s.get());
    if (it != memo.end()) return it->second;
    auto arg = [&](int k) { return self(self, s->args[k]); };
    Formula r = Formula::zero();
    switch (s->kind) {
      case Kind::Var: r = Formula::var(s->var); break;
      case Kind::Zero: r = Formula::zero(); break;
      case Kind::One: r = Formula::one(); break;
      case Kind::Neg: r = neg(arg(0)); break;
      case Kind::Star: r = star(arg(0)); break;
      case Kind::Join: r = join(arg(0), arg(1)); break;
      case Kind::Meet: r = meet(arg(0), arg(1)); break;
      case Kind::Arrow: r = c.arrow(filter(*s), arg(0), arg(1)); break;
      case Kind::Iff: r = c.iff(filter(*s), arg(0), arg(1)); break;
      case Kind::Crisp: r = c.crisp_imp(arg(0), arg(1)); break;
      case Kind::Goedel: r = c.goedel_imp(arg(0), arg(1)); break;
      case Kind::Delta: r = c.delta(param(*s), arg(0)); break;
      case Kind::Chi: r = c.chi(param(*s), arg(0)); break;
    }
    memo.emplace(s.get(), r);
    return r;
  };
  return go(go, root);
}

Formula parse_formula(const std::string& text, const Connectives& c,
                      int default_i) {
  return expand(parse(text), c, default_i);
}

}  // namespace lukstar
