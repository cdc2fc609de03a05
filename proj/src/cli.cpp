#include "lukstar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lukstar/acceptance.hpp"
#include "lukstar/parser.hpp"
#include "lukstar/serialize.hpp"

namespace lukstar {

UnaryTerm parse_unary_term(const std::string& text) {
  UnaryTerm t;
  if (text == "id") return t;
  std::vector<UnOp> outer_first;
  std::size_t k = 0;
  while (k < text.size()) {
    UnOp op;
    switch (text[k]) {
      case '*': op = UnOp::STAR; break;
      case '+': op = UnOp::PLUS; break;
      case '~': op = UnOp::NEG; break;
      case ' ': ++k; continue;
      default: throw SyntaxError("expected '*', '+' or '~'", k);
    }
    ++k;
    int times = 1;
    if (k < text.size() && text[k] == '^') {
      const std::size_t start = ++k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == start || k - start > 4) throw SyntaxError("bad exponent", start);
      times = std::stoi(text.substr(start, k - start));
    }
    outer_first.insert(outer_first.end(), times, op);
  }
  if (outer_first.empty()) throw SyntaxError("empty term", 0);
  t.ops.assign(outer_first.rbegin(), outer_first.rend());
  return t;
}

namespace {

// Aligned "label  v0 v1 ... vn" rows of numerators.
class ValueTable {
 public:
  explicit ValueTable(int n) : n_(n) {}
  void add(std::string label, std::vector<int> values) {
    rows_.emplace_back(std::move(label), std::move(values));
  }
  void print(std::ostream& os) const {
    std::size_t lw = 1;
    for (const auto& [l, v] : rows_) lw = std::max(lw, l.size());
    const int cw = static_cast<int>(std::to_string(n_).size()) + 1;
    os << "numerators over " << n_ << "\n" << std::left << std::setw(lw) << "x";
    for (int k = 0; k <= n_; ++k) os << std::right << std::setw(cw) << k;
    os << "\n";
    for (const auto& [l, v] : rows_) {
      os << std::left << std::setw(lw) << l;
      for (int x : v) os << std::right << std::setw(cw) << x;
      os << "\n";
    }
  }
  Json to_json() const {
    Json rows = Json::array();
    for (const auto& [l, v] : rows_) rows.push_back({{"term", l}, {"values", v}});
    return rows;
  }

 private:
  int n_;
  std::vector<std::pair<std::string, std::vector<int>>> rows_;
};

std::vector<int> row_of(const UnaryTerm& t, const Chain& c) {
  std::vector<int> v;
  for (const Elem& x : c.elements()) v.push_back(t.apply(x).num);
  return v;
}

std::string set_string(const std::vector<int>& nums, int n) {
  std::string s = "{";
  for (std::size_t k = 0; k < nums.size(); ++k) s += (k ? "," : "") + std::to_string(nums[k]);
  return s + "}/" + std::to_string(n);
}

std::string valuation_string(const Valuation& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? " " : "") + std::string("p") + std::to_string(k) + "=" + to_string(v[k]);
  return s;
}

std::string pi_reason(const PiVerdict& v) {
  if (!v.prime) return "not prime";
  if (v.n == 2) return "even";
  if (v.in_pi) return "in Pi";
  return "not in Pi: 2^" + std::to_string(*v.witness_m) + " = " +
         (*v.sign > 0 ? "+1" : "-1") + " mod " + std::to_string(v.n);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OutOfRange("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw OutOfRange(path + ": " + e.what());
  }
}

void print_report(std::ostream& os, const std::string& name, const CheckReport& r,
                  std::size_t show = 10) {
  os << name << ": " << r.checked << " instances, " << r.failures.size() << " invalid\n";
  for (std::size_t k = 0; k < r.failures.size() && k < show; ++k) {
    const Failure& f = r.failures[k];
    os << "  " << f.item;
    if (!f.params.empty()) os << " [" << f.params << "]";
    os << " fails at (";
    for (std::size_t j = 0; j < f.valuation.size(); ++j) os << (j ? "," : "") << f.valuation[j];
    os << ")\n";
  }
  if (r.failures.size() > show) os << "  ... " << r.failures.size() - show << " more\n";
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& j) const { out << j.dump() << "\n"; }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Lukasiewicz chains with the square operator", "lukstar"};
  app.require_subcommand(1, 1);
  Ctx ctx{out, err};
  std::function<int()> action;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--json", ctx.json, "machine-readable output");
    return s;
  };
  auto chain_n = [](CLI::App* s, int& n) {
    s->add_option("--n", n, "chain L_{n+1}")->required()->check(CLI::Range(1, 100000));
  };

  // table ------------------------------------------------------------------
  int n = 0, a = 0, i = 0;
  std::vector<std::string> terms;
  auto* table = sub("table", "unary operation table of L*_{n+1}");
  chain_n(table, n);
  table->add_option("--term", terms, "rows as terms, e.g. \"+*^2+*\" (default ~, *, +)")
      ->allow_extra_args(false);
  table->callback([&] {
    action = [&] {
      const Chain c(n);
      std::vector<std::string> rows = terms.empty() ? std::vector<std::string>{"~", "*", "+"}
                                                    : terms;
      ValueTable t(n);
      for (const std::string& r : rows) {
        const UnaryTerm u = parse_unary_term(r);
        t.add(u.to_string() + "x", row_of(u, c));
      }
      if (ctx.json) ctx.emit({{"n", n}, {"rows", t.to_json()}});
      else t.print(out);
      return kExitOk;
    };
  });

  // subalgebras / strictly-simple ----------------------------------------------
  auto* subs = sub("subalgebras", "every subalgebra of L*_{n+1}");
  chain_n(subs, n);
  subs->callback([&] {
    action = [&] {
      const auto all = all_subalgebras(Chain(n));
      Json arr = Json::array();
      for (const Subalgebra& s : all) {
        const bool ss = is_strictly_simple_sub(s);
        if (ctx.json) {
          Json j = to_json(s);
          j["strictly_simple"] = ss;
          arr.push_back(j);
        } else {
          out << set_string(s.numerators(), n) << "  " << s.size() << " elements"
              << (ss && s.size() > 2 ? ", strictly simple" : "") << "\n";
        }
      }
      if (ctx.json) ctx.emit(arr);
      else out << all.size() << " subalgebras\n";
      return kExitOk;
    };
  });

  auto* ss = sub("strictly-simple", "is L*_{n+1} strictly simple");
  chain_n(ss, n);
  ss->callback([&] {
    action = [&] {
      const Chain c(n);
      const bool yes = is_strictly_simple(c);
      std::optional<Subalgebra> witness;
      for (int k = n - 1; !yes && k > 0 && !witness; --k) {
        Subalgebra g = generated(c, c.elem(k));
        if (g.size() != c.size()) witness = std::move(g);
      }
      if (ctx.json) {
        Json j{{"n", n}, {"strictly_simple", yes}};
        if (witness) j["witness"] = to_json(*witness);
        ctx.emit(j);
      } else {
        out << "L*_" << n + 1 << (yes ? " is" : " is not") << " strictly simple";
        if (witness)
          out << ": <" << to_string(witness->elems()[witness->size() - 2])
              << ">* = " << set_string(witness->numerators(), n);
        out << "\n";
      }
      return kExitOk;
    };
  });

  // classify -----------------------------------------------------------------
  std::int64_t cn = 0, below = 0;
  auto* cls = sub("classify", "primality, membership in Pi, term-equivalence");
  auto* opt_n = cls->add_option("--n", cn, "single n")->check(CLI::Range(std::int64_t{1},
                                                                          std::int64_t{1} << 40));
  auto* opt_b = cls->add_option("--below", below, "list Pi below L")
                    ->check(CLI::Range(std::int64_t{0}, std::int64_t{10'000'000}));
  opt_n->excludes(opt_b);
  cls->callback([&] {
    if (!*opt_n && !*opt_b) throw CLI::RequiredError("--n or --below");
    action = [&] {
      if (*opt_b) {
        const auto ps = pi_below(below);
        if (ctx.json) {
          ctx.emit({{"below", below}, {"count", ps.size()}, {"primes", ps}});
        } else {
          for (std::size_t k = 0; k < ps.size(); ++k) out << (k ? ", " : "") << ps[k];
          out << "\n" << ps.size() << " primes in Pi below " << below << "\n";
        }
        return kExitOk;
      }
      const PiVerdict v = in_pi(cn);
      if (ctx.json) {
        ctx.emit(to_json(v));
      } else {
        out << "n = " << cn << ": " << pi_reason(v) << "; L_" << cn + 1 << " and L*_" << cn + 1
            << (term_equivalent(cn) ? " are" : " are not") << " term-equivalent";
        if (is_fermat_prime(cn)) out << "; Fermat prime";
        out << "\n";
      }
      return kExitOk;
    };
  });

  // synth-delta / synth-imp ------------------------------------------------------
  auto* sd = sub("synth-delta", "term for Delta_{a/n}");
  chain_n(sd, n);
  sd->add_option("--a", a, "numerator of a")->required();
  sd->callback([&] {
    action = [&] {
      const Chain c(n);
      if (a < 0 || a > n) throw OutOfRange("--a must lie in 0..n");
      const DeltaTerm d = synth_delta(c, c.elem(a));
      ValueTable t(n);
      // Every prefix of the composition, innermost first, as in a worked table.
      UnaryTerm prefix;
      for (UnOp op : d.term.ops) {
        prefix.ops.push_back(op);
        t.add(prefix.to_string() + "x", row_of(prefix, c));
      }
      if (d.total) {
        std::vector<int> ones(n + 1, n);
        t.add(d.to_string(), ones);
      }
      if (ctx.json) {
        ctx.emit({{"n", n}, {"a", a}, {"delta", to_json(d)}, {"rows", t.to_json()}});
      } else {
        out << d.to_string() << "\n";
        out << "ops (innermost first): " << to_json(d.term).dump() << "\n";
        t.print(out);
      }
      return kExitOk;
    };
  });

  auto* si = sub("synth-imp", "Lukasiewicz implication as a term of L*_{n+1}");
  chain_n(si, n);
  si->callback([&] {
    action = [&] {
      const Chain c(n);
      try {
        const Formula f = synth_luk_imp(c);
        int wrong = 0;
        for (const Elem& x : c.elements())
          for (const Elem& y : c.elements())
            if (eval(f, c, {x, y}) != luk_imp(x, y)) ++wrong;
        if (ctx.json)
          ctx.emit({{"n", n},
                    {"term_equivalent", true},
                    {"formula", f.to_string()},
                    {"dag_size", f.dag_size()},
                    {"verified", wrong == 0}});
        else
          out << f.to_string() << "\n"
              << "DAG size " << f.dag_size() << "; " << (wrong ? "WRONG on " : "agrees with ")
              << (wrong ? std::to_string(wrong) + " of " : std::string("min(1, 1-x+y) on all "))
              << (n + 1) * (n + 1) << " pairs\n";
        return wrong ? kExitFailure : kExitOk;
      } catch (const NotTermEquivalent& e) {
        if (ctx.json)
          ctx.emit({{"n", n},
                    {"term_equivalent", false},
                    {"classification", to_json(e.verdict())}});
        else
          out << "L_" << n + 1 << " and L*_" << n + 1
              << " are not term-equivalent (" << pi_reason(e.verdict()) << ")\n";
        return kExitOk;
      }
    };
  });

  // valid / conseq ---------------------------------------------------------------
  std::string formula;
  std::vector<std::string> premises;
  auto matrix_opts = [&](CLI::App* s) {
    chain_n(s, n);
    s->add_option("--i", i, "designated values are those >= i/n")->required();
    s->add_option("formula", formula, "goal formula")->required();
  };
  auto verdict_out = [&](const Verdict& v, const Json& head) {
    if (ctx.json) {
      Json j = head;
      const Json body = to_json(v);
      for (const auto& [k, val] : body.items()) j[k] = val;
      ctx.emit(j);
    } else {
      out << (v.holds ? "holds" : "does not hold") << " (" << v.valuations << " valuations)";
      if (v.countermodel) out << "; countermodel " << valuation_string(*v.countermodel);
      out << "\n";
    }
    return kExitOk;
  };

  auto* val = sub("valid", "is a formula valid in the matrix (L*_{n+1}, >= i/n)");
  matrix_opts(val);
  val->callback([&] {
    action = [&] {
      const Matrix m(n, i);
      const Connectives c(n);
      const Formula f = parse_formula(formula, c, i);
      return verdict_out(is_valid(m, f), {{"n", n}, {"i", i}, {"formula", formula}});
    };
  });

  auto* con = sub("conseq", "does the goal follow from the premises");
  matrix_opts(con);
  con->add_option("--premise", premises, "premise formula (repeatable)")
      ->allow_extra_args(false);
  con->callback([&] {
    action = [&] {
      const Matrix m(n, i);
      const Connectives c(n);
      std::vector<Formula> ps;
      for (const auto& p : premises) ps.push_back(parse_formula(p, c, i));
      const Formula g = parse_formula(formula, c, i);
      return verdict_out(consequence(m, ps, g),
                         {{"n", n}, {"i", i}, {"premises", premises}, {"goal", formula}});
    };
  });

  // check-axioms / check-equations ------------------------------------------------
  auto* ca = sub("check-axioms", "axiom schemas, derived theorems and =>c properties");
  chain_n(ca, n);
  ca->add_option("--i", i, "filter index")->required();
  ca->callback([&] {
    action = [&] {
      const Matrix m(n, i);
      const CheckReport h = check_hilbert_axioms(m), l = check_lemma_theorems(m),
                        cr = check_crisp_star_theorems(m);
      const bool ok = h.ok() && l.ok() && cr.ok();
      if (ctx.json) {
        ctx.emit({{"n", n}, {"i", i}, {"ok", ok}, {"axioms", to_json(h)},
                  {"theorems", to_json(l)}, {"crisp", to_json(cr)}});
      } else {
        print_report(out, "axioms", h);
        print_report(out, "theorems (i)-(xvi)", l);
        print_report(out, "=>c properties", cr);
      }
      return ok ? kExitOk : kExitFailure;
    };
  });

  std::string star_list;
  auto* ce = sub("check-equations", "Eq1-Eq9 on L*_{n+1} or on a given star table");
  ce->add_option("--n", n, "chain L_{n+1}")->required()->check(CLI::Range(1, 2000));
  ce->add_option("--star", star_list, "comma-separated star table replacing the standard one");
  ce->callback([&] {
    action = [&] {
      StarAlgebra alg = StarAlgebra::lukasiewicz(Chain(n));
      if (!star_list.empty()) {
        std::vector<int> t;
        std::stringstream ss(star_list);
        for (std::string cell; std::getline(ss, cell, ',');) {
          std::size_t used = 0;
          int v = 0;
          try {
            v = std::stoi(cell, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || v < 0 || v > n) throw OutOfRange("bad star entry '" + cell + "'");
          t.push_back(v);
        }
        if (static_cast<int>(t.size()) != n + 1)
          throw OutOfRange("--star needs n+1 = " + std::to_string(n + 1) + " entries");
        alg = StarAlgebra(std::move(t));
      }
      const CheckReport r = check_lambda_equations(alg, n);
      if (ctx.json) ctx.emit(to_json(r));
      else print_report(out, "equations", r);
      return r.ok() ? kExitOk : kExitFailure;
    };
  });

  // skfix / igstar ---------------------------------------------------------------
  std::string seq_text;
  auto* sk = sub("skfix", "fixed point of an sk-sequence");
  sk->add_option("sequence", seq_text, "e.g. \"**~\" or \"[*,*,~]\"")->required();
  sk->callback([&] {
    action = [&] {
      const SkSeq s = parse_skseq(seq_text);
      const Rational f = fixed_point(s);
      if (ctx.json) ctx.emit({{"sequence", to_json(s)}, {"fixed_point", to_string(f)}});
      else out << to_string(f) << "\n";
      return kExitOk;
    };
  });

  auto* ig = sub("igstar", "abstract IG-star chains given as JSON files");
  ig->require_subcommand(1, 1);
  std::string file;
  int elem = -1;
  auto ig_sub = [&](const char* name, const char* help) {
    CLI::App* s = ig->add_subcommand(name, help);
    s->add_flag("--json", ctx.json, "machine-readable output");
    s->add_option("file", file, "{\"size\": m+1, \"star\": [...]}")->required();
    return s;
  };

  auto* igv = ig_sub("validate", "check the star and IG equations");
  igv->callback([&] {
    action = [&] {
      const AbstractIGChain c = igchain_from_json(read_json_file(file));
      const IGReport r = validate_igstar(c);
      if (ctx.json) {
        ctx.emit(to_json(r));
      } else if (r.ok()) {
        out << "IG-star chain with " << c.size() << " elements\n";
      } else {
        for (const Violation& v : r.violations) {
          out << v.item << " fails at";
          for (int e : v.elems) out << " " << e;
          out << "\n";
        }
      }
      return r.ok() ? kExitOk : kExitFailure;
    };
  });

  auto* igr = ig_sub("representable", "embeddability into some L*_{k+1}");
  igr->callback([&] {
    action = [&] {
      const AbstractIGChain c = igchain_from_json(read_json_file(file));
      const Representability r = is_representable(c);
      const REquationReport q = check_r_equations(c, c.top(), 16);
      if (ctx.json) {
        Json j = to_json(r);
        j["partition"] = to_json(simple_partition(c));
        j["r_equations"] = to_json(q);
        ctx.emit(j);
      } else {
        if (r.representable) {
          out << "representable in L*_" << r.embedding->k + 1 << ":";
          for (const BigInt& v : r.embedding->numerators) out << " " << v;
          out << "\n";
        } else {
          out << "not representable (" << to_string(r.reason) << ")";
          if (!r.witness.empty()) {
            out << ": skeleton " << to_string(r.witness) << " at";
            for (int e : r.witness_elems) out << " " << e;
          }
          out << "\n";
        }
        out << "R1n failures " << q.r1_failures << ", R2n failures " << q.r2_failures
            << " over " << q.sequences << " sequences\n";
      }
      return kExitOk;
    };
  });

  auto* igs = ig_sub("skeleton", "skeleton of an element");
  igs->add_option("--elem", elem, "element index")->required();
  igs->callback([&] {
    action = [&] {
      const AbstractIGChain c = igchain_from_json(read_json_file(file));
      if (elem < 0 || elem > c.top()) throw OutOfRange("--elem outside the chain");
      const SkSeq s = skeleton(c, elem);
      const Rational f = fixed_point(s);
      if (ctx.json) ctx.emit({{"elem", elem}, {"skeleton", to_json(s)},
                              {"fixed_point", to_string(f)}, {"periodic", is_periodic(s)}});
      else out << to_string(s) << "  fixed point " << to_string(f)
               << (is_periodic(s) ? "  periodic" : "") << "\n";
      return kExitOk;
    };
  });

  auto* igp = ig_sub("partition", "strictly simple cores and their attracted blocks");
  igp->callback([&] {
    action = [&] {
      const AbstractIGChain c = igchain_from_json(read_json_file(file));
      const auto blocks = simple_partition(c);
      if (ctx.json) {
        ctx.emit(to_json(blocks));
      } else {
        for (const Block& b : blocks) {
          out << "core";
          for (int e : b.core) out << " " << e;
          out << "  attracts";
          for (int e : b.attracted) out << " " << e;
          out << "\n";
        }
      }
      return kExitOk;
    };
  });

  // reproduce --------------------------------------------------------------------
  bool all = false;
  std::vector<int> only;
  auto* rep = sub("reproduce", "run the acceptance criteria");
  auto* o_all = rep->add_flag("--all", all, "every criterion");
  auto* o_only = rep->add_option("--only", only, "selected criteria")
                     ->check(CLI::Range(1, kCriteria))
                     ->allow_extra_args(false);
  o_all->excludes(o_only);
  rep->callback([&] {
    if (!all && only.empty()) throw CLI::RequiredError("--all or --only");
    action = [&] {
      std::vector<int> ids = only;
      if (all)
        for (int k = 1; k <= kCriteria; ++k) ids.push_back(k);
      int failed = 0;
      Json arr = Json::array();
      for (int id : ids) {
        const CriterionResult r = run_criterion(id);
        if (!r.pass()) ++failed;
        if (ctx.json)
          arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()},
                         {"correct", r.correct}, {"seconds", r.seconds},
                         {"budget", r.budget}, {"detail", r.detail}});
        else
          out << format_line(r) << "\n" << std::flush;
      }
      if (ctx.json) ctx.emit({{"passed", ids.size() - failed}, {"total", ids.size()},
                              {"criteria", arr}});
      else out << ids.size() - failed << "/" << ids.size() << " criteria passed\n";
      return failed ? kExitFailure : kExitOk;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const NotValidated& e) {
    err << "lukstar: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "lukstar: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lukstar
