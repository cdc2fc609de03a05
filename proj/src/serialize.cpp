#include "lukstar/serialize.hpp"

#include <limits>

namespace lukstar {

namespace {

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw OutOfRange(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const char* op_name(UnOp op) {
  switch (op) {
    case UnOp::STAR: return "STAR";
    case UnOp::PLUS: return "PLUS";
    case UnOp::NEG: return "NEG";
  }
  return "";
}

}  // namespace

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Json to_json(const Subalgebra& s) {
  return Json{{"n", s.chain().n()}, {"elems", s.numerators()}};
}

Subalgebra subalgebra_from_json(const Json& j) {
  return guarded("subalgebra", [&] {
    const Chain c(j.at("n").get<int>());
    std::vector<Elem> xs;
    for (int k : j.at("elems").get<std::vector<int>>()) {
      if (k < 0 || k > c.n()) throw OutOfRange("numerator outside 0..n");
      xs.push_back(c.elem(k));
    }
    if (generated_by_set(c, xs).size() != static_cast<int>(xs.size()))
      throw OutOfRange("elems are not closed under ~ and *");
    return Subalgebra(c, std::move(xs));
  });
}

Json to_json(const PiVerdict& v) {
  Json j{{"n", v.n},
         {"prime", v.prime},
         {"in_pi", v.in_pi},
         {"term_equivalent", term_equivalent(v.n)},
         {"fermat", is_fermat_prime(v.n)}};
  return j;
}

PiVerdict pi_verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    PiVerdict v;
    v.n = j.at("n").get<std::int64_t>();
    v.prime = j.at("prime").get<bool>();
    v.in_pi = j.at("in_pi").get<bool>();
    return v;
  });
}

Json to_json(const UnaryTerm& t) {
  Json ops = Json::array();
  for (UnOp op : t.ops) ops.push_back(op_name(op));
  return ops;
}

UnaryTerm unary_term_from_json(const Json& j) {
  return guarded("term", [&] {
    UnaryTerm t;
    for (const auto& s : j.get<std::vector<std::string>>()) {
      if (s == "STAR") t.ops.push_back(UnOp::STAR);
      else if (s == "PLUS") t.ops.push_back(UnOp::PLUS);
      else if (s == "NEG") t.ops.push_back(UnOp::NEG);
      else throw OutOfRange("unknown operation " + s);
    }
    return t;
  });
}

Json to_json(const DeltaTerm& t) {
  return Json{{"term", t.to_string()}, {"total", t.total}, {"ops", to_json(t.term)}};
}

Json to_json(const SkSeq& s) {
  Json out = Json::array();
  for (Sym o : s) out.push_back(o == Sym::STAR ? "STAR" : "INV");
  return out;
}

SkSeq skseq_from_json(const Json& j) {
  return guarded("sequence", [&] {
    SkSeq s;
    for (const auto& o : j.get<std::vector<std::string>>()) {
      if (o == "STAR") s.push_back(Sym::STAR);
      else if (o == "INV") s.push_back(Sym::INV);
      else throw MalformedSequence("unknown symbol " + o);
    }
    return s;
  });
}

Json to_json(const Verdict& v) {
  Json j{{"holds", v.holds}, {"valuations", v.valuations}};
  if (v.countermodel) {
    Json cm = Json::array();
    for (const Elem& e : *v.countermodel) cm.push_back(to_string(e));
    j["countermodel"] = cm;
  }
  return j;
}

Json to_json(const CheckReport& r) {
  Json fails = Json::array();
  for (const Failure& f : r.failures)
    fails.push_back({{"item", f.item}, {"params", f.params}, {"valuation", f.valuation}});
  return Json{{"ok", r.ok()}, {"checked", r.checked}, {"failures", fails}};
}

Json to_json(const AbstractIGChain& c) {
  return Json{{"size", c.size()}, {"star", c.star_table()}};
}

AbstractIGChain igchain_from_json(const Json& j) {
  return guarded("chain", [&] {
    auto star = j.at("star").get<std::vector<int>>();
    const int size = j.contains("size") ? j["size"].get<int>()
                                        : static_cast<int>(star.size());
    if (size < 2 || static_cast<int>(star.size()) != size)
      throw OutOfRange("\"star\" must list one image per element (size >= 2)");
    for (int v : star)
      if (v < 0 || v >= size) throw OutOfRange("star image outside 0..size-1");
    return AbstractIGChain(std::move(star));
  });
}

Json to_json(const IGReport& r) {
  Json v = Json::array();
  for (const Violation& x : r.violations) v.push_back({{"item", x.item}, {"elems", x.elems}});
  return Json{{"ok", r.ok()}, {"violations", v}};
}

Json to_json(const std::vector<Block>& blocks) {
  Json out = Json::array();
  for (const Block& b : blocks) out.push_back({{"core", b.core}, {"attracted", b.attracted}});
  return out;
}

Json to_json(const Embedding& e) {
  Json nums = Json::array();
  for (const BigInt& v : e.numerators) nums.push_back(big(v));
  return Json{{"k", big(e.k)}, {"numerators", nums}};
}

Json to_json(const Representability& r) {
  Json j{{"representable", r.representable}, {"reason", to_string(r.reason)}};
  if (!r.representable) {
    j["witness"] = to_json(r.witness);
    j["witness_elems"] = r.witness_elems;
  }
  if (r.embedding) j["embedding"] = to_json(*r.embedding);
  return j;
}

Json to_json(const REquationReport& r) {
  Json f = Json::array();
  for (const REquationFailure& x : r.failures)
    f.push_back({{"equation", x.equation},
                 {"R", to_json(x.r_seq)},
                 {"r", x.r},
                 {"x", x.x},
                 {"y", x.y}});
  return Json{{"ok", r.ok()},
              {"sequences", r.sequences},
              {"r1_failures", r.r1_failures},
              {"r2_failures", r.r2_failures},
              {"failures", f}};
}

}  // namespace lukstar
