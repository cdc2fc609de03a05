#pragma once

// JSON forms of the library's results. Numbers in embeddings are emitted as
// JSON integers while they fit in 64 bits and as decimal strings beyond.

#include <json.hpp>

#include "lukstar/arith.hpp"
#include "lukstar/axioms.hpp"
#include "lukstar/igchain.hpp"
#include "lukstar/semantics.hpp"
#include "lukstar/skeleton.hpp"
#include "lukstar/subalgebra.hpp"
#include "lukstar/term_synth.hpp"

namespace lukstar {

using Json = nlohmann::ordered_json;

Json to_json(const Subalgebra& s);  // {"n": 9, "elems": [0, 1, ...]}
Subalgebra subalgebra_from_json(const Json& j);

/// {"n", "prime", "in_pi", "term_equivalent", "fermat"}. The witness exponent
/// is not serialized; recompute it with in_pi().
Json to_json(const PiVerdict& v);
PiVerdict pi_verdict_from_json(const Json& j);

Json to_json(const UnaryTerm& t);  // ["STAR", "PLUS", ...], innermost first
UnaryTerm unary_term_from_json(const Json& j);
Json to_json(const DeltaTerm& t);

Json to_json(const SkSeq& s);  // ["STAR", "INV", ...]
SkSeq skseq_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const CheckReport& r);

Json to_json(const AbstractIGChain& c);  // {"size": 6, "star": [...]}
/// Throws OutOfRange on a malformed document.
AbstractIGChain igchain_from_json(const Json& j);

Json to_json(const IGReport& r);
Json to_json(const std::vector<Block>& blocks);
Json to_json(const Embedding& e);
Json to_json(const Representability& r);
Json to_json(const REquationReport& r);

/// Exact rational as "p/q" (or "p" when integral).
std::string to_string(const Rational& q);

}  // namespace lukstar
