#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lukstar/serialize.hpp"

using namespace lukstar;

TEST_CASE("subalgebra round trip") {
  const Subalgebra s = generated(Chain(9), Elem(8, 9));
  const Json j = to_json(s);
  CHECK(j.dump() == R"({"n":9,"elems":[0,1,2,4,5,7,8,9]})");
  CHECK(subalgebra_from_json(Json::parse(j.dump())) == s);
  CHECK_THROWS_AS(subalgebra_from_json(Json::parse(R"({"n":9,"elems":[0,8,9]})")), OutOfRange);
  CHECK_THROWS_AS(subalgebra_from_json(Json::parse(R"({"n":9})")), OutOfRange);
}

TEST_CASE("classification verdict") {
  CHECK(to_json(in_pi(17)).dump() ==
        R"({"n":17,"prime":true,"in_pi":false,"term_equivalent":false,"fermat":true})");
  for (std::int64_t n : {2, 7, 9, 17, 199}) {
    const PiVerdict back = pi_verdict_from_json(to_json(in_pi(n)));
    CHECK(back.n == n);
    CHECK(back.prime == in_pi(n).prime);
    CHECK(back.in_pi == in_pi(n).in_pi);
  }
}

TEST_CASE("terms and sequences") {
  const DeltaTerm d = synth_delta(Chain(11), Elem(8, 11));
  CHECK(to_json(d.term).dump() == R"(["STAR","PLUS","STAR","STAR","PLUS"])");
  CHECK(unary_term_from_json(to_json(d.term)) == d.term);
  CHECK(to_json(d)["term"] == "+*^2+*");
  CHECK_THROWS_AS(unary_term_from_json(Json::parse(R"(["TWIST"])")), OutOfRange);

  const SkSeq s = parse_skseq("**~*~");
  CHECK(to_json(s).dump() == R"(["STAR","STAR","INV","STAR","INV"])");
  CHECK(skseq_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(skseq_from_json(Json::parse(R"(["STAR","X"])")), MalformedSequence);
}

TEST_CASE("IG chains") {
  const AbstractIGChain c({0, 0, 0, 1, 2, 5});
  CHECK(to_json(c).dump() == R"({"size":6,"star":[0,0,0,1,2,5]})");
  CHECK(igchain_from_json(to_json(c)) == c);
  CHECK(igchain_from_json(Json::parse(R"({"star":[0,1,2]})")) == AbstractIGChain({0, 1, 2}));
  CHECK_THROWS_AS(igchain_from_json(Json::parse(R"({"size":4,"star":[0,1,2]})")), OutOfRange);
  CHECK_THROWS_AS(igchain_from_json(Json::parse(R"({"size":3,"star":[0,7,2]})")), OutOfRange);
  CHECK_THROWS_AS(igchain_from_json(Json::parse(R"({"star":"no"})")), OutOfRange);
}

TEST_CASE("reports") {
  const Representability r = is_representable(AbstractIGChain({0, 0, 0, 1, 2, 5}));
  const Json j = to_json(r);
  CHECK(j["representable"] == false);
  CHECK(j["reason"] == "periodic_skeleton");
  CHECK(skseq_from_json(j["witness"]) == parse_skseq("*~*~"));

  const AbstractIGChain sub = generated(Chain(9), Elem(8, 9)).as_star_algebra();
  const Json e = to_json(is_representable(sub));
  CHECK(e["embedding"]["k"] == 9);
  CHECK(e["embedding"]["numerators"].dump() == "[0,1,2,4,5,7,8,9]");

  Embedding huge{BigInt(1) << 80, {0, BigInt(1) << 80}};
  CHECK(to_json(huge)["k"] == "1208925819614629174706176");

  const Verdict v = is_valid(Matrix(3, 3), join(Formula::var(0), neg(Formula::var(0))));
  CHECK(to_json(v).dump() == R"({"holds":false,"valuations":4,"countermodel":["1/3"]})");

  const Json q = to_json(check_r_equations(AbstractIGChain({0, 0, 0, 1, 2, 5}), 5));
  CHECK(q["ok"] == false);
  CHECK(q["r1_failures"].get<int>() > 0);
}

TEST_CASE("rationals") {
  CHECK(to_string(Rational(8, 9)) == "8/9");
  CHECK(to_string(Rational(3)) == "3");
}
