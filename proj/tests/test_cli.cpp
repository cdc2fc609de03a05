#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lukstar/cli.hpp"
#include "lukstar/serialize.hpp"

using namespace lukstar;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "lukstar_test_" + name + ".json";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("term notation") {
  CHECK(parse_unary_term("+*^2+*").ops ==
        std::vector<UnOp>{UnOp::STAR, UnOp::PLUS, UnOp::STAR, UnOp::STAR, UnOp::PLUS});
  CHECK(parse_unary_term("id").ops.empty());
  CHECK(parse_unary_term("~*").ops == std::vector<UnOp>{UnOp::STAR, UnOp::NEG});
  CHECK_THROWS_AS(parse_unary_term("*^"), SyntaxError);
  CHECK_THROWS_AS(parse_unary_term("x"), SyntaxError);
  for (const char* t : {"*", "+^2*^2", "+*^2+*", "*^3~*"})
    CHECK(parse_unary_term(t).to_string() == t);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "--n", "17", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":17,\"prime\":true,\"in_pi\":false,\"term_equivalent\":false,"
                 "\"fermat\":true}\n");
  const Run t = run({"classify", "--n", "17"});
  CHECK(t.out.find("2^4 = -1 mod 17") != std::string::npos);
  const Run b = run({"classify", "--below", "200", "--json"});
  CHECK(Json::parse(b.out)["count"] == 31);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "--n", "5", "--below", "9"}).code == 2);
}

TEST_CASE("synth-delta prints the term and its table") {
  const Run r = run({"synth-delta", "--n", "11", "--a", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("+*^2+*\n", 0) == 0);
  CHECK(r.out.find("+*^2+*x  0  0  0  0  0  0  0  0 11 11 11 11") != std::string::npos);
  const Json j = Json::parse(run({"synth-delta", "--n", "11", "--a", "8", "--json"}).out);
  CHECK(j["delta"]["term"] == "+*^2+*");
  CHECK(j["rows"].back()["values"].dump() == "[0,0,0,0,0,0,0,0,11,11,11,11]");
  CHECK(run({"synth-delta", "--n", "11", "--a", "12"}).code == 2);
}

TEST_CASE("table text and JSON agree") {
  const Run t = run({"table", "--n", "11", "--term", "*^2"});
  CHECK(t.out.find("*^2x  0  0  0  0  0  0  0  0  0  3  7 11") != std::string::npos);
  const Json j = Json::parse(run({"table", "--n", "11", "--term", "*^2", "--json"}).out);
  CHECK(j["rows"][0]["values"].dump() == "[0,0,0,0,0,0,0,0,0,3,7,11]");
}

TEST_CASE("skfix") {
  CHECK(run({"skfix", "**~"}).out == "4/5\n");
  CHECK(run({"skfix", "[*,*,*,~]"}).out == "8/9\n");
  const Json j = Json::parse(run({"skfix", "***~", "--json"}).out);
  CHECK(j["fixed_point"] == "8/9");
  const Run bad = run({"skfix", "*?"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"skfix", "**"}).code == 2);
}

TEST_CASE("logic commands") {
  CHECK(run({"valid", "--n", "3", "--i", "2", "p0 | ~p0"}).out.rfind("holds", 0) == 0);
  const Run no = run({"valid", "--n", "3", "--i", "3", "p0 | ~p0"});
  CHECK(no.code == 0);
  CHECK(no.out.find("countermodel p0=1/3") != std::string::npos);
  const Json j = Json::parse(run({"valid", "--n", "3", "--i", "3", "p0 | ~p0", "--json"}).out);
  CHECK(j["holds"] == false);
  CHECK(j["countermodel"][0] == "1/3");
  const Run mp = run({"conseq", "--n", "5", "--i", "2", "--premise", "p0", "--premise",
                      "p0 -> p1", "p1", "--json"});
  CHECK(Json::parse(mp.out)["holds"] == true);
  CHECK(run({"valid", "--n", "3", "--i", "2", "p0 |"}).code == 2);
  CHECK(run({"valid", "--n", "3", "--i", "7", "p0"}).code == 2);
}

TEST_CASE("checkers exit 1 when they find a failure") {
  CHECK(run({"check-equations", "--n", "11"}).code == 0);
  const Run m = run({"check-equations", "--n", "11", "--star", "0,0,0,0,0,0,1,4,5,7,9,11"});
  CHECK(m.code == 1);
  CHECK(m.out.find("Eq9") != std::string::npos);
  CHECK(run({"check-equations", "--n", "11", "--star", "0,1"}).code == 2);
  const Run ax = run({"check-axioms", "--n", "3", "--i", "1", "--json"});
  CHECK(ax.code == 1);
  CHECK(Json::parse(ax.out)["theorems"]["ok"] == true);
}

TEST_CASE("synth-imp") {
  const Run ok = run({"synth-imp", "--n", "5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("agrees with min(1, 1-x+y) on all 36 pairs") != std::string::npos);
  const Json no = Json::parse(run({"synth-imp", "--n", "17", "--json"}).out);
  CHECK(no["term_equivalent"] == false);
}

TEST_CASE("subalgebra commands") {
  const Json s = Json::parse(run({"subalgebras", "--n", "9", "--json"}).out);
  CHECK(s.size() == 4);
  CHECK(subalgebra_from_json(s[2]) == generated(Chain(9), Elem(8, 9)));
  const Json ss = Json::parse(run({"strictly-simple", "--n", "17", "--json"}).out);
  CHECK(ss["strictly_simple"] == false);
  CHECK(ss["witness"]["elems"].dump() == "[0,1,2,4,8,9,13,15,16,17]");
  CHECK(run({"subalgebras", "--n", "70"}).code == 2);
}

TEST_CASE("igstar commands") {
  const std::string p = temp_file("periodic", R"({"size":6,"star":[0,0,0,1,2,5]})");
  const std::string bad = temp_file("bad", R"({"size":3,"star":[0,1,2]})");
  CHECK(run({"igstar", "validate", p}).code == 0);
  CHECK(run({"igstar", "validate", bad}).code == 1);
  const Json r = Json::parse(run({"igstar", "representable", p, "--json"}).out);
  CHECK(r["reason"] == "periodic_skeleton");
  CHECK(r["r_equations"]["r1_failures"].get<int>() > 0);
  CHECK(run({"igstar", "representable", bad}).code == 1);
  CHECK(run({"igstar", "skeleton", p, "--elem", "4"}).out.rfind("[*,~,*,~]", 0) == 0);
  CHECK(run({"igstar", "skeleton", p, "--elem", "9"}).code == 2);
  CHECK(run({"igstar", "validate", "/nonexistent.json"}).code == 2);
  std::remove(p.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"table", "--n", "5", "--bogus"}).code == 2);
  CHECK(run({"table"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reproduce runs selected criteria") {
  const Run r = run({"reproduce", "--only", "1", "--only", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2/2 criteria passed") != std::string::npos);
  CHECK(run({"reproduce"}).code == 2);
}
