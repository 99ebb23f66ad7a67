#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tetra/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tetra::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse prints the canonical form") {
  const RunResult r = run_cli({"parse", "A&(B|C)"});
  CHECK(r.code == 0);
  CHECK(r.out == "A & (B | C)\n");
  CHECK(r.err.empty());
}

TEST_CASE("parse errors exit 2 with a message on stderr") {
  const RunResult r = run_cli({"parse", "A &"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "error: syntax error at position 4"));
}

TEST_CASE("status text output") {
  const RunResult taut = run_cli({"status", "A | ~A"});
  CHECK(taut.code == 0);
  CHECK(taut.out == "A | ~A: tautology\n");

  const RunResult generic = run_cli({"status", "A & B"});
  CHECK(generic.code == 0);
  CHECK(generic.out ==
        "A & B: generic\n"
        "  falsifying: A=0,B=0\n"
        "  satisfying: A=1,B=1\n");

  const RunResult contra = run_cli({"status", "A & ~A"});
  CHECK(contra.out == "A & ~A: contradiction\n");
}

TEST_CASE("status json output") {
  const RunResult r = run_cli({"--format", "json", "status", "A & B"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["formula"] == "A & B");
  CHECK(doc["status"] == "generic");
  CHECK(doc["witnesses"]["falsifying"]["A"] == 0);
  CHECK(doc["witnesses"]["falsifying"]["B"] == 0);
  CHECK(doc["witnesses"]["satisfying"]["A"] == 1);
  CHECK(doc["witnesses"]["satisfying"]["B"] == 1);
}

TEST_CASE("equiv exit codes track the verdict") {
  const RunResult yes = run_cli({"equiv", "A -> B", "~A | B"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "equivalent\n");

  const RunResult no = run_cli({"equiv", "A | B", "A & B"});
  CHECK(no.code == 1);
  CHECK(no.out ==
        "not equivalent\n"
        "  counterexample: A=0,B=1\n");
}

TEST_CASE("entails") {
  const RunResult mp = run_cli({"entails", "A -> B", "A", "B"});
  CHECK(mp.code == 0);
  CHECK(mp.out == "entails\n");

  const RunResult no = run_cli({"entails", "A | B", "A & B"});
  CHECK(no.code == 1);
  CHECK(no.out ==
        "does not entail\n"
        "  counterexample: A=0,B=1\n");
}

TEST_CASE("separable") {
  const RunResult yes = run_cli({"separable", "A", "B"});
  CHECK(yes.code == 0);
  CHECK(yes.out ==
        "separable\n"
        "  v0: A=0,B=1\n"
        "  v1: A=1,B=0\n");

  const RunResult no = run_cli({"separable", "A", "A | B"});
  CHECK(no.code == 1);
  CHECK(no.out == "not separable\n");
}

TEST_CASE("classify") {
  const RunResult r = run_cli({"classify", "A & ~B", "--v0", "A=1,B=1", "--v1", "A=0,B=0"});
  CHECK(r.code == 0);
  CHECK(r.out == "L4\n");

  const RunResult json_run =
      run_cli({"classify", "A | ~B", "--v0", "A=1,B=1", "--v1", "A=0,B=0", "--format", "json"});
  CHECK(json_run.code == 0);
  const auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["formula"] == "A | ~B");
  CHECK(doc["quadrant"] == "L3");
}

TEST_CASE("partition into quadrants") {
  const RunResult r = run_cli(
      {"partition", "A", "~A", "A | ~A", "~(A | ~A)", "--v0", "A=0", "--v1", "A=1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "v0: A=0\n"
        "v1: A=1\n"
        "L1: A\n"
        "L2: ~A\n"
        "L3: A | ~A\n"
        "L4: ~(A | ~A)\n");
}

TEST_CASE("partition two-way split") {
  const RunResult r = run_cli({"partition", "A", "B", "A & B", "--v", "A=1,B=0"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "v: A=1,B=0\n"
        "0: B, A & B\n"
        "1: A\n");
}

TEST_CASE("partition valuation flags are validated") {
  const RunResult neither = run_cli({"partition", "A", "B"});
  CHECK(neither.code == 2);
  CHECK(contains(neither.err, "partition needs either --v or both --v0 and --v1"));

  const RunResult lonely = run_cli({"partition", "A", "--v0", "A=0"});
  CHECK(lonely.code == 2);

  const RunResult both = run_cli({"partition", "A", "--v", "A=0", "--v0", "A=0", "--v1", "A=1"});
  CHECK(both.code == 2);
}

TEST_CASE("koti build") {
  const RunResult r = run_cli({"koti", "build", "--kind", "proper14", "A", "B"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1: A & ~B\n"
        "2: ~A & B\n"
        "3: A & B\n"
        "4: ~A & ~B\n");

  const RunResult bad_kind = run_cli({"koti", "build", "--kind", "nonsense", "A"});
  CHECK(bad_kind.code == 2);

  const RunResult bad_arity = run_cli({"koti", "build", "--kind", "proper14", "A"});
  CHECK(bad_arity.code == 2);
  CHECK(contains(bad_arity.err, "error:"));
}

TEST_CASE("koti check") {
  const RunResult ok = run_cli({"koti", "check", "--kind", "proper14", "A", "B"});
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "exclusivity: true\n"
        "exhaustiveness: true\n");

  const RunResult overlap = run_cli({"koti", "check", "--kind", "modified7", "A", "B"});
  CHECK(overlap.code == 1);
  CHECK(contains(overlap.out, "exclusivity: false"));
  CHECK(contains(overlap.out, "jointly satisfiable: alternatives 1 and 2"));
  CHECK(contains(overlap.out, "exhaustiveness: true"));

  const RunResult reps =
      run_cli({"koti", "check", "--kind", "dilemma", "A", "--v0", "A=0", "--v1", "A=1"});
  CHECK(reps.code == 0);
  CHECK(reps.out ==
        "exclusivity: true\n"
        "exhaustiveness: true\n"
        "quadrants: L1 L2\n"
        "distinct: true\n");
}

TEST_CASE("koti check representatives in json") {
  const RunResult r = run_cli({"koti", "check", "--kind", "proper14", "A", "B", "--v0",
                               "A=0,B=1", "--v1", "A=1,B=0", "--format", "json"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["exclusivity"] == true);
  CHECK(doc["exhaustiveness"] == true);
  CHECK(doc["representatives"]["quadrants"] ==
        nlohmann::json::array({"L1", "L2", "L4", "L4"}));
  CHECK(doc["representatives"]["distinct"] == false);
}

TEST_CASE("koti duality") {
  const RunResult r = run_cli({"koti", "duality", "A", "B"});
  CHECK(r.code == 0);
  CHECK(r.out == "duality holds\n");

  const RunResult compound = run_cli({"koti", "duality", "A & B", "~C"});
  CHECK(compound.code == 0);
}

TEST_CASE("mv table text") {
  const RunResult r =
      run_cli({"mv", "table", "--semantics", "pairing", "--connective", "implies"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "->| t b n f\n"
        "--+--------\n"
        "t | t b n f\n"
        "b | t t n n\n"
        "n | t b t b\n"
        "f | t t t t\n");

  const RunResult unary = run_cli({"mv", "table", "--semantics", "fde", "--connective", "not"});
  CHECK(unary.code == 0);
  CHECK(unary.out ==
        "~\n"
        "t | f\n"
        "b | b\n"
        "n | n\n"
        "f | t\n");
}

TEST_CASE("mv table json") {
  const RunResult r = run_cli({"mv", "table", "--semantics", "pairing", "--connective",
                               "implies", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["semantics"] == "pairing");
  CHECK(doc["connective"] == "->");
  CHECK(doc["operands"] == nlohmann::json::array({"t", "b", "n", "f"}));
  CHECK(doc["table"] == nlohmann::json::parse(
                            R"([["t","b","n","f"],["t","t","n","n"],["t","b","t","b"],["t","t","t","t"]])"));
}

TEST_CASE("mv table rejects fde implication") {
  const RunResult r = run_cli({"mv", "table", "--semantics", "fde", "--connective", "implies"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));
}

TEST_CASE("mv audit") {
  const RunResult r = run_cli({"mv", "audit"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "~: 0 mismatches\n"
        "&: 0 mismatches\n"
        "|: 0 mismatches\n"
        "->: 2 mismatches\n"
        "  (b,n): computed n, reference f\n"
        "  (b,f): computed n, reference f\n");

  const RunResult json_run = run_cli({"mv", "audit", "--format", "json"});
  const auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["mismatches"]["not"].empty());
  REQUIRE(doc["mismatches"]["implies"].size() == 2);
  CHECK(doc["mismatches"]["implies"][0]["row"] == "b");
  CHECK(doc["mismatches"]["implies"][0]["column"] == "n");
  CHECK(doc["mismatches"]["implies"][0]["computed"] == "n");
  CHECK(doc["mismatches"]["implies"][0]["reference"] == "f");
}

TEST_CASE("mv diff") {
  const RunResult r =
      run_cli({"mv", "diff", "--left", "pairing", "--right", "fde", "--connective", "not"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "pairing vs fde on ~: 2 differing cells\n"
        "  b, n\n");

  const RunResult same =
      run_cli({"mv", "diff", "--left", "pairing", "--right", "fde", "--connective", "and"});
  CHECK(same.code == 0);
  CHECK(same.out == "pairing vs fde on &: 0 differing cells\n");
}

TEST_CASE("mv b4") {
  const RunResult r = run_cli({"mv", "b4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "bijective: true\n"
        "tables match: true\n");
}

TEST_CASE("fol eval") {
  const RunResult yes = run_cli(
      {"fol", "eval", "exists x. F(x)", "--domain", "d1,d2", "--ext", "F=d1"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "1\n");

  const RunResult no = run_cli(
      {"fol", "eval", "forall x. F(x)", "--domain", "d1,d2", "--ext", "F=d1"});
  CHECK(no.code == 0);
  CHECK(no.out == "0\n");

  const RunResult empty_ext = run_cli(
      {"fol", "eval", "forall x. ~F(x)", "--domain", "d1", "--ext", "F="});
  CHECK(empty_ext.code == 0);
  CHECK(empty_ext.out == "1\n");

  const RunResult unknown = run_cli({"fol", "eval", "exists x. G(x)", "--domain", "d1"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "error:"));

  const RunResult json_run = run_cli({"fol", "eval", "exists x. F(x)", "--domain", "d1,d2",
                                      "--ext", "F=d1", "--format", "json"});
  const auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["formula"] == "exists x. F(x)");
  CHECK(doc["model"] == "domain {d1,d2}; F={d1}");
  CHECK(doc["value"] == 1);
}

TEST_CASE("fol equiv") {
  const RunResult dual =
      run_cli({"fol", "equiv", "~(exists x. ~F(x))", "forall x. F(x)", "--max-domain", "3"});
  CHECK(dual.code == 0);
  CHECK(dual.out == "equivalent up to n=3\n");

  const RunResult strict = run_cli({"fol", "equiv", "exists x. F(x)", "forall x. F(x)"});
  CHECK(strict.code == 1);
  CHECK(strict.out ==
        "not equivalent\n"
        "  countermodel: domain {d1,d2}; F={d1}\n");
}

TEST_CASE("fol koti") {
  const RunResult r = run_cli({"fol", "koti"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[ok] C1 <-> forall x. F(x)\n"));
  CHECK(contains(r.out, "[ok] C3 satisfiable at each n=2..4 (witness: domain {d1,d2}; F={d1})\n"));
  CHECK(contains(r.out, "12 of 12 checks passed\n"));
  CHECK_FALSE(contains(r.out, "[fail]"));
}

TEST_CASE("usage errors") {
  const RunResult none = run_cli({});
  CHECK(none.code == 2);
  CHECK_FALSE(none.err.empty());

  const RunResult extra = run_cli({"status", "A", "B"});
  CHECK(extra.code == 2);

  const RunResult bad_format = run_cli({"--format", "yaml", "parse", "A"});
  CHECK(bad_format.code == 2);

  const RunResult bad_valuation = run_cli({"classify", "A", "--v0", "A=2", "--v1", "A=1"});
  CHECK(bad_valuation.code == 2);
  CHECK(contains(bad_valuation.err, "value must be 0 or 1"));
}

TEST_CASE("help exits 0") {
  const RunResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "tetra"));
  CHECK(r.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"fol", "koti"};
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.code == second.code);
  CHECK(first.out == second.out);

  const std::vector<std::string> json_args = {"mv", "audit", "--format", "json"};
  CHECK(run_cli(json_args).out == run_cli(json_args).out);
}
