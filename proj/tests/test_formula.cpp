#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "support/gen.hpp"
#include "tetra/errors.hpp"
#include "tetra/formula.hpp"

using namespace tetra;

namespace {

Formula L(const char* name) { return Formula::letter(name); }

std::size_t parse_failure_position(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a ParseError for: ", text);
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("sentence letter names") {
  CHECK(SentenceLetter::valid_name("A"));
  CHECK(SentenceLetter::valid_name("B2"));
  CHECK(SentenceLetter::valid_name("Z10"));
  CHECK_FALSE(SentenceLetter::valid_name(""));
  CHECK_FALSE(SentenceLetter::valid_name("a"));
  CHECK_FALSE(SentenceLetter::valid_name("AB"));
  CHECK_FALSE(SentenceLetter::valid_name("2A"));
  CHECK_FALSE(SentenceLetter::valid_name("A 1"));
  CHECK_THROWS_AS(SentenceLetter("ab"), std::invalid_argument);
  CHECK(SentenceLetter("A") == SentenceLetter("A"));
  CHECK(SentenceLetter("A") != SentenceLetter("A1"));
}

TEST_CASE("parse builds the expected trees") {
  const Formula f = parse("A & ~A");
  CHECK(f == conj(L("A"), neg(L("A"))));

  // -> binds loosest
  CHECK(parse("A -> B | C") == impl(L("A"), disj(L("B"), L("C"))));

  CHECK(parse("~(A | ~A)") == neg(disj(L("A"), neg(L("A")))));

  // precedence and associativity
  CHECK(parse("~A & B") == conj(neg(L("A")), L("B")));
  CHECK(parse("A | B & C") == disj(L("A"), conj(L("B"), L("C"))));
  CHECK(parse("A & B & C") == conj(conj(L("A"), L("B")), L("C")));
  CHECK(parse("A | B | C") == disj(disj(L("A"), L("B")), L("C")));
  CHECK(parse("A -> B -> C") == impl(L("A"), impl(L("B"), L("C"))));
  CHECK(parse("~~A") == neg(neg(L("A"))));
  CHECK(parse("(A -> B) -> C") == impl(impl(L("A"), L("B")), L("C")));

  // multi-digit letters and whitespace insensitivity
  CHECK(parse("A10&B2") == conj(L("A10"), L("B2")));
  CHECK(parse("  A \t&\n B ") == conj(L("A"), L("B")));
}

TEST_CASE("parse rejects malformed input with positions") {
  CHECK(parse_failure_position("A &") == 3);       // trailing operator
  CHECK(parse_failure_position("(A | B") == 6);    // unbalanced parenthesis
  CHECK(parse_failure_position("a") == 0);         // lowercase identifier
  CHECK(parse_failure_position("A @ B") == 2);     // stray character
  CHECK(parse_failure_position("A - B") == 2);     // "-" without ">"
  CHECK(parse_failure_position("") == 0);          // empty input
  CHECK(parse_failure_position("A B") == 2);       // two atoms in a row
  CHECK(parse_failure_position("~") == 1);

  try {
    (void)parse("A &");
    FAIL("no error");
  } catch (const ParseError& e) {
    const std::string message = e.what();
    CHECK(message.find("end of input") != std::string::npos);
    CHECK(message.find("position 4") != std::string::npos);  // 1-based in text
  }
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(conj(L("A"), neg(L("A")))) == "A & ~A");
  CHECK(render(neg(disj(L("A"), neg(L("A"))))) == "~(A | ~A)");
  CHECK(render(impl(L("A"), disj(L("B"), L("C")))) == "A -> B | C");

  CHECK(render(disj(conj(L("A"), L("B")), L("C"))) == "A & B | C");
  CHECK(render(conj(disj(L("A"), L("B")), L("C"))) == "(A | B) & C");
  CHECK(render(impl(impl(L("A"), L("B")), L("C"))) == "(A -> B) -> C");
  CHECK(render(impl(L("A"), impl(L("B"), L("C")))) == "A -> B -> C");
  CHECK(render(neg(neg(L("A")))) == "~~A");
  CHECK(render(neg(conj(L("A"), L("B")))) == "~(A & B)");

  // right operands at the same level keep their grouping parentheses
  CHECK(render(conj(L("A"), conj(L("B"), L("C")))) == "A & (B & C)");
  CHECK(render(conj(conj(L("A"), L("B")), L("C"))) == "A & B & C");
}

TEST_CASE("letters in first-occurrence order") {
  const LetterSet ab = letters(conj(L("A"), neg(L("B"))));
  REQUIRE(ab.size() == 2);
  CHECK(ab[0].name() == "A");
  CHECK(ab[1].name() == "B");

  const LetterSet a = letters(disj(L("A"), neg(L("A"))));
  REQUIRE(a.size() == 1);
  CHECK(a[0].name() == "A");

  const LetterSet ba = letters(impl(L("B"), impl(L("A"), L("B"))));
  REQUIRE(ba.size() == 2);
  CHECK(ba[0].name() == "B");
  CHECK(ba[1].name() == "A");

  const LetterSet merged = letters_of_all({L("C"), conj(L("A"), L("C")), L("B")});
  REQUIRE(merged.size() == 3);
  CHECK(merged[0].name() == "C");
  CHECK(merged[1].name() == "A");
  CHECK(merged[2].name() == "B");
}

TEST_CASE("parse/render round-trip on random formulas") {
  std::mt19937 rng(20240901);
  const std::vector<std::string> pool = {"A", "B", "C", "A1"};
  for (int i = 0; i < 300; ++i) {
    const Formula f = testsupport::random_formula(rng, 6, pool);
    const std::string text = render(f);
    const Formula back = parse(text);
    CHECK(back == f);
    CHECK(render(back) == text);
    CHECK(letters(back) == letters(f));
  }
}

TEST_CASE("structural equality") {
  const Formula f = conj(L("A"), L("B"));
  const Formula g = f;  // shared node
  CHECK(f == g);
  CHECK(f == conj(L("A"), L("B")));
  CHECK(f != conj(L("B"), L("A")));
  CHECK(f != disj(L("A"), L("B")));
  CHECK(neg(f) != f);
}
