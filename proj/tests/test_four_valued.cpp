#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "support/gen.hpp"
#include "tetra/errors.hpp"
#include "tetra/formula.hpp"
#include "tetra/four_valued.hpp"
#include "tetra/semantics.hpp"

using namespace tetra;

namespace {

Formula L(const char* name) { return Formula::letter(name); }

Valuation val(std::initializer_list<std::pair<const char*, bool>> entries) {
  Valuation v;
  for (const auto& [name, bit] : entries) v.set(SentenceLetter(name), bit);
  return v;
}

constexpr FourValue t = FourValue::True;
constexpr FourValue b = FourValue::Both;
constexpr FourValue n = FourValue::Neither;
constexpr FourValue f = FourValue::False;

}  // namespace

TEST_CASE("values are bit pairs") {
  CHECK(four_value(true, true) == t);
  CHECK(four_value(true, false) == b);
  CHECK(four_value(false, true) == n);
  CHECK(four_value(false, false) == f);

  CHECK(first_bit(b));
  CHECK_FALSE(second_bit(b));
  CHECK_FALSE(first_bit(n));
  CHECK(second_bit(n));

  CHECK(four_value_symbol(t) == 't');
  CHECK(four_value_symbol(b) == 'b');
  CHECK(four_value_symbol(n) == 'n');
  CHECK(four_value_symbol(f) == 'f');
  CHECK(four_value_from_symbol('b') == b);
  CHECK_FALSE(four_value_from_symbol('x').has_value());

  CHECK(kValueOrder == std::array<FourValue, 4>{t, b, n, f});
}

TEST_CASE("pairing connectives act coordinatewise") {
  // negation
  CHECK(apply4(SemanticsId::Pairing, Connective::Not, t) == f);
  CHECK(apply4(SemanticsId::Pairing, Connective::Not, b) == n);
  CHECK(apply4(SemanticsId::Pairing, Connective::Not, n) == b);
  CHECK(apply4(SemanticsId::Pairing, Connective::Not, f) == t);

  // sample cells of the binary tables
  CHECK(apply4(SemanticsId::Pairing, Connective::And, b, n) == f);
  CHECK(apply4(SemanticsId::Pairing, Connective::And, b, b) == b);
  CHECK(apply4(SemanticsId::Pairing, Connective::And, t, n) == n);
  CHECK(apply4(SemanticsId::Pairing, Connective::Or, b, n) == t);
  CHECK(apply4(SemanticsId::Pairing, Connective::Or, n, f) == n);
  CHECK(apply4(SemanticsId::Pairing, Connective::Implies, b, n) == n);
  CHECK(apply4(SemanticsId::Pairing, Connective::Implies, b, f) == n);
  CHECK(apply4(SemanticsId::Pairing, Connective::Implies, f, f) == t);

  // every cell equals the two classical evaluations done separately
  for (FourValue x : kValueOrder) {
    for (FourValue y : kValueOrder) {
      const FourValue expected_and =
          four_value(first_bit(x) && first_bit(y), second_bit(x) && second_bit(y));
      CHECK(apply4(SemanticsId::Pairing, Connective::And, x, y) == expected_and);
      const FourValue expected_or =
          four_value(first_bit(x) || first_bit(y), second_bit(x) || second_bit(y));
      CHECK(apply4(SemanticsId::Pairing, Connective::Or, x, y) == expected_or);
      const FourValue expected_impl = four_value(!first_bit(x) || first_bit(y),
                                                 !second_bit(x) || second_bit(y));
      CHECK(apply4(SemanticsId::Pairing, Connective::Implies, x, y) == expected_impl);
    }
  }
}

TEST_CASE("arity and connective guards") {
  CHECK_THROWS_AS(apply4(SemanticsId::Pairing, Connective::Not, t, f), ArityMismatchError);
  CHECK_THROWS_AS(apply4(SemanticsId::Pairing, Connective::And, t), ArityMismatchError);
  CHECK_THROWS_AS(apply4(SemanticsId::Fde, Connective::Implies, t, t),
                  ConnectiveNotSupportedError);
  CHECK_THROWS_AS(full_table(SemanticsId::Fde, Connective::Implies),
                  ConnectiveNotSupportedError);
  CHECK(semantics_has_connective(SemanticsId::Pairing, Connective::Implies));
  CHECK_FALSE(semantics_has_connective(SemanticsId::Fde, Connective::Implies));
}

TEST_CASE("fde differs from pairing exactly at the negation fixpoints") {
  CHECK(apply4(SemanticsId::Fde, Connective::Not, t) == f);
  CHECK(apply4(SemanticsId::Fde, Connective::Not, f) == t);
  CHECK(apply4(SemanticsId::Fde, Connective::Not, b) == b);
  CHECK(apply4(SemanticsId::Fde, Connective::Not, n) == n);

  const std::vector<TableCell> not_diff =
      diff_tables(SemanticsId::Pairing, SemanticsId::Fde, Connective::Not);
  REQUIRE(not_diff.size() == 2);
  CHECK(not_diff[0].row == b);
  CHECK_FALSE(not_diff[0].column.has_value());
  CHECK(not_diff[1].row == n);

  CHECK(diff_tables(SemanticsId::Pairing, SemanticsId::Fde, Connective::And).empty());
  CHECK(diff_tables(SemanticsId::Pairing, SemanticsId::Fde, Connective::Or).empty());
  CHECK(diff_tables(SemanticsId::Pairing, SemanticsId::Pairing, Connective::Implies).empty());
}

TEST_CASE("fde meet and join respect the truth lattice") {
  // f < b < t and f < n < t; b and n are incomparable
  CHECK(apply4(SemanticsId::Fde, Connective::And, b, n) == f);
  CHECK(apply4(SemanticsId::Fde, Connective::Or, b, n) == t);
  CHECK(apply4(SemanticsId::Fde, Connective::And, t, b) == b);
  CHECK(apply4(SemanticsId::Fde, Connective::Or, f, n) == n);
  for (FourValue x : kValueOrder) {
    CHECK(apply4(SemanticsId::Fde, Connective::And, x, x) == x);
    CHECK(apply4(SemanticsId::Fde, Connective::Or, x, x) == x);
    CHECK(apply4(SemanticsId::Fde, Connective::And, x, t) == x);
    CHECK(apply4(SemanticsId::Fde, Connective::Or, x, f) == x);
  }
}

TEST_CASE("b4 relabeling and correspondence") {
  CHECK(b4_to_four(B4Label{true, true}) == b);
  CHECK(b4_to_four(B4Label{true, false}) == t);
  CHECK(b4_to_four(B4Label{false, true}) == f);
  CHECK(b4_to_four(B4Label{false, false}) == n);
  for (FourValue v : kValueOrder) CHECK(b4_to_four(four_to_b4(v)) == v);

  const B4Correspondence c = b4_correspondence();
  CHECK(c.bijective);
  CHECK(c.tables_match);
  CHECK(c.passed());
  CHECK(c.mismatches.empty());

  // b4 has its own implication, unlike fde
  CHECK(apply4(SemanticsId::B4, Connective::Implies, t, f) == f);
  CHECK(apply4(SemanticsId::B4, Connective::Implies, f, t) == t);
}

TEST_CASE("audit of the transcribed reference tables") {
  const AuditReport report = audit_reference_tables();
  CHECK(report.not_mismatches.empty());
  CHECK(report.and_mismatches.empty());
  CHECK(report.or_mismatches.empty());
  REQUIRE(report.implies_mismatches.size() == 2);
  CHECK(report.total() == 2);

  const AuditMismatch& first = report.implies_mismatches[0];
  CHECK(first.cell.row == b);
  REQUIRE(first.cell.column.has_value());
  CHECK(*first.cell.column == n);
  CHECK(first.computed == n);
  CHECK(first.reference == f);

  const AuditMismatch& second = report.implies_mismatches[1];
  CHECK(second.cell.row == b);
  CHECK(*second.cell.column == f);
  CHECK(second.computed == n);
  CHECK(second.reference == f);

  CHECK(&report.mismatches(Connective::Implies) == &report.implies_mismatches);
  CHECK(report.mismatches(Connective::And).empty());
}

TEST_CASE("pair evaluation") {
  const ValuationPair note{val({{"A", true}, {"B", true}}), val({{"A", false}, {"B", false}})};
  CHECK(pair_eval(conj(L("A"), neg(L("B"))), note) == f);
  CHECK(pair_eval(disj(L("A"), neg(L("B"))), note) == t);
  CHECK(pair_eval(L("A"), note) == b);
  CHECK(pair_eval(neg(L("A")), note) == n);
}

TEST_CASE("compositionality of the pairing tables") {
  std::mt19937 rng(99);
  const std::vector<std::string> pool = {"A", "B"};
  std::vector<Formula> corpus;
  for (int i = 0; i < 200; ++i) corpus.push_back(testsupport::random_formula(rng, 4, pool));

  const LetterSet ab = {SentenceLetter("A"), SentenceLetter("B")};
  const ValuationSequence seq = enumerate_valuations(ab);
  for (const Valuation& v1 : seq) {
    for (const Valuation& v2 : seq) {
      const CompositionalityVerdict verdict =
          verify_compositionality(corpus, ValuationPair{v1, v2});
      CHECK(verdict.passed);
      CHECK_FALSE(verdict.first_mismatch.has_value());
    }
  }
}

TEST_CASE("table rendering") {
  CHECK(render_table(full_table(SemanticsId::Pairing, Connective::Not)) ==
        "~\n"
        "t | f\n"
        "b | n\n"
        "n | b\n"
        "f | t\n");

  CHECK(render_table(full_table(SemanticsId::Pairing, Connective::Implies)) ==
        "->| t b n f\n"
        "--+--------\n"
        "t | t b n f\n"
        "b | t t n n\n"
        "n | t b t b\n"
        "f | t t t t\n");

  CHECK(render_table(full_table(SemanticsId::Fde, Connective::And)) ==
        "& | t b n f\n"
        "--+--------\n"
        "t | t b n f\n"
        "b | b b f f\n"
        "n | n f n f\n"
        "f | f f f f\n");
}

TEST_CASE("table lookups honor display order") {
  const TruthTable4 table = full_table(SemanticsId::Pairing, Connective::Or);
  for (FourValue x : kValueOrder) {
    for (FourValue y : kValueOrder) {
      CHECK(table.at(x, y) == apply4(SemanticsId::Pairing, Connective::Or, x, y));
    }
  }
  const TruthTable4 not_table = full_table(SemanticsId::Pairing, Connective::Not);
  for (FourValue x : kValueOrder) {
    CHECK(not_table.at(x) == apply4(SemanticsId::Pairing, Connective::Not, x));
  }
}
