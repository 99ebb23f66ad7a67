#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetra/formula.hpp"
#include "tetra/semantics.hpp"

namespace tetra {

/**
 * The four values of the pairing semantics, defined as ordered pairs of
 * classical bits: t = (1,1), b = (1,0), n = (0,1), f = (0,0). The enum
 * encoding is the bit pair itself (first bit high).
 */
enum class FourValue : std::uint8_t {
  False = 0b00,
  Neither = 0b01,
  Both = 0b10,
  True = 0b11,
};

constexpr FourValue four_value(bool first, bool second) noexcept {
  return static_cast<FourValue>((first ? 2 : 0) | (second ? 1 : 0));
}
constexpr bool first_bit(FourValue v) noexcept { return (static_cast<std::uint8_t>(v) & 2) != 0; }
constexpr bool second_bit(FourValue v) noexcept { return (static_cast<std::uint8_t>(v) & 1) != 0; }

char four_value_symbol(FourValue v) noexcept;  // 't', 'b', 'n', 'f'
std::optional<FourValue> four_value_from_symbol(char c) noexcept;

/// Display order used by every rendered table: t, b, n, f.
inline constexpr std::array<FourValue, 4> kValueOrder = {
    FourValue::True, FourValue::Both, FourValue::Neither, FourValue::False};

enum class Connective : std::uint8_t { Not, And, Or, Implies };

const char* connective_symbol(Connective c) noexcept;  // "~", "&", "|", "->"
bool connective_unary(Connective c) noexcept;
std::optional<Connective> connective_from_name(const std::string& name) noexcept;

/**
 * The three table families:
 *  - Pairing: classical connectives applied to each coordinate of the pair.
 *  - Fde: meet/join of the truth lattice f < b < t, f < n < t for and/or;
 *    negation swaps t and f and fixes b and n. No implication.
 *  - B4: values read as (conventionally-true, ultimately-false) labels with
 *    their own connective rules, relabeled onto the four pair values.
 */
enum class SemanticsId : std::uint8_t { Pairing, Fde, B4 };

const char* semantics_name(SemanticsId s) noexcept;
std::optional<SemanticsId> semantics_from_name(const std::string& name) noexcept;
bool semantics_has_connective(SemanticsId s, Connective c) noexcept;

/// The label algebra B4 is defined on. The relabeling onto pair values is
/// (1,1) -> b, (1,0) -> t, (0,1) -> f, (0,0) -> n.
struct B4Label {
  bool conventionally_true;
  bool ultimately_false;

  friend bool operator==(const B4Label& a, const B4Label& b) noexcept {
    return a.conventionally_true == b.conventionally_true &&
           a.ultimately_false == b.ultimately_false;
  }
};

FourValue b4_to_four(B4Label l) noexcept;
B4Label four_to_b4(FourValue v) noexcept;

/**
 * Apply a connective under a semantics. Pass y for binary connectives only;
 * arity violations throw ArityMismatchError and asking Fde for -> throws
 * ConnectiveNotSupportedError.
 */
FourValue apply4(SemanticsId sem, Connective c, FourValue x,
                 std::optional<FourValue> y = std::nullopt);

/// A full connective table in the fixed t, b, n, f operand order.
struct TruthTable4 {
  SemanticsId semantics;
  Connective connective;
  std::array<FourValue, 4> unary_cells{};                  // unary only
  std::array<std::array<FourValue, 4>, 4> binary_cells{};  // [row][column]

  bool unary() const noexcept { return connective_unary(connective); }
  FourValue at(FourValue x) const;
  FourValue at(FourValue x, FourValue y) const;
};

TruthTable4 full_table(SemanticsId sem, Connective c);

/// Both valuations must cover the letters of any formula they evaluate.
struct ValuationPair {
  Valuation first;   // the v1 coordinate
  Valuation second;  // the v2 coordinate
};

/// (eval(f, first), eval(f, second)) as a FourValue.
FourValue pair_eval(const Formula& f, const ValuationPair& vp);

struct CompositionalityVerdict {
  bool passed = false;
  std::optional<Formula> first_mismatch;
  std::optional<FourValue> direct;  // pair_eval result at the mismatch
  std::optional<FourValue> folded;  // table-folded result at the mismatch

  explicit operator bool() const noexcept { return passed; }
};

/**
 * Check that evaluating under the two valuations and then pairing agrees,
 * formula by formula, with assigning pair values at the leaves and folding
 * the pairing tables bottom-up. The two strategies are computed separately.
 */
CompositionalityVerdict verify_compositionality(const std::vector<Formula>& corpus,
                                                const ValuationPair& vp);

struct TableCell {
  FourValue row;
  std::optional<FourValue> column;  // empty for unary tables
};

struct AuditMismatch {
  TableCell cell;
  FourValue computed;   // value from the generated table
  FourValue reference;  // value in the transcribed reference table
};

/// Per-connective comparison of the generated pairing tables against the
/// transcribed reference tables this library is written to reproduce.
struct AuditReport {
  std::vector<AuditMismatch> not_mismatches;
  std::vector<AuditMismatch> and_mismatches;
  std::vector<AuditMismatch> or_mismatches;
  std::vector<AuditMismatch> implies_mismatches;

  const std::vector<AuditMismatch>& mismatches(Connective c) const;
  std::size_t total() const noexcept {
    return not_mismatches.size() + and_mismatches.size() + or_mismatches.size() +
           implies_mismatches.size();
  }
};

AuditReport audit_reference_tables();

/// Operand combinations where the two semantics disagree, in display order.
/// The connective must exist in both.
std::vector<TableCell> diff_tables(SemanticsId a, SemanticsId b, Connective c);

struct B4Correspondence {
  bool bijective = false;
  bool tables_match = false;  // all four connectives, every cell
  std::vector<AuditMismatch> mismatches;

  bool passed() const noexcept { return bijective && tables_match; }
};

/// Check the relabeling is a bijection carrying every B4 connective table
/// cell-for-cell onto the pairing table. The B4 side is computed on the
/// native label algebra, not through the pairing code.
B4Correspondence b4_correspondence();

/// Plain-text table with t/b/n/f headers, space-aligned.
std::string render_table(const TruthTable4& table);

}  // namespace tetra
