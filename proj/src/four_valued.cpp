#include "tetra/four_valued.hpp"

#include <sstream>
#include <unordered_map>

namespace tetra {

char four_value_symbol(FourValue v) noexcept {
  switch (v) {
    case FourValue::True: return 't';
    case FourValue::Both: return 'b';
    case FourValue::Neither: return 'n';
    case FourValue::False: return 'f';
  }
  return '?';
}

std::optional<FourValue> four_value_from_symbol(char c) noexcept {
  switch (c) {
    case 't': return FourValue::True;
    case 'b': return FourValue::Both;
    case 'n': return FourValue::Neither;
    case 'f': return FourValue::False;
    default: return std::nullopt;
  }
}

const char* connective_symbol(Connective c) noexcept {
  switch (c) {
    case Connective::Not: return "~";
    case Connective::And: return "&";
    case Connective::Or: return "|";
    case Connective::Implies: return "->";
  }
  return "?";
}

bool connective_unary(Connective c) noexcept { return c == Connective::Not; }

std::optional<Connective> connective_from_name(const std::string& name) noexcept {
  if (name == "not" || name == "~") return Connective::Not;
  if (name == "and" || name == "&") return Connective::And;
  if (name == "or" || name == "|") return Connective::Or;
  if (name == "implies" || name == "->") return Connective::Implies;
  return std::nullopt;
}

const char* semantics_name(SemanticsId s) noexcept {
  switch (s) {
    case SemanticsId::Pairing: return "pairing";
    case SemanticsId::Fde: return "fde";
    case SemanticsId::B4: return "b4";
  }
  return "?";
}

std::optional<SemanticsId> semantics_from_name(const std::string& name) noexcept {
  if (name == "pairing") return SemanticsId::Pairing;
  if (name == "fde") return SemanticsId::Fde;
  if (name == "b4") return SemanticsId::B4;
  return std::nullopt;
}

bool semantics_has_connective(SemanticsId s, Connective c) noexcept {
  if (s == SemanticsId::Fde && c == Connective::Implies) return false;
  return true;
}

FourValue b4_to_four(B4Label l) noexcept {
  // (1,1) -> b, (1,0) -> t, (0,1) -> f, (0,0) -> n
  if (l.conventionally_true) return l.ultimately_false ? FourValue::Both : FourValue::True;
  return l.ultimately_false ? FourValue::False : FourValue::Neither;
}

B4Label four_to_b4(FourValue v) noexcept {
  switch (v) {
    case FourValue::Both: return {true, true};
    case FourValue::True: return {true, false};
    case FourValue::False: return {false, true};
    case FourValue::Neither: return {false, false};
  }
  return {false, false};
}

namespace {

bool classical(Connective c, bool x, bool y) {
  switch (c) {
    case Connective::And: return x && y;
    case Connective::Or: return x || y;
    case Connective::Implies: return !x || y;
    case Connective::Not: break;
  }
  return false;
}

FourValue pairing_apply(Connective c, FourValue x, std::optional<FourValue> y) {
  if (c == Connective::Not) return four_value(!first_bit(x), !second_bit(x));
  return four_value(classical(c, first_bit(x), first_bit(*y)),
                    classical(c, second_bit(x), second_bit(*y)));
}

// Truth lattice f < b < t, f < n < t with b, n incomparable.
bool fde_leq(FourValue x, FourValue y) {
  if (x == y || x == FourValue::False || y == FourValue::True) return true;
  return false;
}

FourValue fde_meet(FourValue x, FourValue y) {
  // Greatest value below both; the lattice is small enough to search.
  FourValue best = FourValue::False;
  for (FourValue v : kValueOrder) {
    if (fde_leq(v, x) && fde_leq(v, y) && fde_leq(best, v)) best = v;
  }
  return best;
}

FourValue fde_join(FourValue x, FourValue y) {
  FourValue best = FourValue::True;
  for (FourValue v : kValueOrder) {
    if (fde_leq(x, v) && fde_leq(y, v) && fde_leq(v, best)) best = v;
  }
  return best;
}

FourValue fde_apply(Connective c, FourValue x, std::optional<FourValue> y) {
  switch (c) {
    case Connective::Not:
      // Swaps t and f, fixes b and n.
      if (x == FourValue::True) return FourValue::False;
      if (x == FourValue::False) return FourValue::True;
      return x;
    case Connective::And:
      return fde_meet(x, *y);
    case Connective::Or:
      return fde_join(x, *y);
    case Connective::Implies:
      break;
  }
  return FourValue::False;
}

B4Label b4_apply_native(Connective c, B4Label x, std::optional<B4Label> y) {
  // Conventional truth composes classically; ultimate falsity composes
  // through "ultimately true" = not ultimately false.
  switch (c) {
    case Connective::Not:
      return {!x.conventionally_true, !x.ultimately_false};
    case Connective::And:
      return {x.conventionally_true && y->conventionally_true,
              x.ultimately_false || y->ultimately_false};
    case Connective::Or:
      return {x.conventionally_true || y->conventionally_true,
              x.ultimately_false && y->ultimately_false};
    case Connective::Implies:
      return {!x.conventionally_true || y->conventionally_true,
              !x.ultimately_false && y->ultimately_false};
  }
  return x;
}

}  // namespace

FourValue apply4(SemanticsId sem, Connective c, FourValue x, std::optional<FourValue> y) {
  if (!semantics_has_connective(sem, c)) {
    throw ConnectiveNotSupportedError(std::string("connective ") + connective_symbol(c) +
                                      " is not part of the " + semantics_name(sem) +
                                      " semantics");
  }
  if (connective_unary(c) && y.has_value()) {
    throw ArityMismatchError("unary connective applied to two operands");
  }
  if (!connective_unary(c) && !y.has_value()) {
    throw ArityMismatchError("binary connective applied to one operand");
  }
  switch (sem) {
    case SemanticsId::Pairing:
      return pairing_apply(c, x, y);
    case SemanticsId::Fde:
      return fde_apply(c, x, y);
    case SemanticsId::B4: {
      std::optional<B4Label> ly;
      if (y) ly = four_to_b4(*y);
      return b4_to_four(b4_apply_native(c, four_to_b4(x), ly));
    }
  }
  return x;
}

namespace {

// Cells are stored in display order; map a value back to its row index.
std::size_t display_index(FourValue v) noexcept {
  return static_cast<std::size_t>(3 - static_cast<std::uint8_t>(v));
}

}  // namespace

FourValue TruthTable4::at(FourValue x) const { return unary_cells[display_index(x)]; }

FourValue TruthTable4::at(FourValue x, FourValue y) const {
  return binary_cells[display_index(x)][display_index(y)];
}

TruthTable4 full_table(SemanticsId sem, Connective c) {
  if (!semantics_has_connective(sem, c)) {
    throw ConnectiveNotSupportedError(std::string("connective ") + connective_symbol(c) +
                                      " is not part of the " + semantics_name(sem) +
                                      " semantics");
  }
  TruthTable4 table;
  table.semantics = sem;
  table.connective = c;
  if (connective_unary(c)) {
    for (std::size_t i = 0; i < 4; ++i) {
      table.unary_cells[i] = apply4(sem, c, kValueOrder[i]);
    }
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        table.binary_cells[i][j] = apply4(sem, c, kValueOrder[i], kValueOrder[j]);
      }
    }
  }
  return table;
}

FourValue pair_eval(const Formula& f, const ValuationPair& vp) {
  return four_value(eval(f, vp.first), eval(f, vp.second));
}

namespace {

// The pairing tables materialized once, indexed by the raw value codes.
// pairing_apply stays the single source of the cell contents; the fold only
// reads them back, which keeps the per-node cost at an array index on a path
// that visits millions of nodes.
struct PairingTables {
  std::array<FourValue, 4> nots;
  std::array<std::array<FourValue, 4>, 4> ands, ors, impls;
  PairingTables() {
    for (std::size_t i = 0; i < 4; ++i) {
      const auto x = static_cast<FourValue>(i);
      nots[i] = pairing_apply(Connective::Not, x, std::nullopt);
      for (std::size_t j = 0; j < 4; ++j) {
        const auto y = static_cast<FourValue>(j);
        ands[i][j] = pairing_apply(Connective::And, x, y);
        ors[i][j] = pairing_apply(Connective::Or, x, y);
        impls[i][j] = pairing_apply(Connective::Implies, x, y);
      }
    }
  }
};

const PairingTables kPairing;

std::size_t code(FourValue v) noexcept { return static_cast<std::size_t>(v); }

// Folded values per structure node, so subformulas shared across the corpus
// are folded once per valuation pair. The fold is pure, so caching cannot
// change any result; leaves are cheaper to recompute than to look up.
using FoldCache = std::unordered_map<const void*, FourValue>;

FourValue fold_pairing(const Formula& f, const ValuationPair& vp, FoldCache& cache) {
  if (f.kind() == NodeKind::Letter) {
    return four_value(vp.first.value(f.as_letter()), vp.second.value(f.as_letter()));
  }
  const void* id = f.identity();
  if (auto it = cache.find(id); it != cache.end()) return it->second;
  FourValue v = FourValue::False;
  switch (f.kind()) {
    case NodeKind::Letter:
      break;  // handled above
    case NodeKind::Not:
      v = kPairing.nots[code(fold_pairing(f.operand(), vp, cache))];
      break;
    case NodeKind::And:
      v = kPairing.ands[code(fold_pairing(f.left(), vp, cache))]
                       [code(fold_pairing(f.right(), vp, cache))];
      break;
    case NodeKind::Or:
      v = kPairing.ors[code(fold_pairing(f.left(), vp, cache))]
                      [code(fold_pairing(f.right(), vp, cache))];
      break;
    case NodeKind::Implies:
      v = kPairing.impls[code(fold_pairing(f.left(), vp, cache))]
                        [code(fold_pairing(f.right(), vp, cache))];
      break;
  }
  cache.emplace(id, v);
  return v;
}

}  // namespace

CompositionalityVerdict verify_compositionality(const std::vector<Formula>& corpus,
                                                const ValuationPair& vp) {
  FoldCache cache;
  cache.reserve(corpus.size());
  for (const Formula& f : corpus) {
    const FourValue direct = pair_eval(f, vp);
    const FourValue folded = fold_pairing(f, vp, cache);
    if (direct != folded) {
      return {false, f, direct, folded};
    }
  }
  return {true, std::nullopt, std::nullopt, std::nullopt};
}

namespace {

// Transcription of the reference table set, rows and columns in t, b, n, f
// order. The two implication cells at (b,n) and (b,f) read f in the
// transcription; componentwise evaluation yields n there. They are kept as
// transcribed so the audit can surface the difference.
constexpr std::array<FourValue, 4> kReferenceNot = {
    FourValue::False, FourValue::Neither, FourValue::Both, FourValue::True};

constexpr FourValue T = FourValue::True;
constexpr FourValue B = FourValue::Both;
constexpr FourValue N = FourValue::Neither;
constexpr FourValue F = FourValue::False;

constexpr std::array<std::array<FourValue, 4>, 4> kReferenceOr = {{
    {T, T, T, T},
    {T, B, T, B},
    {T, T, N, N},
    {T, B, N, F},
}};

constexpr std::array<std::array<FourValue, 4>, 4> kReferenceAnd = {{
    {T, B, N, F},
    {B, B, F, F},
    {N, F, N, F},
    {F, F, F, F},
}};

constexpr std::array<std::array<FourValue, 4>, 4> kReferenceImplies = {{
    {T, B, N, F},
    {T, T, F, F},
    {T, B, T, B},
    {T, T, T, T},
}};

std::vector<AuditMismatch> audit_unary(const TruthTable4& computed,
                                       const std::array<FourValue, 4>& reference) {
  std::vector<AuditMismatch> out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (computed.unary_cells[i] != reference[i]) {
      out.push_back({{kValueOrder[i], std::nullopt}, computed.unary_cells[i], reference[i]});
    }
  }
  return out;
}

std::vector<AuditMismatch> audit_binary(const TruthTable4& computed,
                                        const std::array<std::array<FourValue, 4>, 4>& reference) {
  std::vector<AuditMismatch> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (computed.binary_cells[i][j] != reference[i][j]) {
        out.push_back(
            {{kValueOrder[i], kValueOrder[j]}, computed.binary_cells[i][j], reference[i][j]});
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<AuditMismatch>& AuditReport::mismatches(Connective c) const {
  switch (c) {
    case Connective::Not: return not_mismatches;
    case Connective::And: return and_mismatches;
    case Connective::Or: return or_mismatches;
    case Connective::Implies: return implies_mismatches;
  }
  return not_mismatches;
}

AuditReport audit_reference_tables() {
  AuditReport report;
  report.not_mismatches = audit_unary(full_table(SemanticsId::Pairing, Connective::Not), kReferenceNot);
  report.and_mismatches = audit_binary(full_table(SemanticsId::Pairing, Connective::And), kReferenceAnd);
  report.or_mismatches = audit_binary(full_table(SemanticsId::Pairing, Connective::Or), kReferenceOr);
  report.implies_mismatches =
      audit_binary(full_table(SemanticsId::Pairing, Connective::Implies), kReferenceImplies);
  return report;
}

std::vector<TableCell> diff_tables(SemanticsId a, SemanticsId b, Connective c) {
  const TruthTable4 ta = full_table(a, c);
  const TruthTable4 tb = full_table(b, c);
  std::vector<TableCell> out;
  if (connective_unary(c)) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (ta.unary_cells[i] != tb.unary_cells[i]) out.push_back({kValueOrder[i], std::nullopt});
    }
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (ta.binary_cells[i][j] != tb.binary_cells[i][j]) {
          out.push_back({kValueOrder[i], kValueOrder[j]});
        }
      }
    }
  }
  return out;
}

B4Correspondence b4_correspondence() {
  B4Correspondence result;

  // Bijectivity of the relabeling: four labels, four distinct images, and
  // the inverse really inverts.
  bool seen[4] = {false, false, false, false};
  result.bijective = true;
  for (bool ct : {false, true}) {
    for (bool uf : {false, true}) {
      const B4Label label{ct, uf};
      const FourValue image = b4_to_four(label);
      const auto idx = static_cast<std::size_t>(image);
      if (seen[idx] || !(four_to_b4(image) == label)) result.bijective = false;
      seen[idx] = true;
    }
  }

  // Commutation: relabel(op_b4(x, y)) == op_pairing(relabel(x), relabel(y)).
  result.tables_match = true;
  const std::array<Connective, 4> connectives = {Connective::Not, Connective::And, Connective::Or,
                                                 Connective::Implies};
  for (Connective c : connectives) {
    for (FourValue x : kValueOrder) {
      if (connective_unary(c)) {
        const FourValue via_b4 = apply4(SemanticsId::B4, c, x);
        const FourValue via_pairing = apply4(SemanticsId::Pairing, c, x);
        if (via_b4 != via_pairing) {
          result.tables_match = false;
          result.mismatches.push_back({{x, std::nullopt}, via_pairing, via_b4});
        }
        continue;
      }
      for (FourValue y : kValueOrder) {
        const FourValue via_b4 = apply4(SemanticsId::B4, c, x, y);
        const FourValue via_pairing = apply4(SemanticsId::Pairing, c, x, y);
        if (via_b4 != via_pairing) {
          result.tables_match = false;
          result.mismatches.push_back({{x, y}, via_pairing, via_b4});
        }
      }
    }
  }
  return result;
}

std::string render_table(const TruthTable4& table) {
  std::ostringstream os;
  const std::string op = connective_symbol(table.connective);
  // Corner cell carries the connective symbol; "->" is the widest.
  const int width = 2;
  auto pad = [&os, width](const std::string& s) {
    os << s;
    for (int i = static_cast<int>(s.size()); i < width; ++i) os << ' ';
  };
  if (table.unary()) {
    os << op << '\n';
    for (std::size_t i = 0; i < 4; ++i) {
      pad(std::string(1, four_value_symbol(kValueOrder[i])));
      os << "| " << four_value_symbol(table.unary_cells[i]) << '\n';
    }
    return os.str();
  }
  pad(op);
  os << '|';
  for (FourValue v : kValueOrder) os << ' ' << four_value_symbol(v);
  os << '\n';
  os << "--+";
  for (std::size_t i = 0; i < 4; ++i) os << "--";
  os << '\n';
  for (std::size_t i = 0; i < 4; ++i) {
    pad(std::string(1, four_value_symbol(kValueOrder[i])));
    os << '|';
    for (std::size_t j = 0; j < 4; ++j) os << ' ' << four_value_symbol(table.binary_cells[i][j]);
    os << '\n';
  }
  return os.str();
}

}  // namespace tetra
