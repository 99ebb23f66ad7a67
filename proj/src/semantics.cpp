#include "tetra/semantics.hpp"

#include <sstream>
#include <utility>

namespace tetra {

Valuation Valuation::from_index(const LetterSet& ls, std::uint64_t index) {
  Valuation v;
  v.entries_.reserve(ls.size());
  const std::size_t n = ls.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool bit = (index >> (n - 1 - i)) & 1u;
    v.entries_.emplace_back(ls[i], bit);
  }
  return v;
}

void Valuation::set(SentenceLetter l, bool value) {
  for (auto& [letter, bit] : entries_) {
    if (letter == l) {
      bit = value;
      return;
    }
  }
  entries_.emplace_back(std::move(l), value);
}

bool Valuation::value(const SentenceLetter& l) const {
  for (const auto& [letter, bit] : entries_) {
    if (letter == l) return bit;
  }
  throw UndeclaredLetterError(l.name());
}

bool Valuation::contains(const SentenceLetter& l) const noexcept {
  for (const auto& [letter, bit] : entries_) {
    if (letter == l) return true;
  }
  return false;
}

bool Valuation::operator==(const Valuation& rhs) const {
  if (entries_.size() != rhs.entries_.size()) return false;
  for (const auto& [letter, bit] : entries_) {
    if (!rhs.contains(letter) || rhs.value(letter) != bit) return false;
  }
  return true;
}

std::string Valuation::to_string() const {
  if (entries_.empty()) return "(empty)";
  std::ostringstream os;
  bool first = true;
  for (const auto& [letter, bit] : entries_) {
    if (!first) os << ',';
    os << letter.name() << '=' << (bit ? '1' : '0');
    first = false;
  }
  return os.str();
}

ValuationSequence enumerate_valuations(LetterSet ls, std::size_t max_letters) {
  if (ls.size() > max_letters) {
    std::ostringstream os;
    os << "letter cap exceeded: " << ls.size() << " letters, cap " << max_letters;
    throw CapExceededError(os.str());
  }
  return ValuationSequence(std::move(ls));
}

bool eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case NodeKind::Letter:
      return v.value(f.as_letter());
    case NodeKind::Not:
      return !eval(f.operand(), v);
    case NodeKind::And:
      return eval(f.left(), v) && eval(f.right(), v);
    case NodeKind::Or:
      return eval(f.left(), v) || eval(f.right(), v);
    case NodeKind::Implies:
      return !eval(f.left(), v) || eval(f.right(), v);
  }
  return false;  // unreachable
}

SemanticStatus semantic_status(const Formula& f, std::size_t max_letters) {
  const ValuationSequence vs = enumerate_valuations(letters(f), max_letters);
  std::optional<std::size_t> first_false, first_true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (eval(f, vs[i])) {
      if (!first_true) first_true = i;
    } else {
      if (!first_false) first_false = i;
    }
    if (first_true && first_false) break;
  }
  if (!first_false) return {StatusKind::Tautology, std::nullopt, std::nullopt};
  if (!first_true) return {StatusKind::Contradiction, std::nullopt, std::nullopt};
  return {StatusKind::Generic, vs[*first_false], vs[*first_true]};
}

EquivalenceVerdict equivalent(const Formula& p, const Formula& q, std::size_t max_letters) {
  const ValuationSequence vs = enumerate_valuations(letters_of_all({p, q}), max_letters);
  for (const Valuation& v : vs) {
    if (eval(p, v) != eval(q, v)) return {false, v};
  }
  return {true, std::nullopt};
}

EntailmentVerdict entails(const std::vector<Formula>& premises, const Formula& conclusion,
                          std::size_t max_letters) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  const ValuationSequence vs = enumerate_valuations(letters_of_all(all), max_letters);
  for (const Valuation& v : vs) {
    bool premises_hold = true;
    for (const Formula& p : premises) {
      if (!eval(p, v)) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold && !eval(conclusion, v)) return {false, v};
  }
  return {true, std::nullopt};
}

SeparabilityVerdict are_separable(const Formula& a, const Formula& b, std::size_t max_letters) {
  const ValuationSequence vs = enumerate_valuations(letters_of_all({a, b}), max_letters);
  std::optional<Valuation> v0, v1;
  for (const Valuation& v : vs) {
    const bool va = eval(a, v);
    const bool vb = eval(b, v);
    if (!v0 && !va && vb) v0 = v;
    if (!v1 && va && !vb) v1 = v;
    if (v0 && v1) break;
  }
  if (v0 && v1) return {true, std::move(v0), std::move(v1)};
  return {false, std::nullopt, std::nullopt};
}

}  // namespace tetra
