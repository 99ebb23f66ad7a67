#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/errors.hpp"

namespace tetra {

/// An atomic proposition name. The token grammar is an uppercase letter
/// optionally followed by digits ("A", "B2"); anything else is rejected.
class SentenceLetter {
public:
  explicit SentenceLetter(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const SentenceLetter& a, const SentenceLetter& b) {
    return a.name_ == b.name_;
  }
  friend bool operator!=(const SentenceLetter& a, const SentenceLetter& b) {
    return !(a == b);
  }

  static bool valid_name(std::string_view name) noexcept;

private:
  std::string name_;
};

using LetterSet = std::vector<SentenceLetter>;  // first-occurrence order, no duplicates

enum class NodeKind : std::uint8_t { Letter, Not, And, Or, Implies };

/**
 * An immutable propositional formula over sentence letters with the
 * connectives ~, &, |, ->. Subtrees are shared; copying is cheap and
 * thread-safe. Equality is structural.
 */
class Formula {
public:
  static Formula letter(SentenceLetter l);
  static Formula letter(std::string name) { return letter(SentenceLetter(std::move(name))); }

  friend Formula neg(Formula f);
  friend Formula conj(Formula lhs, Formula rhs);
  friend Formula disj(Formula lhs, Formula rhs);
  friend Formula impl(Formula lhs, Formula rhs);

  NodeKind kind() const noexcept;
  bool is_letter() const noexcept { return kind() == NodeKind::Letter; }

  /// Requires kind() == Letter.
  const SentenceLetter& as_letter() const;
  /// Requires kind() == Not.
  const Formula& operand() const;
  /// Require a binary kind.
  const Formula& left() const;
  const Formula& right() const;

  bool operator==(const Formula& rhs) const noexcept;
  bool operator!=(const Formula& rhs) const noexcept { return !(*this == rhs); }

  /// Address of the shared structure node. Stable for the lifetime of any
  /// Formula sharing it; structurally equal formulas built separately get
  /// distinct identities. Suitable as a key in structure-sharing caches.
  const void* identity() const noexcept { return node_.get(); }

private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Defined after the class: std::optional<Formula> needs Formula complete.
struct Formula::Node {
  NodeKind kind;
  std::optional<SentenceLetter> letter;  // Letter only
  std::optional<Formula> lhs;            // Not operand, or binary left
  std::optional<Formula> rhs;            // binary right
};

inline NodeKind Formula::kind() const noexcept { return node_->kind; }
inline const SentenceLetter& Formula::as_letter() const { return *node_->letter; }
inline const Formula& Formula::operand() const { return *node_->lhs; }
inline const Formula& Formula::left() const { return *node_->lhs; }
inline const Formula& Formula::right() const { return *node_->rhs; }

Formula neg(Formula f);
Formula conj(Formula lhs, Formula rhs);
Formula disj(Formula lhs, Formula rhs);
Formula impl(Formula lhs, Formula rhs);

/**
 * Parse formula text. Grammar (whitespace-insensitive):
 *
 *   formula := implies ; implies := or ( "->" implies )? ; or := and ( "|" and )* ;
 *   and := unary ( "&" unary )* ; unary := "~" unary | atom ;
 *   atom := LETTER | "(" formula ")" ; LETTER := [A-Z][0-9]*
 *
 * Precedence ~ > & > | > ->; & and | associate left, -> associates right.
 * Throws ParseError with position and an expected-token message.
 */
Formula parse(std::string_view text);

/// Canonical rendering with minimal parentheses; parse(render(f)) == f.
std::string render(const Formula& f);

/// Distinct letters of f in first-occurrence order.
LetterSet letters(const Formula& f);

/// Letters of a formula sequence, merged in first-occurrence order.
LetterSet letters_of_all(const std::vector<Formula>& fs);

}  // namespace tetra
