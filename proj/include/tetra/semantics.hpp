#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "tetra/formula.hpp"

namespace tetra {

/// Letter-count cap for exhaustive enumeration (2^20 valuations).
inline constexpr std::size_t kDefaultMaxLetters = 20;

/**
 * A total assignment of {0,1} to a finite letter set. Lookups of letters
 * outside the set throw UndeclaredLetterError; there are no defaults.
 */
class Valuation {
public:
  Valuation() = default;  // the single valuation of the empty letter set

  /// Valuation number `index` over `ls`: the first letter takes the most
  /// significant bit of `index`, so index 0 is all-0 and counting is binary.
  static Valuation from_index(const LetterSet& ls, std::uint64_t index);

  void set(SentenceLetter l, bool value);

  bool value(const SentenceLetter& l) const;  // throws UndeclaredLetterError
  bool contains(const SentenceLetter& l) const noexcept;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<std::pair<SentenceLetter, bool>>& entries() const noexcept { return entries_; }

  /// Equal as mappings, regardless of entry order.
  bool operator==(const Valuation& rhs) const;
  bool operator!=(const Valuation& rhs) const { return !(*this == rhs); }

  /// "A=0,B=1" in entry order; "(empty)" for the empty valuation.
  std::string to_string() const;

private:
  std::vector<std::pair<SentenceLetter, bool>> entries_;
};

/**
 * The 2^n valuations over a letter set, in binary-counting order (first
 * letter = most significant bit, 0 before 1). Valuations are materialized
 * on demand; the sequence itself is O(n) in memory.
 */
class ValuationSequence {
public:
  explicit ValuationSequence(LetterSet ls) : letters_(std::move(ls)) {}

  std::size_t size() const noexcept { return std::size_t{1} << letters_.size(); }
  Valuation operator[](std::size_t index) const { return Valuation::from_index(letters_, index); }
  const LetterSet& letters() const noexcept { return letters_; }

  class iterator {
  public:
    using value_type = Valuation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const ValuationSequence* seq, std::size_t index) : seq_(seq), index_(index) {}
    Valuation operator*() const { return (*seq_)[index_]; }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { iterator old = *this; ++index_; return old; }
    bool operator==(const iterator& rhs) const { return index_ == rhs.index_; }
    bool operator!=(const iterator& rhs) const { return index_ != rhs.index_; }

  private:
    const ValuationSequence* seq_;
    std::size_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

private:
  LetterSet letters_;
};

/// All valuations over `ls`. Throws CapExceededError if |ls| > max_letters.
ValuationSequence enumerate_valuations(LetterSet ls, std::size_t max_letters = kDefaultMaxLetters);

/// Classical truth value of f under v, by structural recursion.
bool eval(const Formula& f, const Valuation& v);

enum class StatusKind { Tautology, Contradiction, Generic };

/**
 * Where a formula sits semantically. Generic formulas carry both witnesses:
 * the first falsifying and first satisfying valuation in enumeration order.
 */
struct SemanticStatus {
  StatusKind kind;
  std::optional<Valuation> falsifying;  // Generic only
  std::optional<Valuation> satisfying;  // Generic only

  bool is_tautology() const noexcept { return kind == StatusKind::Tautology; }
  bool is_contradiction() const noexcept { return kind == StatusKind::Contradiction; }
  bool is_generic() const noexcept { return kind == StatusKind::Generic; }
};

SemanticStatus semantic_status(const Formula& f, std::size_t max_letters = kDefaultMaxLetters);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<Valuation> counterexample;  // first valuation where the values differ

  explicit operator bool() const noexcept { return equivalent; }
};

/// Truth-value agreement under every valuation of the combined letter set.
EquivalenceVerdict equivalent(const Formula& p, const Formula& q,
                              std::size_t max_letters = kDefaultMaxLetters);

struct EntailmentVerdict {
  bool holds = false;
  std::optional<Valuation> counterexample;  // premises all 1, conclusion 0

  explicit operator bool() const noexcept { return holds; }
};

EntailmentVerdict entails(const std::vector<Formula>& premises, const Formula& conclusion,
                          std::size_t max_letters = kDefaultMaxLetters);

struct SeparabilityVerdict {
  bool separable = false;
  std::optional<Valuation> v0;  // a -> 0, b -> 1
  std::optional<Valuation> v1;  // a -> 1, b -> 0

  explicit operator bool() const noexcept { return separable; }
};

/// Do valuations exist sending (a,b) to (0,1) and to (1,0)? Witnesses are the
/// first qualifying valuations in enumeration order.
SeparabilityVerdict are_separable(const Formula& a, const Formula& b,
                                  std::size_t max_letters = kDefaultMaxLetters);

}  // namespace tetra
