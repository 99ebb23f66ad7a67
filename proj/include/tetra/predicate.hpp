// Monadic predicate formulas over finite domains.
//
// Quantified formulas are evaluated by exhaustion over an explicit finite
// model: a domain of named elements plus one extension (subset of the
// domain) per unary predicate.  This is enough to decide every equivalence
// the koti constructions need, because all of them involve a single unary
// predicate and small domains are decisive.
//
// Concrete grammar (extends the propositional one):
//
//   mformula   := mimplies
//   mimplies   := mor ( "->" mimplies )?
//   mor        := mand ( "|" mand )*
//   mand       := munary ( "&" munary )*
//   munary     := "~" munary | quantifier | matom
//   quantifier := ( "forall" | "exists" ) VAR "." mimplies
//   matom      := PRED "(" VAR ")" | "(" mformula ")"
//   PRED       := [A-Z][0-9]*
//   VAR        := [a-z][0-9]*
//
// A quantifier's body extends as far right as possible ("forall x. F(x) &
// G(x)" binds both conjuncts).  The renderer always parenthesizes a
// quantified subformula that appears as an operand, so render/parse
// round-trips are exact.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/errors.hpp"

namespace tetra {

/// True iff `name` is a well-formed predicate name ([A-Z][0-9]*).
bool valid_predicate_name(std::string_view name) noexcept;

/// True iff `name` is a well-formed variable name ([a-z][0-9]*).
bool valid_variable_name(std::string_view name) noexcept;

enum class MonadicKind : std::uint8_t {
  Atom,
  Not,
  And,
  Or,
  Implies,
  ForAll,
  Exists,
};

/// Immutable monadic predicate formula.  Like Formula, nodes are shared
/// and never mutated, so copies are cheap and values are safe to share.
class MonadicFormula {
 public:
  /// Atomic formula `pred(var)`.  Throws std::invalid_argument on a
  /// malformed predicate or variable name.
  static MonadicFormula atom(std::string predicate, std::string variable);

  /// Universal quantification `forall var. body`.
  static MonadicFormula forall(std::string variable, MonadicFormula body);

  /// Existential quantification `exists var. body`.
  static MonadicFormula exists(std::string variable, MonadicFormula body);

  MonadicKind kind() const noexcept;

  /// Predicate name; requires kind() == Atom.
  const std::string& predicate() const;

  /// Variable name; requires kind() is Atom, ForAll or Exists.
  const std::string& variable() const;

  /// Child of a Not node.
  const MonadicFormula& operand() const;

  /// Children of And / Or / Implies nodes.
  const MonadicFormula& left() const;
  const MonadicFormula& right() const;

  /// Body of a quantifier node.
  const MonadicFormula& body() const;

  /// Structural equality (same shape, same names).
  bool operator==(const MonadicFormula& other) const;
  bool operator!=(const MonadicFormula& other) const { return !(*this == other); }

  friend MonadicFormula neg(MonadicFormula f);
  friend MonadicFormula conj(MonadicFormula lhs, MonadicFormula rhs);
  friend MonadicFormula disj(MonadicFormula lhs, MonadicFormula rhs);
  friend MonadicFormula impl(MonadicFormula lhs, MonadicFormula rhs);

 private:
  struct Node;
  explicit MonadicFormula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

MonadicFormula neg(MonadicFormula f);
MonadicFormula conj(MonadicFormula lhs, MonadicFormula rhs);
MonadicFormula disj(MonadicFormula lhs, MonadicFormula rhs);
MonadicFormula impl(MonadicFormula lhs, MonadicFormula rhs);

/// Parses the grammar above.  Throws ParseError on malformed input.
MonadicFormula parse_monadic(std::string_view text);

/// Canonical text with minimal parentheses (quantifiers are parenthesized
/// whenever they appear as an operand).  parse_monadic(render(f)) == f.
std::string render(const MonadicFormula& f);

/// Distinct predicate names in first-occurrence order.
std::vector<std::string> predicates_of(const MonadicFormula& f);

/// Variables with at least one free occurrence, in first-occurrence order.
std::vector<std::string> free_variables(const MonadicFormula& f);

/// True iff the formula has no free variable occurrences.
bool is_closed(const MonadicFormula& f);

/// A finite model: a nonempty domain of distinct named elements and an
/// extension per predicate.  Extensions must be subsets of the domain.
class FiniteModel {
 public:
  /// Throws PreconditionError if the domain is empty or has duplicates.
  explicit FiniteModel(std::vector<std::string> domain);

  /// The model with domain {d1, ..., dn} and no predicates yet.
  static FiniteModel standard(std::size_t n);

  /// Sets (or replaces) a predicate's extension.  Throws PreconditionError
  /// if a member is not a domain element; duplicates are collapsed.
  void set_extension(const std::string& predicate, std::vector<std::string> members);

  const std::vector<std::string>& domain() const noexcept { return domain_; }
  bool has_predicate(const std::string& predicate) const noexcept;

  /// Extension lookup; throws UnknownPredicateError if absent.
  const std::vector<std::string>& extension(const std::string& predicate) const;

  /// True iff `element` is in the predicate's extension.  Throws
  /// UnknownPredicateError if the predicate has no extension.
  bool holds(const std::string& predicate, const std::string& element) const;

  /// Predicate names in the order their extensions were first set.
  std::vector<std::string> predicates() const;

  /// E.g. "domain {d1,d2}; F={d1}; G={}".
  std::string to_string() const;

  bool operator==(const FiniteModel& other) const;

 private:
  std::vector<std::string> domain_;
  std::vector<std::pair<std::string, std::vector<std::string>>> extensions_;
};

/// Evaluates a closed formula in a model.  Quantifiers range over the whole
/// domain.  Throws OpenFormulaError on a free variable and
/// UnknownPredicateError on a predicate the model does not interpret.
bool eval_model(const MonadicFormula& f, const FiniteModel& m);

/// Cap on |predicates| * domain_size for model enumeration.
inline constexpr std::size_t kDefaultMaxModelBits = 16;

/// Default largest domain size searched by the finite equivalence check.
inline constexpr std::size_t kDefaultMaxDomain = 4;

/// All models over the fixed domain {d1..dn} for the given predicates,
/// enumerated lazily in binary-counting order: predicate i owns bit block
/// [i*n, (i+1)*n), element d(j+1) is bit j, and extensions grow from the
/// all-empty model upward.
class ModelSequence {
 public:
  ModelSequence(std::vector<std::string> predicates, std::size_t n);

  std::size_t size() const noexcept { return std::size_t{1} << bits_; }
  FiniteModel operator[](std::size_t index) const;

  class iterator {
   public:
    using value_type = FiniteModel;
    using difference_type = std::ptrdiff_t;

    iterator(const ModelSequence* seq, std::size_t index) : seq_(seq), index_(index) {}
    FiniteModel operator*() const { return (*seq_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++index_;
      return tmp;
    }
    bool operator==(const iterator& other) const { return index_ == other.index_; }
    bool operator!=(const iterator& other) const { return index_ != other.index_; }

   private:
    const ModelSequence* seq_;
    std::size_t index_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  std::vector<std::string> predicates_;
  std::size_t n_;
  std::size_t bits_;
};

/// Checks the caps and returns the sequence of all 2^(|predicates|*n)
/// models.  Throws PreconditionError if n == 0 and CapExceededError if
/// |predicates| * n exceeds `max_bits`.
ModelSequence enumerate_models(std::vector<std::string> predicates, std::size_t n,
                               std::size_t max_bits = kDefaultMaxModelBits);

struct FinEquivalenceVerdict {
  bool equivalent = false;
  /// First countermodel in enumeration order (smallest domain first).
  std::optional<FiniteModel> countermodel;
};

/// True iff p and q agree on every model of every domain size 1..max_n,
/// over the union of their predicates.  Both formulas must be closed.
FinEquivalenceVerdict equivalent_fin(const MonadicFormula& p, const MonadicFormula& q,
                                     std::size_t max_n = kDefaultMaxDomain,
                                     std::size_t max_bits = kDefaultMaxModelBits);

/// First model (sizes 1..max_n, enumeration order) satisfying f, if any.
std::optional<FiniteModel> first_model_satisfying(const MonadicFormula& f,
                                                  std::size_t max_n = kDefaultMaxDomain,
                                                  std::size_t max_bits = kDefaultMaxModelBits);

/// The formulas of the predicate instantiation: the generators
/// A = exists x. F(x) and B = exists x. ~F(x), the proper tuple built from
/// them, its quantified counterparts, and the redundantly guarded variant.
struct PredicateKotiFormulas {
  MonadicFormula a;
  MonadicFormula b;
  /// (A & ~B, ~A & B, A & B, ~A & ~B).
  std::vector<MonadicFormula> proper;
  /// (forall x. F(x), forall x. ~F(x), (exists x. F(x)) & (exists x. ~F(x)),
  ///  forall x. F(x) & ~F(x)).
  std::vector<MonadicFormula> quantified;
  /// (C1, C2 & ~C1, C3 & ~C1 & ~C2, C4 & ~C1 & ~C2 & ~C3).
  std::vector<MonadicFormula> guarded;
};

PredicateKotiFormulas predicate_koti_formulas();

struct PredicateCheck {
  std::string name;
  bool passed = false;
  /// Countermodel for a failed equivalence, offending model for a failed
  /// exclusion/exhaustiveness check, or witness for a satisfiability check.
  std::optional<FiniteModel> model;
};

struct PredicateKotiReport {
  std::size_t max_n = 0;
  std::vector<PredicateCheck> checks;

  bool passed() const;
};

/// Runs the full battery over domains 1..max_n: componentwise equivalence
/// of the proper tuple with its quantified counterparts, unsatisfiability
/// of the fourth alternative everywhere, unsatisfiability of the third
/// exactly at n == 1 (with a witness at n >= 2), both quantifier dualities,
/// pairwise exclusion and joint exhaustiveness over all models, and the
/// guarded-tuple equivalence.  Requires max_n >= 2.
PredicateKotiReport predicate_koti_check(std::size_t max_n = kDefaultMaxDomain,
                                         std::size_t max_bits = kDefaultMaxModelBits);

}  // namespace tetra
