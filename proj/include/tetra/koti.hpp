#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tetra/formula.hpp"
#include "tetra/semantics.hpp"

namespace tetra {

/**
 * The tuple constructions. One-generator kinds take a single formula a,
 * two-generator kinds take a pair a, b:
 *
 *   dilemma     (a, ~a)
 *   trilemma10  (a, b, ~(a|b))
 *   trilemma11  (a, ~a, ~(a|~a))
 *   modified3   (a, ~a, a|~a, ~(a|~a))
 *   modified7   (a, b, a|b, ~(a|b))
 *   dual12      (a, b, a&b, ~(a&b))
 *   dual13      (a, ~a, a&~a, ~(a&~a))
 *   proper14    (a&~b, ~a&b, a&b, ~a&~b)
 *
 * proper14 fixes the order above; some traditional listings exchange the
 * last two alternatives.
 */
enum class KotiKind {
  Dilemma,
  Trilemma10,
  Trilemma11,
  Modified3,
  Modified7,
  Dual12,
  Dual13,
  Proper14,
};

/// Number of generator formulas the kind takes (1 or 2).
std::size_t koti_arity(KotiKind kind) noexcept;
/// Number of alternatives the kind produces (2, 3 or 4).
std::size_t koti_size(KotiKind kind) noexcept;

const char* koti_kind_name(KotiKind kind) noexcept;
std::optional<KotiKind> koti_kind_from_name(const std::string& name) noexcept;

/// A constructed tuple: the kind, the generator(s), and the expanded
/// alternatives in schema order.
struct KotiTuple {
  KotiKind kind;
  std::vector<Formula> generators;
  std::vector<Formula> alternatives;
};

/// Instantiate the kind's schema. Throws ArityMismatchError when b is
/// present for a one-generator kind or missing for a two-generator kind.
KotiTuple build_koti(KotiKind kind, const Formula& a, const std::optional<Formula>& b = std::nullopt);

/// The four classes of formulas by truth-value pair under two fixed
/// valuations: L1 = (0,1), L2 = (1,0), L3 = (1,1), L4 = (0,0).
enum class Quadrant { L1, L2, L3, L4 };

const char* quadrant_name(Quadrant q) noexcept;
Quadrant quadrant_from_pair(bool under_v0, bool under_v1) noexcept;

/// Quadrant of p from the pair (eval(p,v0), eval(p,v1)).
Quadrant classify_formula(const Formula& p, const Valuation& v0, const Valuation& v1);

/// Four-way split of a formula sequence by quadrant; input order is kept
/// within each class.
struct PartitionReport {
  std::array<std::vector<Formula>, 4> classes;  // indexed by Quadrant
  Valuation v0, v1;

  const std::vector<Formula>& members(Quadrant q) const {
    return classes[static_cast<std::size_t>(q)];
  }
};

PartitionReport partition_report(const std::vector<Formula>& fs, const Valuation& v0,
                                 const Valuation& v1);

/// Two-way split by a single valuation: the class of formulas it falsifies
/// and the class it satisfies.
struct DilemmaPartition {
  std::vector<Formula> value_false;  // V(P) = 0
  std::vector<Formula> value_true;   // V(P) = 1
  Valuation v;
};

DilemmaPartition dilemma_partition(const std::vector<Formula>& fs, const Valuation& v);

/// Per-alternative quadrants, plus a flag telling whether they are pairwise
/// distinct (the representativeness claim for the tuple).
struct RepresentativesVerdict {
  std::vector<Quadrant> quadrants;  // one per alternative, in tuple order
  bool all_distinct = false;
};

/**
 * Classify each alternative of t under (v0, v1). The valuations must witness
 * the construction hypothesis: for one-generator kinds, a generic generator
 * with eval(a,v0)=0 and eval(a,v1)=1; for two-generator kinds, separability
 * with (a,b) -> (0,1) under v0 and (1,0) under v1. A violated hypothesis
 * throws PreconditionError rather than producing a verdict.
 */
RepresentativesVerdict check_representatives(const KotiTuple& t, const Valuation& v0,
                                             const Valuation& v1);

struct ExclusionVerdict {
  bool exclusive = false;
  // 0-based indices of the first jointly satisfiable pair of alternatives.
  std::optional<std::pair<std::size_t, std::size_t>> offending;

  explicit operator bool() const noexcept { return exclusive; }
};

/// Are the alternatives pairwise incompatible (every conjunction of two
/// distinct alternatives a contradiction)?
ExclusionVerdict mutual_exclusion(const KotiTuple& t);

struct ExhaustivenessVerdict {
  bool exhaustive = false;
  std::optional<Valuation> counterexample;  // valuation falsifying every alternative

  explicit operator bool() const noexcept { return exhaustive; }
};

/// Is the disjunction of all alternatives a tautology?
ExhaustivenessVerdict exhaustiveness(const KotiTuple& t);

/// Component-wise negation of the alternatives, order preserved.
std::vector<Formula> negate_tuple(const KotiTuple& t);

struct DualityVerdict {
  bool holds = false;
  std::optional<std::size_t> first_mismatch;  // 0-based component index

  explicit operator bool() const noexcept { return holds; }
};

/// Negating the dual12 tuple generated by (~a, ~b) yields, component by
/// component up to classical equivalence, the modified7 tuple of (a, b).
DualityVerdict duality_check(const Formula& a, const Formula& b);

enum class TupleOrder { Fixed, Insensitive };

/// Component-wise classical equivalence of two formula tuples. Fixed order by
/// default; TupleOrder::Insensitive matches components up to permutation.
bool tuples_equivalent(const std::vector<Formula>& xs, const std::vector<Formula>& ys,
                       TupleOrder order = TupleOrder::Fixed);

}  // namespace tetra
