#include "tetra/koti.hpp"

#include <algorithm>
#include <sstream>

namespace tetra {

std::size_t koti_arity(KotiKind kind) noexcept {
  switch (kind) {
    case KotiKind::Dilemma:
    case KotiKind::Trilemma11:
    case KotiKind::Modified3:
    case KotiKind::Dual13:
      return 1;
    case KotiKind::Trilemma10:
    case KotiKind::Modified7:
    case KotiKind::Dual12:
    case KotiKind::Proper14:
      return 2;
  }
  return 0;
}

std::size_t koti_size(KotiKind kind) noexcept {
  switch (kind) {
    case KotiKind::Dilemma:
      return 2;
    case KotiKind::Trilemma10:
    case KotiKind::Trilemma11:
      return 3;
    default:
      return 4;
  }
}

const char* koti_kind_name(KotiKind kind) noexcept {
  switch (kind) {
    case KotiKind::Dilemma: return "dilemma";
    case KotiKind::Trilemma10: return "trilemma10";
    case KotiKind::Trilemma11: return "trilemma11";
    case KotiKind::Modified3: return "modified3";
    case KotiKind::Modified7: return "modified7";
    case KotiKind::Dual12: return "dual12";
    case KotiKind::Dual13: return "dual13";
    case KotiKind::Proper14: return "proper14";
  }
  return "?";
}

std::optional<KotiKind> koti_kind_from_name(const std::string& name) noexcept {
  static constexpr KotiKind kAll[] = {
      KotiKind::Dilemma,  KotiKind::Trilemma10, KotiKind::Trilemma11, KotiKind::Modified3,
      KotiKind::Modified7, KotiKind::Dual12,    KotiKind::Dual13,     KotiKind::Proper14,
  };
  for (KotiKind k : kAll) {
    if (name == koti_kind_name(k)) return k;
  }
  return std::nullopt;
}

KotiTuple build_koti(KotiKind kind, const Formula& a, const std::optional<Formula>& b) {
  const std::size_t arity = koti_arity(kind);
  if (arity == 1 && b.has_value()) {
    throw ArityMismatchError(std::string(koti_kind_name(kind)) + " takes one generator, got two");
  }
  if (arity == 2 && !b.has_value()) {
    throw ArityMismatchError(std::string(koti_kind_name(kind)) + " takes two generators, got one");
  }

  KotiTuple t;
  t.kind = kind;
  t.generators.push_back(a);
  if (b) t.generators.push_back(*b);

  switch (kind) {
    case KotiKind::Dilemma:
      t.alternatives = {a, neg(a)};
      break;
    case KotiKind::Trilemma10:
      t.alternatives = {a, *b, neg(disj(a, *b))};
      break;
    case KotiKind::Trilemma11:
      t.alternatives = {a, neg(a), neg(disj(a, neg(a)))};
      break;
    case KotiKind::Modified3:
      t.alternatives = {a, neg(a), disj(a, neg(a)), neg(disj(a, neg(a)))};
      break;
    case KotiKind::Modified7:
      t.alternatives = {a, *b, disj(a, *b), neg(disj(a, *b))};
      break;
    case KotiKind::Dual12:
      t.alternatives = {a, *b, conj(a, *b), neg(conj(a, *b))};
      break;
    case KotiKind::Dual13:
      t.alternatives = {a, neg(a), conj(a, neg(a)), neg(conj(a, neg(a)))};
      break;
    case KotiKind::Proper14:
      t.alternatives = {conj(a, neg(*b)), conj(neg(a), *b), conj(a, *b), conj(neg(a), neg(*b))};
      break;
  }
  return t;
}

const char* quadrant_name(Quadrant q) noexcept {
  switch (q) {
    case Quadrant::L1: return "L1";
    case Quadrant::L2: return "L2";
    case Quadrant::L3: return "L3";
    case Quadrant::L4: return "L4";
  }
  return "?";
}

Quadrant quadrant_from_pair(bool under_v0, bool under_v1) noexcept {
  if (!under_v0) return under_v1 ? Quadrant::L1 : Quadrant::L4;
  return under_v1 ? Quadrant::L3 : Quadrant::L2;
}

Quadrant classify_formula(const Formula& p, const Valuation& v0, const Valuation& v1) {
  return quadrant_from_pair(eval(p, v0), eval(p, v1));
}

PartitionReport partition_report(const std::vector<Formula>& fs, const Valuation& v0,
                                 const Valuation& v1) {
  PartitionReport report;
  report.v0 = v0;
  report.v1 = v1;
  for (const Formula& f : fs) {
    const Quadrant q = classify_formula(f, v0, v1);
    report.classes[static_cast<std::size_t>(q)].push_back(f);
  }
  return report;
}

DilemmaPartition dilemma_partition(const std::vector<Formula>& fs, const Valuation& v) {
  DilemmaPartition report;
  report.v = v;
  for (const Formula& f : fs) {
    (eval(f, v) ? report.value_true : report.value_false).push_back(f);
  }
  return report;
}

RepresentativesVerdict check_representatives(const KotiTuple& t, const Valuation& v0,
                                             const Valuation& v1) {
  const Formula& a = t.generators.front();
  if (t.generators.size() == 1) {
    if (eval(a, v0) != false || eval(a, v1) != true) {
      throw PreconditionError(
          "valuations are not genericity witnesses for the generator: "
          "need v0(a)=0 and v1(a)=1");
    }
  } else {
    const Formula& b = t.generators.back();
    if (eval(a, v0) != false || eval(b, v0) != true || eval(a, v1) != true ||
        eval(b, v1) != false) {
      throw PreconditionError(
          "valuations are not separability witnesses for the generators: "
          "need (a,b)=(0,1) under v0 and (1,0) under v1");
    }
  }

  RepresentativesVerdict verdict;
  verdict.quadrants.reserve(t.alternatives.size());
  for (const Formula& alt : t.alternatives) {
    verdict.quadrants.push_back(classify_formula(alt, v0, v1));
  }
  verdict.all_distinct = true;
  for (std::size_t i = 0; i < verdict.quadrants.size() && verdict.all_distinct; ++i) {
    for (std::size_t j = i + 1; j < verdict.quadrants.size(); ++j) {
      if (verdict.quadrants[i] == verdict.quadrants[j]) {
        verdict.all_distinct = false;
        break;
      }
    }
  }
  return verdict;
}

ExclusionVerdict mutual_exclusion(const KotiTuple& t) {
  for (std::size_t i = 0; i < t.alternatives.size(); ++i) {
    for (std::size_t j = i + 1; j < t.alternatives.size(); ++j) {
      if (!semantic_status(conj(t.alternatives[i], t.alternatives[j])).is_contradiction()) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {true, std::nullopt};
}

ExhaustivenessVerdict exhaustiveness(const KotiTuple& t) {
  Formula all = t.alternatives.front();
  for (std::size_t i = 1; i < t.alternatives.size(); ++i) {
    all = disj(std::move(all), t.alternatives[i]);
  }
  const SemanticStatus status = semantic_status(all);
  if (status.is_tautology()) return {true, std::nullopt};
  // The falsifying witness is the sequence-first valuation making every
  // alternative 0. A contradiction has no recorded witness; take the first
  // valuation outright.
  if (status.is_contradiction()) {
    return {false, enumerate_valuations(letters_of_all(t.alternatives))[0]};
  }
  return {false, status.falsifying};
}

std::vector<Formula> negate_tuple(const KotiTuple& t) {
  std::vector<Formula> out;
  out.reserve(t.alternatives.size());
  for (const Formula& alt : t.alternatives) out.push_back(neg(alt));
  return out;
}

DualityVerdict duality_check(const Formula& a, const Formula& b) {
  const std::vector<Formula> negated_dual =
      negate_tuple(build_koti(KotiKind::Dual12, neg(a), neg(b)));
  const KotiTuple modified = build_koti(KotiKind::Modified7, a, b);
  for (std::size_t i = 0; i < negated_dual.size(); ++i) {
    if (!equivalent(negated_dual[i], modified.alternatives[i])) {
      return {false, i};
    }
  }
  return {true, std::nullopt};
}

bool tuples_equivalent(const std::vector<Formula>& xs, const std::vector<Formula>& ys,
                       TupleOrder order) {
  if (xs.size() != ys.size()) return false;
  if (order == TupleOrder::Fixed) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!equivalent(xs[i], ys[i])) return false;
    }
    return true;
  }
  // Insensitive: greedy matching is not enough in general, but tuples here
  // are at most 4 long, so search all assignments.
  std::vector<std::size_t> perm(ys.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i) {
      ok = static_cast<bool>(equivalent(xs[i], ys[perm[i]]));
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace tetra
