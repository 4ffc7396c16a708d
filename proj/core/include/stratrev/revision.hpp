#pragma once

#include <vector>

#include "stratrev/interpretation.hpp"
#include "stratrev/kb.hpp"

namespace stratrev {

/// Distance from a consistent base to an interpretation: the minimum Hamming
/// distance between `w` and any model of `k` over w's signature. Throws
/// InvalidInputError when `k` is inconsistent (the minimum ranges over its
/// models).
std::size_t dist_to_base(const Base& k, const Interpretation& w);

/// The total pre-order a base induces on interpretations: w1 before w2 when
/// w1 is at most as far from the base as w2.
class DistancePreorder {
 public:
  explicit DistancePreorder(Base k);

  bool leq(const Interpretation& w1, const Interpretation& w2) const;
  const Base& base() const noexcept { return base_; }

 private:
  Base base_;
};

/// Dalal's model-based revision: the models of `mu` closest to `k` in
/// Hamming distance, over the given signature. `k` must be consistent and
/// `mu` satisfiable.
ModelSet dalal_revise(const Base& k, const Formula& mu, const Signature& sig);

/// The set of cardinality-maximal subsets of `k` that do not entail `phi`.
/// All members share one cardinality; each is a subset of `k`; every
/// strictly larger subset entails `phi`.
using CardMaxFamily = std::vector<Base>;

/// Every subset of `k` of maximal cardinality among those not entailing
/// `phi`. Returns {k} when k itself does not entail phi, and the empty
/// family when even the empty set does (phi is a tautology).
CardMaxFamily card_max_subsets(const Base& k, const Formula& phi);

/// Cardinality-maximizing formula-based revision: the cross-disjunctions of
/// the maximal phi-compatible subsets of `k`, plus `phi` itself. `phi` must
/// be satisfiable; the result is consistent and entails `phi`.
Base cm_revise(const Base& k, const Formula& phi);

/// Subsumption-reduced form of cm_revise: formulas common to every maximal
/// subset are kept verbatim, the remaining cross-disjunctions are pruned of
/// members strictly subsumed by another, and `phi` is added. Logically
/// equivalent to cm_revise(k, phi) but usually much smaller.
Base cm_reduce(const Base& k, const Formula& phi);

/// Flat-base disjunctive weakening: formulas of `k` involved in no conflict
/// with `phi` are kept; the conflicting part is replaced by its smallest
/// consistent set of size-k disjunctions, or dropped when no size works.
/// The result is consistent and contains `phi`.
Base dma_revise(const Base& k, const Formula& phi);

}  // namespace stratrev
