#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stratrev/formula.hpp"
#include "stratrev/semantics.hpp"

namespace stratrev {

/// A minimal inconsistent subset of some base: the set itself is
/// inconsistent while every proper subset is consistent.
using Conflict = Base;

/// Formulas partitioned into priority layers S_1..S_n; a lower index means a
/// more reliable stratum. Each stratum must be consistent on its own (the
/// union may well not be); this is checked on construction.
class StratifiedKB {
 public:
  StratifiedKB() = default;
  explicit StratifiedKB(std::vector<Base> strata);

  const std::vector<Base>& strata() const noexcept { return strata_; }
  std::size_t stratum_count() const noexcept { return strata_.size(); }

  /// Flattened union of all strata.
  Base union_all() const;

  friend bool operator==(const StratifiedKB& a, const StratifiedKB& b) {
    return a.strata_ == b.strata_;
  }
  friend bool operator!=(const StratifiedKB& a, const StratifiedKB& b) {
    return !(a == b);
  }

 private:
  std::vector<Base> strata_;
};

/// Signature spanned by a stratified KB, optionally extended by one formula.
Signature signature_of(const StratifiedKB& kb);
Signature signature_of(const StratifiedKB& kb, const Formula& extra);

/// Prepends a top-priority stratum {sure} to the KB. The sure formula must
/// be satisfiable; throws InvalidInputError otherwise.
StratifiedKB with_sure_formula(const StratifiedKB& kb, const Formula& sure);

/// All minimal inconsistent subsets of `b`, found by cardinality-ordered
/// subset search with superset pruning. Deterministic: ordered by size, then
/// by member texts.
std::vector<Conflict> conflicts(const Base& b);

/// Union of all conflicts of `b`; empty exactly when `b` is consistent.
Base kernel(const Base& b);

/// All disjunctions of `k` pairwise-distinct formulas of `source`,
/// canonicalized. Empty when k exceeds the source size; the source itself
/// when k is 1. Tautological results are kept as written. `k` must be >= 1.
Base disjunctions_of_size(const Base& source, std::size_t k);

/// A per-stratum selection from a stratified KB, plus the slot for the sure
/// formula. Used by the lexicographic oracle.
struct Subbase {
  Base sure;                 // {phi} or empty
  std::vector<Base> strata;  // strata[i] is a subset of the KB's stratum i+1

  /// All selected formulas as one flat base.
  Base flatten() const;

  /// (|sure|, |A_1|, ..., |A_n|), the vector compared lexicographically.
  std::vector<std::size_t> cardinality_vector() const;

  friend bool operator==(const Subbase& a, const Subbase& b) {
    return a.sure == b.sure && a.strata == b.strata;
  }
  friend bool operator!=(const Subbase& a, const Subbase& b) {
    return !(a == b);
  }
};

// --- Stratified KB text format ---------------------------------------------
//
//   # comment
//   [stratum 1]
//   a | b
//   [stratum 2]
//   !a
//
// Headers must count up consecutively from 1; one formula per line; blank
// lines and '#' comments ignored. The sure formula is never stored in the
// file; it is always supplied per invocation.

StratifiedKB parse_stratified_kb(std::string_view text);
StratifiedKB load_stratified_kb(const std::string& path);

/// Flat list of formulas, one per line, same comment rules, no headers.
Base parse_base_text(std::string_view text);
Base load_base_file(const std::string& path);

}  // namespace stratrev
