#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stratrev/interpretation.hpp"
#include "stratrev/kb.hpp"
#include "stratrev/revision.hpp"

namespace stratrev {

/// Model-based revision operator: given a consistent base and a satisfiable
/// formula, returns a nonempty subset of the formula's models over the given
/// signature.
using ModelRevisionOperator =
    std::function<ModelSet(const Base&, const Formula&, const Signature&)>;

/// Formula-based revision operator: given a base and a satisfiable formula,
/// returns a consistent base entailing the formula.
using FormulaRevisionOperator =
    std::function<Base(const Base&, const Formula&)>;

enum class StratumAction { Merged, Revised, Dropped };

const char* to_string(StratumAction action);

/// What happened at one stratum: merged means the stratum joined the result
/// unchanged; revised means conflicting information was weakened or revised
/// away (with the disjunction size used, when the weakening algorithms chose
/// one); dropped means the conflicting part could not be kept in any form.
struct StratumTrace {
  std::size_t stratum = 0;  // 1-based
  StratumAction action = StratumAction::Merged;
  std::optional<std::size_t> weakening_size;  // the k of a d_k weakening
  Base kernel_part;  // stratum formulas that were in conflict
};

/// Result of a stratified revision: a consistent base on the formula track,
/// a nonempty model set on the model track, plus the per-stratum trace.
struct RevisionOutcome {
  std::optional<Base> base;
  std::optional<ModelSet> model_set;
  std::vector<StratumTrace> trace;

  bool is_base() const noexcept { return base.has_value(); }
};

/// Disjunctive maxi-adjustment. Starting from {sure}, each stratum is merged
/// when consistent; otherwise its non-conflicting formulas are kept and the
/// conflicting ones are replaced by their smallest consistent set of size-k
/// disjunctions (k = 2, 3, ...), or dropped when none works.
RevisionOutcome dma(const StratifiedKB& kb, const Formula& sure);

/// Kernel-free variant: an inconsistent stratum is weakened wholesale; the
/// smallest consistent d_k over the entire stratum is added and nothing else
/// from it. Output equivalent to dma's, usually syntactically larger.
RevisionOutcome whole_dma(const StratifiedKB& kb, const Formula& sure);

/// Generic stratified revision on the model track. Keeps the running model
/// set, intersecting with each stratum when possible and revising the
/// stratum by the running set's formula otherwise. The operator is probed on
/// a known instance before use.
RevisionOutcome revise_model_based(const StratifiedKB& kb, const Formula& sure,
                                   const ModelRevisionOperator& op);

/// Generic stratified revision on the formula track. Keeps the running base,
/// merging consistent strata and revising otherwise; the revision argument
/// is the running base's conjunction, and that conjunction member of the
/// operator's output is expanded back into the running base's member set.
RevisionOutcome revise_formula_based(const StratifiedKB& kb,
                                     const Formula& sure,
                                     const FormulaRevisionOperator& op);

/// revise_model_based with Dalal's operator.
RevisionOutcome dr(const StratifiedKB& kb, const Formula& sure);

/// revise_formula_based with the reduced cardinality-maximizing operator.
RevisionOutcome cmr(const StratifiedKB& kb, const Formula& sure);

}  // namespace stratrev
