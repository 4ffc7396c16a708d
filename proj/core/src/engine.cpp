#include "stratrev/engine.hpp"

#include "stratrev/semantics.hpp"

namespace stratrev {

const char* to_string(StratumAction action) {
  switch (action) {
    case StratumAction::Merged: return "merged";
    case StratumAction::Revised: return "revised";
    case StratumAction::Dropped: return "dropped";
  }
  return "?";
}

namespace {

void require_satisfiable(const Formula& sure) {
  if (!is_consistent(Base{sure}))
    throw InvalidInputError("the sure formula is unsatisfiable");
}

// Plug-in operators are validated on a one-atom instance before use: revise
// {p} by !p and check the output invariants.
void validate_operator(const ModelRevisionOperator& op) {
  Signature sig{"p"};
  Base k{Formula::var("p")};
  Formula mu = Formula::negation(Formula::var("p"));
  ModelSet out = op(k, mu, sig);
  if (out.empty())
    throw InvalidInputError("model revision operator returned no models");
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!evaluate(mu, out.interpretation(i)))
      throw InvalidInputError(
          "model revision operator returned a non-model of its argument");
}

void validate_operator(const FormulaRevisionOperator& op) {
  Base k{Formula::var("p")};
  Formula phi = Formula::negation(Formula::var("p"));
  Base out = op(k, phi);
  if (!is_consistent(out))
    throw InvalidInputError(
        "formula revision operator returned an inconsistent base");
  if (!entails(out, phi))
    throw InvalidInputError(
        "formula revision operator output does not entail its argument");
}

}  // namespace

RevisionOutcome dma(const StratifiedKB& kb, const Formula& sure) {
  require_satisfiable(sure);
  RevisionOutcome out;
  Base accumulated{sure};
  std::size_t index = 0;
  for (const Base& stratum : kb.strata()) {
    ++index;
    Base merged = set_union(accumulated, stratum);
    if (is_consistent(merged)) {
      accumulated = std::move(merged);
      out.trace.push_back({index, StratumAction::Merged, std::nullopt, {}});
      continue;
    }
    Base conflicting = set_intersection(kernel(merged), stratum);
    accumulated = set_union(accumulated, set_difference(stratum, conflicting));
    std::size_t k = 2;
    while (k <= conflicting.size() &&
           !is_consistent(
               set_union(accumulated, disjunctions_of_size(conflicting, k))))
      ++k;
    if (k <= conflicting.size()) {
      accumulated =
          set_union(accumulated, disjunctions_of_size(conflicting, k));
      out.trace.push_back({index, StratumAction::Revised, k, conflicting});
    } else {
      out.trace.push_back(
          {index, StratumAction::Dropped, std::nullopt, conflicting});
    }
  }
  out.base = std::move(accumulated);
  return out;
}

RevisionOutcome whole_dma(const StratifiedKB& kb, const Formula& sure) {
  require_satisfiable(sure);
  RevisionOutcome out;
  Base accumulated{sure};
  std::size_t index = 0;
  for (const Base& stratum : kb.strata()) {
    ++index;
    Base merged = set_union(accumulated, stratum);
    if (is_consistent(merged)) {
      accumulated = std::move(merged);
      out.trace.push_back({index, StratumAction::Merged, std::nullopt, {}});
      continue;
    }
    bool weakened = false;
    for (std::size_t k = 2; k <= stratum.size(); ++k) {
      Base candidate =
          set_union(accumulated, disjunctions_of_size(stratum, k));
      if (is_consistent(candidate)) {
        accumulated = std::move(candidate);
        out.trace.push_back({index, StratumAction::Revised, k, stratum});
        weakened = true;
        break;
      }
    }
    if (!weakened)
      out.trace.push_back(
          {index, StratumAction::Dropped, std::nullopt, stratum});
  }
  out.base = std::move(accumulated);
  return out;
}

RevisionOutcome revise_model_based(const StratifiedKB& kb, const Formula& sure,
                                   const ModelRevisionOperator& op) {
  require_satisfiable(sure);
  validate_operator(op);
  Signature sig = signature_of(kb, sure);
  RevisionOutcome out;
  ModelSet current = enumerate_models(Base{sure}, sig);
  std::size_t index = 0;
  for (const Base& stratum : kb.strata()) {
    ++index;
    ModelSet stratum_models = enumerate_models(stratum, sig);
    ModelSet shared = intersect(current, stratum_models);
    if (!shared.empty()) {
      current = std::move(shared);
      out.trace.push_back({index, StratumAction::Merged, std::nullopt, {}});
      continue;
    }
    current = op(stratum, formula_of_models(current), sig);
    if (current.empty())
      throw InvalidInputError("model revision operator returned no models");
    out.trace.push_back({index, StratumAction::Revised, std::nullopt, {}});
  }
  out.model_set = std::move(current);
  return out;
}

RevisionOutcome revise_formula_based(const StratifiedKB& kb,
                                     const Formula& sure,
                                     const FormulaRevisionOperator& op) {
  require_satisfiable(sure);
  validate_operator(op);
  RevisionOutcome out;
  Base accumulated{sure};
  std::size_t index = 0;
  for (const Base& stratum : kb.strata()) {
    ++index;
    Base merged = set_union(accumulated, stratum);
    if (is_consistent(merged)) {
      accumulated = std::move(merged);
      out.trace.push_back({index, StratumAction::Merged, std::nullopt, {}});
      continue;
    }
    Formula running = conjunction_of(accumulated);
    Base revised = op(stratum, running);
    // The operator treats the running base as the single formula `running`;
    // expand that member back into the base's formulas.
    revised.erase(running);
    accumulated = set_union(revised, accumulated);
    out.trace.push_back({index, StratumAction::Revised, std::nullopt, {}});
  }
  out.base = std::move(accumulated);
  return out;
}

RevisionOutcome dr(const StratifiedKB& kb, const Formula& sure) {
  return revise_model_based(
      kb, sure,
      [](const Base& k, const Formula& mu, const Signature& sig) {
        return dalal_revise(k, mu, sig);
      });
}

RevisionOutcome cmr(const StratifiedKB& kb, const Formula& sure) {
  return revise_formula_based(kb, sure, [](const Base& k, const Formula& phi) {
    return cm_reduce(k, phi);
  });
}

}  // namespace stratrev
