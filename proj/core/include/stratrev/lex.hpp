#pragma once

#include <cstddef>
#include <vector>

#include "stratrev/interpretation.hpp"
#include "stratrev/kb.hpp"

namespace stratrev {

/// Strict lexicographic preference between two subbases of the same
/// stratified KB: `a` wins when, at the first stratum where the selection
/// sizes differ, it keeps more formulas. Irreflexive and transitive. Throws
/// InvalidInputError when the subbases have different stratum counts.
bool lex_prefers(const Subbase& a, const Subbase& b);

/// All consistent subbases of ({sure}, S_1, ..., S_n) that contain the sure
/// formula and are maximal under lexicographic preference. Brute-force
/// subset enumeration, guarded by a total formula count (default 16);
/// throws CapExceededError beyond the guard. An oracle for verification,
/// not a production path.
std::vector<Subbase> lex_maximal_subbases(const StratifiedKB& kb,
                                          const Formula& sure,
                                          std::size_t max_formulas = 16);

/// Whether `psi` holds in every lex-maximal consistent subbase.
bool lex_entails(const StratifiedKB& kb, const Formula& sure,
                 const Formula& psi, std::size_t max_formulas = 16);

/// The pre-order on interpretations that compares per-stratum Dalal
/// distances lexicographically, highest-priority stratum first.
class ModelLexComparator {
 public:
  ModelLexComparator(const StratifiedKB& kb, const Signature& sig);

  std::vector<std::size_t> distance_vector(const Interpretation& w) const;
  std::vector<std::size_t> distance_vector(std::uint64_t bits) const;
  bool leq(const Interpretation& w1, const Interpretation& w2) const;

 private:
  Signature sig_;
  std::vector<ModelSet> stratum_models_;
};

/// The models of `sure` minimal in the per-stratum Dalal distance order.
/// Ties keep every minimal model.
ModelSet lex_minimal_models(const StratifiedKB& kb, const Formula& sure);

}  // namespace stratrev
