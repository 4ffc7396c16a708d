#include "stratrev/lex.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "stratrev/semantics.hpp"

namespace stratrev {

bool lex_prefers(const Subbase& a, const Subbase& b) {
  if (a.strata.size() != b.strata.size())
    throw InvalidInputError("subbases come from different stratified KBs");
  auto va = a.cardinality_vector();
  auto vb = b.cardinality_vector();
  return std::lexicographical_compare(vb.begin(), vb.end(), va.begin(),
                                      va.end());
}

std::vector<Subbase> lex_maximal_subbases(const StratifiedKB& kb,
                                          const Formula& sure,
                                          std::size_t max_formulas) {
  if (!is_consistent(Base{sure}))
    throw InvalidInputError("the sure formula is unsatisfiable");
  std::size_t total = 1;
  for (const auto& s : kb.strata()) total += s.size();
  if (total > max_formulas)
    throw CapExceededError("oracle guard: " + std::to_string(total) +
                           " formulas exceed the subset-enumeration limit of " +
                           std::to_string(max_formulas));

  const auto& strata = kb.strata();
  std::vector<Subbase> best;
  std::vector<std::size_t> best_vector;

  // Odometer over one subset mask per stratum; the sure slot is fixed.
  std::vector<std::uint64_t> masks(strata.size(), 0);
  while (true) {
    Subbase candidate;
    candidate.sure = Base{sure};
    candidate.strata.reserve(strata.size());
    for (std::size_t i = 0; i < strata.size(); ++i) {
      Base picked;
      const auto& members = strata[i].members();
      for (std::size_t j = 0; j < members.size(); ++j)
        if ((masks[i] >> j) & 1) picked.insert(members[j]);
      candidate.strata.push_back(std::move(picked));
    }
    if (is_consistent(candidate.flatten())) {
      auto vec = candidate.cardinality_vector();
      if (best.empty() ||
          std::lexicographical_compare(best_vector.begin(), best_vector.end(),
                                       vec.begin(), vec.end())) {
        best.clear();
        best_vector = vec;
      }
      if (vec == best_vector) best.push_back(std::move(candidate));
    }
    std::size_t i = 0;
    for (; i < strata.size(); ++i) {
      if (++masks[i] < (std::uint64_t{1} << strata[i].size())) break;
      masks[i] = 0;
    }
    if (i == strata.size()) break;
  }
  return best;
}

bool lex_entails(const StratifiedKB& kb, const Formula& sure,
                 const Formula& psi, std::size_t max_formulas) {
  for (const auto& subbase : lex_maximal_subbases(kb, sure, max_formulas))
    if (!entails(subbase.flatten(), psi)) return false;
  return true;
}

ModelLexComparator::ModelLexComparator(const StratifiedKB& kb,
                                       const Signature& sig)
    : sig_(sig) {
  stratum_models_.reserve(kb.stratum_count());
  for (const auto& stratum : kb.strata())
    stratum_models_.push_back(enumerate_models(stratum, sig));
}

std::vector<std::size_t> ModelLexComparator::distance_vector(
    std::uint64_t bits) const {
  std::vector<std::size_t> out;
  out.reserve(stratum_models_.size());
  for (const auto& models : stratum_models_) {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t mb : models.bits()) {
      auto h = static_cast<std::size_t>(std::popcount(mb ^ bits));
      if (h < d) d = h;
    }
    out.push_back(d);
  }
  return out;
}

std::vector<std::size_t> ModelLexComparator::distance_vector(
    const Interpretation& w) const {
  if (w.signature() != sig_)
    throw SignatureError("interpretation over a different signature");
  return distance_vector(w.bits());
}

bool ModelLexComparator::leq(const Interpretation& w1,
                             const Interpretation& w2) const {
  auto v1 = distance_vector(w1);
  auto v2 = distance_vector(w2);
  return !std::lexicographical_compare(v2.begin(), v2.end(), v1.begin(),
                                       v1.end());
}

ModelSet lex_minimal_models(const StratifiedKB& kb, const Formula& sure) {
  Signature sig = signature_of(kb, sure);
  ModelSet candidates = enumerate_models(Base{sure}, sig);
  if (candidates.empty())
    throw InvalidInputError("the sure formula is unsatisfiable");
  ModelLexComparator order(kb, sig);

  std::vector<std::size_t> best_vector;
  std::vector<std::uint64_t> chosen;
  for (std::uint64_t bits : candidates.bits()) {
    auto vec = order.distance_vector(bits);
    if (chosen.empty() ||
        std::lexicographical_compare(vec.begin(), vec.end(),
                                     best_vector.begin(), best_vector.end())) {
      best_vector = vec;
      chosen.clear();
    }
    if (vec == best_vector) chosen.push_back(bits);
  }
  return ModelSet(sig, std::move(chosen));
}

}  // namespace stratrev
