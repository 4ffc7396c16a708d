#include "stratrev/revision.hpp"

#include <bit>
#include <limits>

#include "stratrev/semantics.hpp"

namespace stratrev {

std::size_t dist_to_base(const Base& k, const Interpretation& w) {
  ModelSet mk = enumerate_models(k, w.signature());
  if (mk.empty())
    throw InvalidInputError("distance to an inconsistent base is undefined");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t bits : mk.bits()) {
    auto d = static_cast<std::size_t>(std::popcount(bits ^ w.bits()));
    if (d < best) best = d;
  }
  return best;
}

DistancePreorder::DistancePreorder(Base k) : base_(std::move(k)) {
  if (!is_consistent(base_))
    throw InvalidInputError("distance pre-order over an inconsistent base");
}

bool DistancePreorder::leq(const Interpretation& w1,
                           const Interpretation& w2) const {
  if (w1.signature() != w2.signature())
    throw SignatureError("interpretations over different signatures");
  return dist_to_base(base_, w1) <= dist_to_base(base_, w2);
}

ModelSet dalal_revise(const Base& k, const Formula& mu, const Signature& sig) {
  if (!is_consistent(k))
    throw InvalidInputError("Dalal revision requires a consistent base");
  ModelSet candidates = enumerate_models(Base{mu}, sig);
  if (candidates.empty())
    throw InvalidInputError("revision formula is unsatisfiable");
  ModelSet anchor = enumerate_models(k, sig);

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint64_t> chosen;
  for (std::uint64_t wb : candidates.bits()) {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t kb : anchor.bits()) {
      auto h = static_cast<std::size_t>(std::popcount(wb ^ kb));
      if (h < d) d = h;
    }
    if (d < best) {
      best = d;
      chosen.clear();
    }
    if (d == best) chosen.push_back(wb);
  }
  return ModelSet(sig, std::move(chosen));
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

CardMaxFamily card_max_subsets(const Base& k, const Formula& phi) {
  if (k.size() > 63)
    throw CapExceededError("subset search over more than 63 formulas");
  const auto& members = k.members();
  for (std::size_t card = members.size() + 1; card-- > 0;) {
    CardMaxFamily found;
    std::vector<std::size_t> idx(card);
    for (std::size_t i = 0; i < card; ++i) idx[i] = i;
    do {
      Base subset;
      for (std::size_t i : idx) subset.insert(members[i]);
      if (!entails(subset, phi)) found.push_back(std::move(subset));
    } while (next_combination(idx, members.size()));
    if (!found.empty()) return found;
  }
  return {};
}

Base cm_revise(const Base& k, const Formula& phi) {
  if (!is_consistent(Base{phi}))
    throw InvalidInputError("revision formula is unsatisfiable");
  CardMaxFamily family = card_max_subsets(k, Formula::negation(phi));
  Base out = cross_disjunctions(family);
  out.insert(phi);
  return out;
}

Base cm_reduce(const Base& k, const Formula& phi) {
  if (!is_consistent(Base{phi}))
    throw InvalidInputError("revision formula is unsatisfiable");
  CardMaxFamily family = card_max_subsets(k, Formula::negation(phi));

  Base common = family.front();
  for (std::size_t i = 1; i < family.size(); ++i)
    common = set_intersection(common, family[i]);

  std::vector<Base> stripped;
  stripped.reserve(family.size());
  for (const auto& member : family)
    stripped.push_back(set_difference(member, common));

  Base crossed = cross_disjunctions(stripped);
  Base survivors;
  for (const auto& candidate : crossed) {
    bool dominated = false;
    for (const auto& other : crossed) {
      if (other != candidate && subsumes(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) survivors.insert(candidate);
  }

  Base out = set_union(survivors, common);
  out.insert(phi);
  return out;
}

Base dma_revise(const Base& k, const Formula& phi) {
  if (!is_consistent(Base{phi}))
    throw InvalidInputError("revision formula is unsatisfiable");
  Base with_phi = k;
  with_phi.insert(phi);
  Base conflicting = set_intersection(kernel(with_phi), k);
  Base context = set_difference(k, conflicting);
  context.insert(phi);
  for (std::size_t size = 1; size <= conflicting.size(); ++size) {
    Base weakened =
        set_union(context, disjunctions_of_size(conflicting, size));
    if (is_consistent(weakened)) return weakened;
  }
  return context;
}

}  // namespace stratrev
