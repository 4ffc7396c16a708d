#include "stratrev/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace stratrev {

namespace {

std::atomic<std::size_t> g_enumeration_cap{24};
thread_local std::uint64_t g_oracle_calls = 0;

void require_within_cap(const Signature& sig) {
  std::size_t cap = enumeration_cap();
  if (sig.size() > cap)
    throw CapExceededError("signature of " + std::to_string(sig.size()) +
                           " atoms exceeds the enumeration cap of " +
                           std::to_string(cap));
}

void require_covered(const Signature& sig, const std::set<std::string>& atoms) {
  for (const auto& name : atoms)
    if (!sig.contains(name))
      throw SignatureError("atom '" + name + "' is not in the signature");
}

bool eval_bits(const Formula& f, const Signature& sig, std::uint64_t bits) {
  switch (f.kind()) {
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Var: {
      auto idx = sig.index_of(f.var_name());
      if (!idx)
        throw SignatureError("atom '" + f.var_name() +
                             "' is not in the signature");
      return (bits >> *idx) & 1;
    }
    case Connective::Not:
      return !eval_bits(f.operands()[0], sig, bits);
    case Connective::And:
      for (const auto& kid : f.operands())
        if (!eval_bits(kid, sig, bits)) return false;
      return true;
    case Connective::Or:
      for (const auto& kid : f.operands())
        if (eval_bits(kid, sig, bits)) return true;
      return false;
    case Connective::Implies:
      return !eval_bits(f.operands()[0], sig, bits) ||
             eval_bits(f.operands()[1], sig, bits);
  }
  return false;
}

bool satisfies_all(const Base& b, const Signature& sig, std::uint64_t bits) {
  for (const auto& f : b)
    if (!eval_bits(f, sig, bits)) return false;
  return true;
}

std::uint64_t interpretation_count(const Signature& sig) {
  return std::uint64_t{1} << sig.size();
}

}  // namespace

std::size_t enumeration_cap() noexcept {
  return g_enumeration_cap.load(std::memory_order_relaxed);
}

void set_enumeration_cap(std::size_t atoms) {
  if (atoms < 1 || atoms > 62)
    throw InvalidInputError("enumeration cap must be between 1 and 62");
  g_enumeration_cap.store(atoms, std::memory_order_relaxed);
}

std::uint64_t oracle_call_count() noexcept { return g_oracle_calls; }

void reset_oracle_call_count() noexcept { g_oracle_calls = 0; }

bool evaluate(const Formula& f, const Interpretation& w) {
  return eval_bits(f, w.signature(), w.bits());
}

ModelSet enumerate_models(const Base& b, const Signature& sig) {
  std::set<std::string> atoms;
  b.collect_atoms(atoms);
  require_covered(sig, atoms);
  require_within_cap(sig);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < interpretation_count(sig); ++m)
    if (satisfies_all(b, sig, m)) out.push_back(m);
  return ModelSet(sig, std::move(out));
}

Formula formula_of_models(const ModelSet& m) {
  if (m.empty()) return Formula::constant(false);
  const Signature& sig = m.signature();
  std::vector<Formula> shapes;
  shapes.reserve(m.size());
  for (std::uint64_t bits : m.bits()) {
    std::vector<Formula> literals;
    literals.reserve(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i) {
      Formula v = Formula::var(sig.names()[i]);
      literals.push_back(((bits >> i) & 1) ? v : Formula::negation(v));
    }
    shapes.push_back(Formula::conjunction(std::move(literals)));
  }
  return Formula::disjunction(std::move(shapes));
}

bool is_consistent(const Base& b) {
  ++g_oracle_calls;
  Signature sig = signature_of(b);
  require_within_cap(sig);
  for (std::uint64_t m = 0; m < interpretation_count(sig); ++m)
    if (satisfies_all(b, sig, m)) return true;
  return false;
}

bool entails(const Base& b, const Formula& f) {
  ++g_oracle_calls;
  Signature sig = signature_of(b, f);
  require_within_cap(sig);
  for (std::uint64_t m = 0; m < interpretation_count(sig); ++m)
    if (satisfies_all(b, sig, m) && !eval_bits(f, sig, m)) return false;
  return true;
}

bool equivalent(const Base& a, const Base& b) {
  return entails(a, conjunction_of(b)) && entails(b, conjunction_of(a));
}

bool is_valid(const Formula& f) { return entails(Base{}, f); }

std::vector<Formula> disjuncts(const Formula& f) {
  if (f.kind() == Connective::Or) return f.operands();
  return {f};
}

bool subsumes(const Formula& narrower, const Formula& wider) {
  std::vector<Formula> small = disjuncts(narrower);
  std::vector<Formula> large = disjuncts(wider);
  // Operands of a canonical disjunction are already sorted by text.
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

Base cross_disjunctions(const std::vector<Base>& family) {
  if (family.empty()) return Base{Formula::constant(false)};
  for (const auto& member : family)
    if (member.empty()) return Base{};
  Base out;
  std::vector<std::size_t> pick(family.size(), 0);
  while (true) {
    std::vector<Formula> chosen;
    chosen.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
      chosen.push_back(family[i].members()[pick[i]]);
    out.insert(Formula::disjunction(std::move(chosen)));
    std::size_t i = 0;
    for (; i < family.size(); ++i) {
      if (++pick[i] < family[i].size()) break;
      pick[i] = 0;
    }
    if (i == family.size()) break;
  }
  return out;
}

Formula conjunction_of(const Base& b) {
  return Formula::conjunction(
      std::vector<Formula>(b.members().begin(), b.members().end()));
}

}  // namespace stratrev
