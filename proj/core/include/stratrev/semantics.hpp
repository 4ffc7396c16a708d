#pragma once

#include <cstdint>
#include <vector>

#include "stratrev/formula.hpp"
#include "stratrev/interpretation.hpp"

namespace stratrev {

/// Largest signature size model enumeration will accept. Default 24.
std::size_t enumeration_cap() noexcept;

/// Sets the cap; accepts 1..62. Throws InvalidInputError outside that range.
void set_enumeration_cap(std::size_t atoms);

/// Number of satisfiability-style queries (is_consistent / entails calls)
/// issued on this thread since the last reset. Lets callers compare how many
/// oracle calls different algorithms spend on the same input.
std::uint64_t oracle_call_count() noexcept;
void reset_oracle_call_count() noexcept;

/// Classical evaluation; f -> g is read as !f | g. Every atom of `f` must be
/// in the interpretation's signature.
bool evaluate(const Formula& f, const Interpretation& w);

/// All interpretations over `sig` satisfying every member of `b`. The empty
/// base yields all 2^|sig| interpretations. Throws CapExceededError when
/// |sig| exceeds the enumeration cap, SignatureError when `b` mentions atoms
/// outside `sig`.
ModelSet enumerate_models(const Base& b, const Signature& sig);

/// A formula whose model set is exactly `m` (full disjunctive normal form
/// over the signature, canonicalized). The empty set yields `false`.
Formula formula_of_models(const ModelSet& m);

bool is_consistent(const Base& b);
bool entails(const Base& b, const Formula& f);

/// Mutual entailment of the two bases' conjunctions.
bool equivalent(const Base& a, const Base& b);

/// Tautology test.
bool is_valid(const Formula& f);

/// The disjunct set of a formula: its operands when it is a disjunction,
/// otherwise the formula itself. Implications count as single opaque
/// disjuncts.
std::vector<Formula> disjuncts(const Formula& f);

/// True when every disjunct of `narrower` is also a disjunct of `wider`
/// (disjuncts compared canonically), in which case `narrower` entails
/// `wider`.
bool subsumes(const Formula& narrower, const Formula& wider);

/// All disjunctions formed by taking one formula from each member of the
/// family, canonicalized and deduplicated. The empty family yields {false};
/// a family with an empty member admits no selection and yields the empty
/// base.
Base cross_disjunctions(const std::vector<Base>& family);

/// Conjunction of a base's members; the empty base yields `true`.
Formula conjunction_of(const Base& b);

}  // namespace stratrev
