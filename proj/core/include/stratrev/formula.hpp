#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stratrev/errors.hpp"

namespace stratrev {

/// A propositional variable together with its dense index in a signature.
struct Atom {
  std::size_t id;
  std::string name;
};

/// An immutable alphabet of atom names. Names are unique and sorted, and an
/// atom's id equals its position in that order. Value type; copies share
/// storage and are cheap.
class Signature {
 public:
  Signature();
  explicit Signature(std::set<std::string> names);
  Signature(std::initializer_list<std::string> names);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const std::vector<std::string>& names() const noexcept;
  Atom atom(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;
  bool contains(std::string_view name) const noexcept;

  friend bool operator==(const Signature& a, const Signature& b);
  friend bool operator!=(const Signature& a, const Signature& b) {
    return !(a == b);
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

Signature merge(const Signature& a, const Signature& b);

enum class Connective { True, False, Var, Not, And, Or, Implies };

/// An immutable propositional formula, always held in canonical form:
/// nested conjunctions/disjunctions are flattened, their operands sorted by
/// rendered text with duplicates removed, and single-operand chains
/// collapsed. Implications are kept as written; they are expanded only
/// during evaluation. Two formulas are equal exactly when their canonical
/// renderings coincide, which makes Formula usable as a set element.
class Formula {
 public:
  static Formula constant(bool value);
  static Formula var(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implication(Formula antecedent, Formula consequent);

  Connective kind() const noexcept;

  /// Variable name; only valid for Var nodes.
  const std::string& var_name() const;

  /// Child formulas. Not has one, Implies two (antecedent, consequent),
  /// And/Or two or more, constants and variables none.
  const std::vector<Formula>& operands() const noexcept;

  /// Canonical rendering in the input grammar. Identity key: equal text
  /// means equal formula.
  const std::string& text() const noexcept;

  void collect_atoms(std::set<std::string>& into) const;
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }
  friend bool operator<(const Formula& a, const Formula& b) {
    return a.text() < b.text();
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A finite set of formulas read conjunctively. Members are unique up to
/// canonical form and iterate in canonical text order.
class Base {
 public:
  using const_iterator = std::vector<Formula>::const_iterator;

  Base() = default;
  explicit Base(std::vector<Formula> members);
  Base(std::initializer_list<Formula> members);

  void insert(Formula f);
  bool contains(const Formula& f) const;
  /// Removes a member; returns whether it was present.
  bool erase(const Formula& f);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Formula>& members() const noexcept { return members_; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  void collect_atoms(std::set<std::string>& into) const;

  friend bool operator==(const Base& a, const Base& b);
  friend bool operator!=(const Base& a, const Base& b) { return !(a == b); }

 private:
  std::vector<Formula> members_;  // sorted by text, unique
};

Base set_union(const Base& a, const Base& b);
Base set_intersection(const Base& a, const Base& b);
Base set_difference(const Base& a, const Base& b);

/// Signature spanned by the atoms occurring in the given objects.
Signature signature_of(const Formula& f);
Signature signature_of(const Base& b);
Signature signature_of(const Base& b, const Formula& extra);

}  // namespace stratrev
