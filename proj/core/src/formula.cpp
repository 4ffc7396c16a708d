#include "stratrev/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace stratrev {

// ---------------------------------------------------------------------------
// Signature

namespace {
const std::vector<std::string>& empty_names() {
  static const std::vector<std::string> none;
  return none;
}
}  // namespace

Signature::Signature() : names_(nullptr) {}

Signature::Signature(std::set<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(names.begin(),
                                                              names.end())) {}

Signature::Signature(std::initializer_list<std::string> names)
    : Signature(std::set<std::string>(names.begin(), names.end())) {}

std::size_t Signature::size() const noexcept {
  return names_ ? names_->size() : 0;
}

const std::vector<std::string>& Signature::names() const noexcept {
  return names_ ? *names_ : empty_names();
}

Atom Signature::atom(std::size_t index) const {
  if (index >= size()) throw SignatureError("atom index out of range");
  return Atom{index, names()[index]};
}

std::optional<std::size_t> Signature::index_of(
    std::string_view name) const noexcept {
  const auto& ns = names();
  auto it = std::lower_bound(ns.begin(), ns.end(), name);
  if (it == ns.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - ns.begin());
}

bool Signature::contains(std::string_view name) const noexcept {
  return index_of(name).has_value();
}

bool operator==(const Signature& a, const Signature& b) {
  return a.names_ == b.names_ || a.names() == b.names();
}

Signature merge(const Signature& a, const Signature& b) {
  if (a == b) return a;
  std::set<std::string> all(a.names().begin(), a.names().end());
  all.insert(b.names().begin(), b.names().end());
  return Signature(std::move(all));
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Connective kind;
  std::string name;            // Var only
  std::vector<Formula> kids;   // Not: 1, Implies: 2, And/Or: >= 2
  std::string text;
};

namespace {

int precedence(Connective k) {
  switch (k) {
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    default: return 5;
  }
}

std::string wrapped(const Formula& f, int min_precedence) {
  if (precedence(f.kind()) < min_precedence) return "(" + f.text() + ")";
  return f.text();
}

std::string join(const std::vector<Formula>& kids, const char* sep,
                 int min_precedence) {
  std::string out;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i != 0) out += sep;
    out += wrapped(kids[i], min_precedence);
  }
  return out;
}

std::string render(Connective kind, const std::string& name,
                   const std::vector<Formula>& kids) {
  switch (kind) {
    case Connective::True: return "true";
    case Connective::False: return "false";
    case Connective::Var: return name;
    case Connective::Not: return "!" + wrapped(kids[0], 4);
    case Connective::And: return join(kids, " & ", 4);
    case Connective::Or: return join(kids, " | ", 3);
    case Connective::Implies:
      // Right associative: the antecedent needs parentheses when it is
      // itself an implication, the consequent never does.
      return wrapped(kids[0], 2) + " -> " + wrapped(kids[1], 1);
  }
  return {};
}

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "true" || name == "false") return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && name.front() != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Formula Formula::constant(bool value) {
  static const Formula top(std::make_shared<const Node>(
      Node{Connective::True, {}, {}, "true"}));
  static const Formula bottom(std::make_shared<const Node>(
      Node{Connective::False, {}, {}, "false"}));
  return value ? top : bottom;
}

Formula Formula::var(std::string name) {
  if (!valid_atom_name(name))
    throw InvalidInputError("invalid atom name '" + name + "'");
  auto node = std::make_shared<Node>();
  node->kind = Connective::Var;
  node->text = name;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Not;
  node->kids.push_back(std::move(operand));
  node->text = render(Connective::Not, {}, node->kids);
  return Formula(std::move(node));
}

namespace {

// Canonicalization shared by And/Or: flatten same-kind operands, sort by
// text, drop duplicates. Collapsing to a constant or a single operand is
// handled by the callers.
std::vector<Formula> flatten_sort_dedupe(Connective kind,
                                         std::vector<Formula> operands) {
  std::vector<Formula> flat;
  flat.reserve(operands.size());
  for (auto& f : operands) {
    if (f.kind() == kind) {
      for (const auto& kid : f.operands()) flat.push_back(kid);
    } else {
      flat.push_back(std::move(f));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  return flat;
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> operands) {
  auto flat = flatten_sort_dedupe(Connective::And, std::move(operands));
  if (flat.empty()) return constant(true);
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<Node>();
  node->kind = Connective::And;
  node->kids = std::move(flat);
  node->text = render(Connective::And, {}, node->kids);
  return Formula(std::move(node));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  auto flat = flatten_sort_dedupe(Connective::Or, std::move(operands));
  if (flat.empty()) return constant(false);
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<Node>();
  node->kind = Connective::Or;
  node->kids = std::move(flat);
  node->text = render(Connective::Or, {}, node->kids);
  return Formula(std::move(node));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Implies;
  node->kids.push_back(std::move(antecedent));
  node->kids.push_back(std::move(consequent));
  node->text = render(Connective::Implies, {}, node->kids);
  return Formula(std::move(node));
}

Connective Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::var_name() const {
  if (kind() != Connective::Var)
    throw InvalidInputError("var_name() on a non-variable formula");
  return node_->name;
}

const std::vector<Formula>& Formula::operands() const noexcept {
  return node_->kids;
}

const std::string& Formula::text() const noexcept { return node_->text; }

void Formula::collect_atoms(std::set<std::string>& into) const {
  if (kind() == Connective::Var) {
    into.insert(node_->name);
    return;
  }
  for (const auto& kid : node_->kids) kid.collect_atoms(into);
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

// ---------------------------------------------------------------------------
// Base

Base::Base(std::vector<Formula> members) {
  for (auto& f : members) insert(std::move(f));
}

Base::Base(std::initializer_list<Formula> members) {
  for (const auto& f : members) insert(f);
}

void Base::insert(Formula f) {
  auto it = std::lower_bound(members_.begin(), members_.end(), f);
  if (it != members_.end() && *it == f) return;
  members_.insert(it, std::move(f));
}

bool Base::contains(const Formula& f) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), f);
  return it != members_.end() && *it == f;
}

bool Base::erase(const Formula& f) {
  auto it = std::lower_bound(members_.begin(), members_.end(), f);
  if (it == members_.end() || !(*it == f)) return false;
  members_.erase(it);
  return true;
}

void Base::collect_atoms(std::set<std::string>& into) const {
  for (const auto& f : members_) f.collect_atoms(into);
}

bool operator==(const Base& a, const Base& b) {
  return a.members_ == b.members_;
}

Base set_union(const Base& a, const Base& b) {
  Base out = a;
  for (const auto& f : b) out.insert(f);
  return out;
}

Base set_intersection(const Base& a, const Base& b) {
  Base out;
  for (const auto& f : a)
    if (b.contains(f)) out.insert(f);
  return out;
}

Base set_difference(const Base& a, const Base& b) {
  Base out;
  for (const auto& f : a)
    if (!b.contains(f)) out.insert(f);
  return out;
}

Signature signature_of(const Formula& f) {
  return Signature(f.atoms());
}

Signature signature_of(const Base& b) {
  std::set<std::string> names;
  b.collect_atoms(names);
  return Signature(std::move(names));
}

Signature signature_of(const Base& b, const Formula& extra) {
  std::set<std::string> names;
  b.collect_atoms(names);
  extra.collect_atoms(names);
  return Signature(std::move(names));
}

}  // namespace stratrev
