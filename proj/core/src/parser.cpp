#include "stratrev/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace stratrev {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume_arrow() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
        text_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  std::string take_identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        (!std::isalpha(static_cast<unsigned char>(text_[pos_])) &&
         text_[pos_] != '_'))
      throw ParseError("expected an atom, constant or '('", pos_);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Formula parse_implication(Cursor& c);

Formula parse_primary(Cursor& c) {
  if (c.consume('(')) {
    Formula inner = parse_implication(c);
    if (!c.consume(')'))
      throw ParseError("expected ')'", c.position());
    return inner;
  }
  std::string word = c.take_identifier();
  if (word == "true") return Formula::constant(true);
  if (word == "false") return Formula::constant(false);
  return Formula::var(std::move(word));
}

Formula parse_negation(Cursor& c) {
  if (c.consume('!')) return Formula::negation(parse_negation(c));
  return parse_primary(c);
}

Formula parse_conjunction(Cursor& c) {
  std::vector<Formula> parts{parse_negation(c)};
  while (c.peek() == '&') {
    c.consume('&');
    parts.push_back(parse_negation(c));
  }
  if (parts.size() == 1) return parts.front();
  return Formula::conjunction(std::move(parts));
}

Formula parse_disjunction(Cursor& c) {
  std::vector<Formula> parts{parse_conjunction(c)};
  while (c.peek() == '|') {
    c.consume('|');
    parts.push_back(parse_conjunction(c));
  }
  if (parts.size() == 1) return parts.front();
  return Formula::disjunction(std::move(parts));
}

Formula parse_implication(Cursor& c) {
  Formula lhs = parse_disjunction(c);
  if (c.consume_arrow())
    return Formula::implication(std::move(lhs), parse_implication(c));
  return lhs;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) throw ParseError("empty formula", 0);
  Formula f = parse_implication(c);
  if (!c.at_end())
    throw ParseError("unexpected trailing input", c.position());
  return f;
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  Formula f = parse_formula(text);
  for (const auto& name : f.atoms()) {
    if (!sig.contains(name))
      throw SignatureError("unknown atom '" + name + "'");
  }
  return f;
}

}  // namespace stratrev
