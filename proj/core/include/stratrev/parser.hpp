#pragma once

#include <string_view>

#include "stratrev/formula.hpp"

namespace stratrev {

/// Parses a formula in the ASCII grammar:
///
///   atoms       [a-zA-Z_][a-zA-Z0-9_]*   ('true'/'false' are constants)
///   negation    !f
///   conjunction f & g
///   disjunction f | g
///   implication f -> g        (right associative)
///
/// Precedence ! > & > | > ->; parentheses allowed; whitespace ignored.
/// Throws ParseError on malformed input.
Formula parse_formula(std::string_view text);

/// Same, but every atom must already belong to `sig`; throws SignatureError
/// otherwise.
Formula parse_formula(std::string_view text, const Signature& sig);

}  // namespace stratrev
