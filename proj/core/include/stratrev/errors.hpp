#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stratrev {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or knowledge-base text. Carries the byte offset at
/// which parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An atom is missing from a signature, or two signatures disagree where
/// they are required to be identical.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// A semantic precondition was violated: unsatisfiable sure formula,
/// inconsistent stratum, operator contract breach, and the like.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Model enumeration or oracle search would exceed a configured resource
/// limit. Never silently truncated.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace stratrev
