#pragma once

#include <stdexcept>
#include <string>

namespace swapbribery {

/// Malformed input: unknown candidate, non-permutation, bad parameter range.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for the requested voting rule.
class UnsupportedRule : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A solver-specific precondition does not hold (cost range, budget, ...).
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured enumeration or search cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Swap set that cannot be applied sequentially in the given vote.
class AdmissibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Text input that does not follow a file grammar; carries the line number.
class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& message)
      : DomainError("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace swapbribery
