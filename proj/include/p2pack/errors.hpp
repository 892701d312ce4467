#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p2pack {

/// Caller supplied something outside an operation's contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed DIMACS text. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on an intermediate value did not hold (e.g. a packing
/// handed to classify_leftover was not maximal).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Something the algorithms guarantee did not happen. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exact oracle declined an input above its size cap.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace p2pack
