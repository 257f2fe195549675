#pragma once

#include <stdexcept>
#include <string>

namespace shiftturan {

/// A size exceeds what a fixed-width representation or an exhaustive search supports.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parameters fall outside the hypotheses of a formula or construction.
class RangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation was called with arguments violating its precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind {
  kMalformed,
  kSelfLoop,
  kDuplicateEdge,
  kLabelOutOfRange,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

}  // namespace shiftturan
