#pragma once

#include <stdexcept>
#include <string>

namespace gradedring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different grading groups, base rings or graded rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An ordering was requested on a grading group that admits none.
class UnorderedGradingError : public Error {
 public:
  UnorderedGradingError() : Error("unordered grading group") {}
  explicit UnorderedGradingError(const std::string& what) : Error(what) {}
};

/// Preconditions of an operation are violated (bad presentation, wrong family, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested decision lies outside the supported ring families.
class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget. Never converted into a boolean answer.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A proved statement failed on a concrete instance; always a bug somewhere.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Ring-file syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace gradedring
