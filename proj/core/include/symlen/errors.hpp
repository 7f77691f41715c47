#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symlen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed field descriptor, element, symbol or form text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not follow the trace schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero norm, slot mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for this kind of field.
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A field lacks a declared hypothesis (d, u or I_q^3 = 0), or a computation
/// contradicted one.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace symlen
