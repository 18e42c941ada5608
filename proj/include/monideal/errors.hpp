#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monideal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different rings, or a value is malformed.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// A mathematical precondition does not hold (zero ideal, prime not associated, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A search was cancelled because the active deadline passed.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A command, suite name or option value is not recognized.
class UsageError : public Error {
public:
  using Error::Error;
};

/// Input text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace monideal
