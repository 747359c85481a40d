#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmbench {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word contains a symbol outside the machine's input alphabet.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (x <= 0, unknown
// state, bad measure parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation precondition (fuel == 0, invalid machine).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised instead of silently truncating an exponential enumeration.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based; 0 when the defect is not tied to a single line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tmbench
