#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpo {

// Misuse of an operation: operands that cannot be compared or combined.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public UsageError {
public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : UsageError("dimension mismatch: " + std::to_string(lhs) + " vs " +
                   std::to_string(rhs)),
        lhs_(lhs), rhs_(rhs) {}

  std::size_t lhs() const { return lhs_; }
  std::size_t rhs() const { return rhs_; }

private:
  std::size_t lhs_;
  std::size_t rhs_;
};

class AlphabetMismatch : public UsageError {
public:
  AlphabetMismatch(std::size_t lhs, std::size_t rhs)
      : UsageError("alphabet mismatch: size " + std::to_string(lhs) +
                   " vs size " + std::to_string(rhs)),
        lhs_(lhs), rhs_(rhs) {}

  std::size_t lhs() const { return lhs_; }
  std::size_t rhs() const { return rhs_; }

private:
  std::size_t lhs_;
  std::size_t rhs_;
};

// Text input that does not follow one of the line-oriented formats.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Raised when backward saturation exceeds its configured safety valve.
// Termination is guaranteed in theory, so this indicates a bug or a
// deliberately tiny limit.
class SaturationLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace wpo
