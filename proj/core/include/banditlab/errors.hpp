#pragma once

#include <stdexcept>
#include <string>

namespace banditlab {

// Argument outside its mathematical domain (non-finite input, wrong sign,
// mismatched dimensions).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested moment does not exist, e.g. E[1/X] of a Gamma with shape <= 1.
class UndefinedMomentError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A proper prior is required but a degenerate (improper) one was supplied.
class DegeneratePriorError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Empirical moments are degenerate (zero variance) where the fit needs
// positive spread.
class DegenerateMomentsError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed, insufficient, or non-finite input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arm or element index out of range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A matrix that must be positive definite failed its factorization.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration text rejected; positions are 1-based.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace banditlab
