#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tracerec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different alphabets.
class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

/// A position or interval lies outside the sequence it refers to.
class OutOfRange : public Error {
public:
  using Error::Error;
};

/// A precondition on parameters (probabilities, lengths, plan geometry) failed.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A dynamic program would exceed its configured cell budget.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::size_t required, std::size_t limit)
      : Error("dynamic program needs " + std::to_string(required) +
              " cells but the budget is " + std::to_string(limit) +
              " (raise the cell limit or shorten the inputs)"),
        required_(required), limit_(limit) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t required_;
  std::size_t limit_;
};

}  // namespace tracerec
