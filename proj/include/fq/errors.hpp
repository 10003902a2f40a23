#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x outside
/// [0, 1], non-finite voltage, empty sweep range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A scale or configuration violates its contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parameter rejected at construction (a <= 0, T < 1, v_ref <= 0).
class InvalidParameter : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed text input (JSON, .scl, WAV, CSV).
class ParseError : public Error {
 public:
  using Error::Error;
};

class NonFiniteSample : public DomainError {
 public:
  explicit NonFiniteSample(std::size_t index)
      : DomainError("non-finite sample at index " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace fq
