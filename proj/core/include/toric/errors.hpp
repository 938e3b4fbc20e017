#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (dimension mismatch, duplicate points, bad syntax).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a byte offset into the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured work budget (S-pairs, precision escalations) was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The input is valid but outside the domain the operation handles
/// (lower-dimensional polytope for a normal fan, non-isolated solutions, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
