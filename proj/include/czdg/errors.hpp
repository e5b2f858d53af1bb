#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace czdg {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ring-expression syntax or semantic error, with a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct InvalidOrderError : Error { using Error::Error; };
struct InvalidPrimeError : Error { using Error::Error; };
struct SizeLimitError : Error { using Error::Error; };

// Presentation is malformed or fails post-construction verification.
struct InvalidPresentationError : Error { using Error::Error; };

// The truncated relation module does not bound the quotient at this degree.
struct QuotientNotFiniteError : InvalidPresentationError {
  using InvalidPresentationError::InvalidPresentationError;
};

// Subset-search work cap exceeded; carries the largest fully searched size.
struct ResourceLimitError : Error {
  ResourceLimitError(const std::string& msg, int completed)
      : Error(msg), last_completed_size(completed) {}
  int last_completed_size;
};

struct InternalError : Error { using Error::Error; };

}  // namespace czdg
