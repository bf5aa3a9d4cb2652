#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splinedim {

class SplineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the polynomial parser. `position` is a 0-based character offset.
class ParseError : public SplineError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : SplineError(message + " at column " + std::to_string(position + 1)),
        position_(position),
        detail_(message) {}

  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

class VariableMismatch : public SplineError {
 public:
  using SplineError::SplineError;
};

/// An operation that needs a degree or a leading term received the zero polynomial.
class ZeroPolynomialError : public SplineError {
 public:
  using SplineError::SplineError;
};

class InvalidArgument : public SplineError {
 public:
  using SplineError::SplineError;
};

}  // namespace splinedim
