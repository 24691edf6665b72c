#pragma once

#include <stdexcept>
#include <string>

namespace cubedet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Wrong dimensions: non-cubic input, order outside {1,2,3}, mismatched orders.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A 1-based index or layer number outside the valid range.
class IndexError : public Error {
public:
  using Error::Error;
};

/// A 64-bit numerator or denominator left its representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Division by zero and similar undefined scalar operations.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed text or JSON input. `location()` is always 1-based.
class ParseError : public Error {
public:
  ParseError(std::string location, const std::string& what)
      : Error(location + ": " + what), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

private:
  std::string location_;
};

// Messages used when rejecting inputs the determinant is not defined for.
inline constexpr const char* kNotCubicMessage =
    "A is not square, cannot calculate the determinant";
inline constexpr const char* kOrderTooHighMessage =
    "A is higher than the third order, hence can not be calculated.";

}  // namespace cubedet
