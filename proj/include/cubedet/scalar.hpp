#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cubedet {

/// Exact rational number with checked 64-bit components.
///
/// Always stored in canonical form: gcd(|num|, den) == 1 and den >= 1.
/// Every arithmetic operation either returns an exact result or throws
/// OverflowError; nothing wraps.
class Scalar {
public:
  constexpr Scalar() noexcept = default;
  Scalar(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by intent
  Scalar(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Throws DomainError for zero.
  Scalar reciprocal() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// Accepts an optional sign, digits, and an optional "/" with a positive
  /// integer denominator. Throws std::invalid_argument on malformed text,
  /// DomainError on a zero denominator, OverflowError when a component does
  /// not fit in 64 bits.
  static Scalar parse(std::string_view text);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cubedet
