#include "cubedet/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cubedet/error.hpp"

namespace cubedet {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("scalar overflow in multiplication");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("scalar overflow in addition");
  }
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("scalar overflow in negation");
  }
  return -a;
}

// gcd on magnitudes; safe for INT64_MIN.
std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  // Result fits: den is never INT64_MIN after normalization, so g <= INT64_MAX.
  return static_cast<std::int64_t>(std::gcd(ua, ub));
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw DomainError("zero denominator");
  }
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const std::int64_t g = gcd_abs(num, den);
  num_ = num / g;
  den_ = den / g;
}

Scalar Scalar::reciprocal() const {
  if (num_ == 0) {
    throw DomainError("reciprocal of zero");
  }
  return Scalar(den_, num_);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    return Scalar(checked_add(a.num_, b.num_));
  }
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t num =
      checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
  return Scalar(num, checked_mul(a.den_, b.den_ / g));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    return Scalar(checked_mul(a.num_, b.num_));
  }
  // Cross-reduce first so intermediate products stay as small as possible.
  const std::int64_t g1 = gcd_abs(a.num_, b.den_);
  const std::int64_t g2 = gcd_abs(b.num_, a.den_);
  const std::int64_t n1 = g1 == 0 ? 0 : a.num_ / g1;
  const std::int64_t d2 = g1 == 0 ? b.den_ : b.den_ / g1;
  const std::int64_t n2 = g2 == 0 ? 0 : b.num_ / g2;
  const std::int64_t d1 = g2 == 0 ? a.den_ : a.den_ / g2;
  return Scalar(checked_mul(n1, n2), checked_mul(d1, d2));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.reciprocal(); }

std::string Scalar::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::parse(std::string_view text) {
  auto parse_int = [](std::string_view part, bool allow_sign) -> std::int64_t {
    if (part.empty()) {
      throw std::invalid_argument("empty number");
    }
    std::size_t start = 0;
    if (allow_sign && (part[0] == '+' || part[0] == '-')) {
      start = 1;
    }
    if (start == part.size()) {
      throw std::invalid_argument("sign without digits");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("unexpected character '" + std::string(1, part[i]) + "'");
      }
    }
    // from_chars rejects a leading '+'.
    std::string_view digits = part[0] == '+' ? part.substr(1) : part;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw OverflowError("literal '" + std::string(part) + "' does not fit in 64 bits");
    }
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("malformed number");
    }
    return value;
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Scalar(parse_int(text, true));
  }
  const std::int64_t num = parse_int(text.substr(0, slash), true);
  const std::int64_t den = parse_int(text.substr(slash + 1), false);
  if (den == 0) {
    throw DomainError("zero denominator");
  }
  return Scalar(num, den);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cubedet
