#include "cubedet/scalar.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cubedet/error.hpp"

namespace cubedet {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
  EXPECT_EQ(Scalar(3, -6).num(), -1);
  EXPECT_EQ(Scalar(3, -6).den(), 2);
  EXPECT_EQ(Scalar(0, -7).den(), 1);
  EXPECT_TRUE(Scalar(10, 5).is_integer());
}

TEST(Scalar, ZeroDenominatorRejected) { EXPECT_THROW(Scalar(1, 0), DomainError); }

TEST(Scalar, Arithmetic) {
  EXPECT_EQ(Scalar(1, 2) + Scalar(1, 3), Scalar(5, 6));
  EXPECT_EQ(Scalar(1, 2) - Scalar(1, 2), Scalar(0));
  EXPECT_EQ(Scalar(2, 3) * Scalar(9, 4), Scalar(3, 2));
  EXPECT_EQ(Scalar(2, 3) / Scalar(4, 9), Scalar(3, 2));
  EXPECT_EQ(-Scalar(5, 7), Scalar(-5, 7));
  EXPECT_EQ(Scalar(-3, 2).reciprocal(), Scalar(-2, 3));
  EXPECT_THROW(Scalar(0).reciprocal(), DomainError);
}

TEST(Scalar, OverflowIsReportedNotWrapped) {
  EXPECT_THROW(Scalar(kMax) + Scalar(1), OverflowError);
  EXPECT_THROW(Scalar(kMin) - Scalar(1), OverflowError);
  EXPECT_THROW(Scalar(kMax / 2 + 1) * Scalar(2), OverflowError);
  EXPECT_THROW(-Scalar(kMin), OverflowError);
  EXPECT_THROW(Scalar(1, kMax) + Scalar(1, kMax - 1), OverflowError);
  EXPECT_THROW(Scalar(1, kMin), OverflowError);
  // Cross-reduction keeps this representable.
  EXPECT_EQ(Scalar(kMax, 3) * Scalar(3, kMax), Scalar(1));
}

TEST(Scalar, ParseLiterals) {
  EXPECT_EQ(Scalar::parse("7"), Scalar(7));
  EXPECT_EQ(Scalar::parse("-3"), Scalar(-3));
  EXPECT_EQ(Scalar::parse("+3"), Scalar(3));
  EXPECT_EQ(Scalar::parse("2/4"), Scalar(1, 2));
  EXPECT_EQ(Scalar::parse("-6/4"), Scalar(-3, 2));
  EXPECT_THROW(Scalar::parse("1/0"), DomainError);
  EXPECT_THROW(Scalar::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("-"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1e3"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("99999999999999999999"), OverflowError);
}

TEST(Scalar, ToString) {
  EXPECT_EQ(Scalar(-3).to_string(), "-3");
  EXPECT_EQ(Scalar(2, 4).to_string(), "1/2");
  EXPECT_EQ(Scalar(3, -9).to_string(), "-1/3");
}

TEST(ScalarProperty, FieldLawsAndCanonicalForm) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 60);
  auto draw = [&] { return Scalar(num(rng), den(rng)); };
  auto canonical = [](const Scalar& s) {
    return s.den() >= 1 && std::gcd(s.num() < 0 ? -s.num() : s.num(), s.den()) == 1;
  };
  for (int n = 0; n < 2000; ++n) {
    const Scalar a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Scalar(0));
    EXPECT_EQ(Scalar::parse(a.to_string()), a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.reciprocal(), Scalar(1));
    }
    EXPECT_TRUE(canonical(a * b)) << a << " * " << b;
    EXPECT_TRUE(canonical(a + b)) << a << " + " << b;
  }
}

}  // namespace
}  // namespace cubedet
