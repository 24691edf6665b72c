#include "cubedet/cubic_matrix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cubedet/error.hpp"
#include "fixtures.hpp"

namespace cubedet {
namespace {

using testing::example1;
using testing::example2;

TEST(CubicMatrix, FromLayersMapsBlockRowColumnToIJK) {
  const CubicMatrix a = example2();
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ(a(1, 1, 1), Scalar(3));
  EXPECT_EQ(a(1, 3, 1), Scalar(-4));
  EXPECT_EQ(a(3, 2, 2), Scalar(2));
  EXPECT_EQ(a(2, 1, 3), Scalar(3));
  EXPECT_EQ(a(1, 2, 3), Scalar(1));
  EXPECT_EQ(example1()(2, 1, 2), Scalar(-7));
}

TEST(CubicMatrix, OrderOne) {
  const auto a = CubicMatrix::from_layers(1, {{{7}}});
  EXPECT_EQ(a.get({1, 1, 1}), Scalar(7));
}

TEST(CubicMatrix, ShapeErrorsNameTheBlock) {
  try {
    CubicMatrix::from_layers(2, {{{1, 2}, {3, 4}}, {{1, 2}, {3}}});
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("block 2 row 2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("not square"), std::string::npos);
  }
  EXPECT_THROW(CubicMatrix::from_layers(2, {{{1, 2}, {3, 4}}}), ShapeError);
  EXPECT_THROW(CubicMatrix::from_layers(2, {{{1, 2}, {3, 4}}, {{1, 2}}}), ShapeError);
}

TEST(CubicMatrix, RejectsNonCubicBeforeOrderBound) {
  // 2 x 2 x 3
  std::vector<Block> blocks(3, Block{{1, 2}, {3, 4}});
  try {
    CubicMatrix::from_layers(blocks);
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("not square"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("2x2x3"), std::string::npos);
  }
  std::vector<Block> four(4, Block(4, std::vector<Scalar>(4, Scalar(1))));
  try {
    CubicMatrix::from_layers(four);
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("higher than the third order"), std::string::npos);
  }
  EXPECT_THROW(CubicMatrix(0), ShapeError);
  EXPECT_THROW(CubicMatrix(4), ShapeError);
}

TEST(CubicMatrix, GetOutOfRangeReportsOneBasedTriple) {
  try {
    example1().get({1, 3, 1});
    FAIL();
  } catch (const IndexError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,3,1)"), std::string::npos);
  }
  EXPECT_THROW(example1().get({0, 1, 1}), IndexError);
}

TEST(CubicMatrix, Add) {
  const CubicMatrix a = example1();
  EXPECT_EQ(a + CubicMatrix(2), a);
  EXPECT_EQ(a + scale(a, Scalar(-1)), CubicMatrix(2));
  EXPECT_EQ(a + -a, CubicMatrix(2));
  const CubicMatrix doubled = a + a;
  EXPECT_EQ(doubled(1, 1, 1), Scalar(8));
  for (const Index3& at : all_positions(2)) {
    EXPECT_EQ(doubled.get(at), a.get(at) * Scalar(2));
  }
  EXPECT_THROW(a + example2(), ShapeError);
}

TEST(CubicMatrix, DeleteSub) {
  const CubicMatrix a = example2();
  EXPECT_EQ(delete_sub(a, {1, 1, 1}),
            CubicMatrix::from_layers(2, {{{0, 3}, {2, 5}}, {{1, 2}, {4, 3}}}));
  EXPECT_EQ(delete_sub(a, {1, 2, 3}),
            CubicMatrix::from_layers(2, {{{2, -1}, {0, -2}}, {{-3, 3}, {-3, 5}}}));
  EXPECT_EQ(delete_sub(example1(), {1, 1, 1}), CubicMatrix::from_layers(1, {{{3}}}));
  EXPECT_THROW(delete_sub(CubicMatrix(1), {1, 1, 1}), ShapeError);
  EXPECT_THROW(delete_sub(a, {4, 1, 1}), IndexError);
}

TEST(CubicMatrix, ScaleLayer) {
  const CubicMatrix a = example1();
  for (Axis axis : kAllAxes) {
    EXPECT_EQ(scale_layer(a, axis, 2, Scalar(1)), a);
  }
  const CubicMatrix zeroed = scale_layer(a, Axis::HorizontalLayer, 1, Scalar(0));
  for (int j = 1; j <= 2; ++j) {
    for (int k = 1; k <= 2; ++k) {
      EXPECT_TRUE(zeroed(1, j, k).is_zero());
      EXPECT_EQ(zeroed(2, j, k), a(2, j, k));
    }
  }
  EXPECT_EQ(scale_layer(a, Axis::VerticalPage, 2, Scalar(2))(1, 2, 1), Scalar(-6));
  EXPECT_THROW(scale_layer(a, Axis::VerticalLayer, 3, Scalar(2)), IndexError);
}

TEST(CubicMatrix, SwapLayers) {
  const CubicMatrix a = example1();
  EXPECT_EQ(swap_layers(a, Axis::VerticalPage, 2, 2), a);
  EXPECT_EQ(swap_layers(a, Axis::HorizontalLayer, 1, 2)(1, 1, 1), Scalar(-1));
  EXPECT_EQ(swap_layers(a, Axis::VerticalLayer, 1, 2)(1, 1, 1), Scalar(-2));
  EXPECT_EQ(swap_layers(a, Axis::VerticalPage, 1, 2)(1, 1, 1), Scalar(-3));
  EXPECT_THROW(swap_layers(a, Axis::VerticalPage, 0, 1), IndexError);
}

TEST(CubicMatrix, LayerPositionsOrder) {
  const std::vector<Index3> h = layer_positions(2, Axis::HorizontalLayer, 1);
  const std::vector<Index3> expected{{1, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 2, 2}};
  EXPECT_EQ(h, expected);
  const std::vector<Index3> p = layer_positions(2, Axis::VerticalPage, 2);
  const std::vector<Index3> expected_p{{1, 2, 1}, {2, 2, 1}, {1, 2, 2}, {2, 2, 2}};
  EXPECT_EQ(p, expected_p);
  const std::vector<Index3> l = layer_positions(2, Axis::VerticalLayer, 1);
  const std::vector<Index3> expected_l{{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}};
  EXPECT_EQ(l, expected_l);
}

class CubicMatrixProperty : public ::testing::TestWithParam<int> {};

TEST_P(CubicMatrixProperty, AdditionIsAnAbelianGroup) {
  const int order = GetParam();
  std::mt19937_64 rng(99 + order);
  const CubicMatrix zero(order);
  for (int n = 0; n < 1000; ++n) {
    const CubicMatrix a = testing::random_matrix(rng, order);
    const CubicMatrix b = testing::random_matrix(rng, order);
    const CubicMatrix c = testing::random_matrix(rng, order);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + zero, a);
    ASSERT_EQ(a + -a, zero);
  }
}

TEST_P(CubicMatrixProperty, DeleteSubKeepsEntriesOffTheDeletedLayers) {
  const int order = GetParam();
  if (order < 2) {
    EXPECT_THROW(delete_sub(CubicMatrix(order), {1, 1, 1}), ShapeError);
    return;
  }
  std::mt19937_64 rng(7 + order);
  for (int n = 0; n < 200; ++n) {
    // Distinct entries so the multiset comparison is meaningful.
    std::vector<Scalar> entries;
    for (int e = 0; e < order * order * order; ++e) {
      entries.emplace_back(e + 1);
    }
    std::shuffle(entries.begin(), entries.end(), rng);
    const auto a = CubicMatrix::from_entries(order, entries);
    std::uniform_int_distribution<int> pick(1, order);
    const Index3 at{pick(rng), pick(rng), pick(rng)};
    const CubicMatrix sub = delete_sub(a, at);
    ASSERT_EQ(sub.order(), order - 1);
    std::vector<std::int64_t> expected;
    for (const Index3& pos : all_positions(order)) {
      if (pos.i != at.i && pos.j != at.j && pos.k != at.k) {
        expected.push_back(a.get(pos).num());
      }
    }
    std::vector<std::int64_t> got;
    for (const Scalar& s : sub.entries()) {
      got.push_back(s.num());
    }
    // Relative order is preserved, so even the sequence matches.
    ASSERT_EQ(got, expected);
  }
}

TEST_P(CubicMatrixProperty, SwapIsAnInvolutionAndScaleInverts) {
  const int order = GetParam();
  std::mt19937_64 rng(31 + order);
  std::uniform_int_distribution<int> pick(1, order);
  for (int n = 0; n < 500; ++n) {
    const CubicMatrix a = testing::random_matrix(rng, order);
    for (Axis axis : kAllAxes) {
      const int x = pick(rng), y = pick(rng);
      ASSERT_EQ(swap_layers(swap_layers(a, axis, x, y), axis, x, y), a);
      const Scalar c = testing::random_nonzero_rational(rng);
      const CubicMatrix scaled = scale_layer(a, axis, x, c);
      for (const Scalar& s : scaled.entries()) {
        ASSERT_GE(s.den(), 1);
        ASSERT_EQ(std::gcd(s.num() < 0 ? -s.num() : s.num(), s.den()), 1);
      }
      ASSERT_EQ(scale_layer(scaled, axis, x, c.reciprocal()), a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, CubicMatrixProperty, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace cubedet
