#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "cubedet/scalar.hpp"

namespace cubedet {

/// The three slicing directions of a cubic matrix.
enum class Axis {
  HorizontalLayer,  // fixed i
  VerticalPage,     // fixed j
  VerticalLayer,    // fixed k
};

inline constexpr std::array<Axis, 3> kAllAxes = {Axis::HorizontalLayer, Axis::VerticalPage,
                                                 Axis::VerticalLayer};

/// "h", "p" or "l".
const char* axis_code(Axis axis) noexcept;
/// "horizontal layer", "vertical page" or "vertical layer".
const char* axis_name(Axis axis) noexcept;
/// Inverse of axis_code; throws std::invalid_argument.
Axis parse_axis(const std::string& code);

/// 1-based (i, j, k) position: horizontal layer, vertical page, vertical layer.
struct Index3 {
  int i = 1;
  int j = 1;
  int k = 1;

  int along(Axis axis) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Index3&, const Index3&) = default;
  friend auto operator<=>(const Index3&, const Index3&) = default;
};

std::ostream& operator<<(std::ostream& os, const Index3& at);

/// Extents of a general 3-index array: m horizontal layers, n vertical pages,
/// p vertical layers. Only used to describe (and reject) input shapes.
struct Dim3 {
  int m = 1;
  int n = 1;
  int p = 1;

  bool is_cubic() const noexcept { return m == n && n == p; }
  std::string to_string() const;
};

/// One vertical layer as it is displayed: rows are i, columns are j.
using Block = std::vector<std::vector<Scalar>>;

/// Dense order-n cubic matrix, n in {1, 2, 3}, of exact scalars.
///
/// Entries are stored block by block (vertical layer k), each block row-major
/// over (i, j). All operations return new values.
class CubicMatrix {
public:
  static constexpr int kMaxOrder = 3;

  /// Order-n zero matrix.
  explicit CubicMatrix(int order);

  /// `layers[k-1][i-1][j-1]` becomes entry (i, j, k). Throws ShapeError when
  /// the blocks do not form an order x order x order array or when the
  /// order is outside {1, 2, 3}; the message names the offending block.
  static CubicMatrix from_layers(int order, const std::vector<Block>& layers);

  /// Same, with the order taken from the data. Non-cubic shapes are rejected
  /// before the order bound is checked.
  static CubicMatrix from_layers(const std::vector<Block>& layers);

  /// Entries in canonical layout order (k, then i, then j).
  static CubicMatrix from_entries(int order, std::vector<Scalar> entries);

  int order() const noexcept { return order_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  /// Throws IndexError for positions outside [1, order]^3.
  const Scalar& get(const Index3& at) const;
  const Scalar& operator()(int i, int j, int k) const { return get({i, j, k}); }

  /// Vertical layer k as a displayed block.
  Block layer_block(int k) const;

  friend bool operator==(const CubicMatrix&, const CubicMatrix&) = default;

private:
  CubicMatrix(int order, std::vector<Scalar> entries);
  std::size_t offset(const Index3& at) const noexcept;

  int order_;
  std::vector<Scalar> entries_;
};

/// Throws ShapeError unless order is in {1, 2, 3}.
void check_order(int order);
/// Throws IndexError unless 1 <= index <= order.
void check_layer_index(int order, int index, const char* what = "layer");

/// Entrywise sum; throws ShapeError on order mismatch.
CubicMatrix add(const CubicMatrix& a, const CubicMatrix& b);
CubicMatrix operator+(const CubicMatrix& a, const CubicMatrix& b);
/// Entrywise c * A.
CubicMatrix scale(const CubicMatrix& a, const Scalar& c);
/// Entrywise negation.
CubicMatrix operator-(const CubicMatrix& a);

/// Removes horizontal layer i, vertical page j and vertical layer k. The
/// remaining layers keep their relative order. Throws ShapeError for order 1.
CubicMatrix delete_sub(const CubicMatrix& a, const Index3& at);

/// Multiplies every entry whose `axis` coordinate equals `index` by c.
CubicMatrix scale_layer(const CubicMatrix& a, Axis axis, int index, const Scalar& c);

/// Exchanges layers `first` and `second` along `axis`.
CubicMatrix swap_layers(const CubicMatrix& a, Axis axis, int first, int second);

/// Positions of the order^2 entries in one layer. Order follows the displayed
/// reading of an expansion: the outer index is k for horizontal layers and
/// vertical pages, i for vertical layers; the inner index is the remaining one.
std::vector<Index3> layer_positions(int order, Axis axis, int index);

/// Every position of an order-n matrix in canonical layout order.
std::vector<Index3> all_positions(int order);

}  // namespace cubedet
