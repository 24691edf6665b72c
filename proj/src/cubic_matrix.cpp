#include "cubedet/cubic_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "cubedet/error.hpp"

namespace cubedet {

const char* axis_code(Axis axis) noexcept {
  switch (axis) {
    case Axis::HorizontalLayer:
      return "h";
    case Axis::VerticalPage:
      return "p";
    case Axis::VerticalLayer:
      return "l";
  }
  return "?";
}

const char* axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::HorizontalLayer:
      return "horizontal layer";
    case Axis::VerticalPage:
      return "vertical page";
    case Axis::VerticalLayer:
      return "vertical layer";
  }
  return "?";
}

Axis parse_axis(const std::string& code) {
  if (code == "h") return Axis::HorizontalLayer;
  if (code == "p") return Axis::VerticalPage;
  if (code == "l") return Axis::VerticalLayer;
  throw std::invalid_argument("unknown axis '" + code + "' (expected h, p or l)");
}

int Index3::along(Axis axis) const noexcept {
  switch (axis) {
    case Axis::HorizontalLayer:
      return i;
    case Axis::VerticalPage:
      return j;
    case Axis::VerticalLayer:
      return k;
  }
  return 0;
}

std::string Index3::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::ostream& operator<<(std::ostream& os, const Index3& at) { return os << at.to_string(); }

std::string Dim3::to_string() const {
  return std::to_string(m) + "x" + std::to_string(n) + "x" + std::to_string(p);
}

void check_order(int order) {
  if (order > CubicMatrix::kMaxOrder) {
    throw ShapeError(kOrderTooHighMessage);
  }
  if (order < 1) {
    throw ShapeError("order must be 1, 2 or 3, got " + std::to_string(order));
  }
}

void check_layer_index(int order, int index, const char* what) {
  if (index < 1 || index > order) {
    throw IndexError(std::string(what) + " " + std::to_string(index) + " out of range 1.." +
                     std::to_string(order));
  }
}

CubicMatrix::CubicMatrix(int order) : order_(order) {
  check_order(order);
  entries_.assign(static_cast<std::size_t>(order * order * order), Scalar{});
}

CubicMatrix::CubicMatrix(int order, std::vector<Scalar> entries)
    : order_(order), entries_(std::move(entries)) {}

CubicMatrix CubicMatrix::from_entries(int order, std::vector<Scalar> entries) {
  check_order(order);
  if (entries.size() != static_cast<std::size_t>(order * order * order)) {
    throw ShapeError(std::string(kNotCubicMessage) + ": expected " +
                     std::to_string(order * order * order) + " entries, got " +
                     std::to_string(entries.size()));
  }
  return CubicMatrix(order, std::move(entries));
}

CubicMatrix CubicMatrix::from_layers(int order, const std::vector<Block>& layers) {
  const auto fail = [](const std::string& detail) {
    throw ShapeError(std::string(kNotCubicMessage) + ": " + detail);
  };
  if (order < 1) {
    check_order(order);
  }
  if (static_cast<int>(layers.size()) != order) {
    fail("expected " + std::to_string(order) + " vertical layers, got " +
         std::to_string(layers.size()));
  }
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const Block& block = layers[k];
    const std::string name = "block " + std::to_string(k + 1);
    if (static_cast<int>(block.size()) != order) {
      fail(name + " has " + std::to_string(block.size()) + " rows, expected " +
           std::to_string(order));
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (static_cast<int>(block[i].size()) != order) {
        fail(name + " row " + std::to_string(i + 1) + " has " +
             std::to_string(block[i].size()) + " entries, expected " + std::to_string(order));
      }
    }
  }
  check_order(order);

  std::vector<Scalar> entries;
  entries.reserve(static_cast<std::size_t>(order * order * order));
  for (const Block& block : layers) {
    for (const auto& row : block) {
      entries.insert(entries.end(), row.begin(), row.end());
    }
  }
  return CubicMatrix(order, std::move(entries));
}

CubicMatrix CubicMatrix::from_layers(const std::vector<Block>& layers) {
  if (layers.empty() || layers.front().empty()) {
    throw ShapeError("empty matrix");
  }
  const Dim3 dims{static_cast<int>(layers.front().size()),
                  static_cast<int>(layers.front().front().size()),
                  static_cast<int>(layers.size())};
  if (!dims.is_cubic()) {
    throw ShapeError(std::string(kNotCubicMessage) + ": shape is " + dims.to_string());
  }
  return from_layers(dims.p, layers);
}

std::size_t CubicMatrix::offset(const Index3& at) const noexcept {
  const auto n = static_cast<std::size_t>(order_);
  return (static_cast<std::size_t>(at.k - 1) * n + static_cast<std::size_t>(at.i - 1)) * n +
         static_cast<std::size_t>(at.j - 1);
}

const Scalar& CubicMatrix::get(const Index3& at) const {
  if (at.i < 1 || at.i > order_ || at.j < 1 || at.j > order_ || at.k < 1 || at.k > order_) {
    throw IndexError("index " + at.to_string() + " out of range for order " +
                     std::to_string(order_));
  }
  return entries_[offset(at)];
}

Block CubicMatrix::layer_block(int k) const {
  check_layer_index(order_, k, "vertical layer");
  Block block(static_cast<std::size_t>(order_));
  for (int i = 1; i <= order_; ++i) {
    auto& row = block[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= order_; ++j) {
      row.push_back(entries_[offset({i, j, k})]);
    }
  }
  return block;
}

CubicMatrix add(const CubicMatrix& a, const CubicMatrix& b) {
  if (a.order() != b.order()) {
    throw ShapeError("cannot add matrices of order " + std::to_string(a.order()) + " and " +
                     std::to_string(b.order()));
  }
  std::vector<Scalar> out(a.entries().size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = a.entries()[n] + b.entries()[n];
  }
  return CubicMatrix::from_entries(a.order(), std::move(out));
}

CubicMatrix operator+(const CubicMatrix& a, const CubicMatrix& b) { return add(a, b); }

CubicMatrix scale(const CubicMatrix& a, const Scalar& c) {
  std::vector<Scalar> out = a.entries();
  for (auto& x : out) {
    x *= c;
  }
  return CubicMatrix::from_entries(a.order(), std::move(out));
}

CubicMatrix operator-(const CubicMatrix& a) {
  std::vector<Scalar> out = a.entries();
  for (auto& x : out) {
    x = -x;
  }
  return CubicMatrix::from_entries(a.order(), std::move(out));
}

std::vector<Index3> all_positions(int order) {
  std::vector<Index3> out;
  out.reserve(static_cast<std::size_t>(order * order * order));
  for (int k = 1; k <= order; ++k) {
    for (int i = 1; i <= order; ++i) {
      for (int j = 1; j <= order; ++j) {
        out.push_back({i, j, k});
      }
    }
  }
  return out;
}

CubicMatrix delete_sub(const CubicMatrix& a, const Index3& at) {
  if (a.order() < 2) {
    throw ShapeError("cannot delete a layer triple from an order-1 matrix");
  }
  a.get(at);  // range check
  std::vector<Scalar> out;
  for (const Index3& pos : all_positions(a.order())) {
    if (pos.i != at.i && pos.j != at.j && pos.k != at.k) {
      out.push_back(a.get(pos));
    }
  }
  return CubicMatrix::from_entries(a.order() - 1, std::move(out));
}

CubicMatrix scale_layer(const CubicMatrix& a, Axis axis, int index, const Scalar& c) {
  check_layer_index(a.order(), index, axis_name(axis));
  std::vector<Scalar> out;
  out.reserve(a.entries().size());
  for (const Index3& pos : all_positions(a.order())) {
    const Scalar& x = a.get(pos);
    out.push_back(pos.along(axis) == index ? x * c : x);
  }
  return CubicMatrix::from_entries(a.order(), std::move(out));
}

CubicMatrix swap_layers(const CubicMatrix& a, Axis axis, int first, int second) {
  check_layer_index(a.order(), first, axis_name(axis));
  check_layer_index(a.order(), second, axis_name(axis));
  std::vector<Scalar> out;
  out.reserve(a.entries().size());
  for (Index3 pos : all_positions(a.order())) {
    int* coord = axis == Axis::HorizontalLayer ? &pos.i
                 : axis == Axis::VerticalPage  ? &pos.j
                                               : &pos.k;
    if (*coord == first) {
      *coord = second;
    } else if (*coord == second) {
      *coord = first;
    }
    out.push_back(a.get(pos));
  }
  return CubicMatrix::from_entries(a.order(), std::move(out));
}

std::vector<Index3> layer_positions(int order, Axis axis, int index) {
  check_layer_index(order, index, axis_name(axis));
  std::vector<Index3> out;
  out.reserve(static_cast<std::size_t>(order * order));
  for (int outer = 1; outer <= order; ++outer) {
    for (int inner = 1; inner <= order; ++inner) {
      switch (axis) {
        case Axis::HorizontalLayer:
          out.push_back({index, inner, outer});
          break;
        case Axis::VerticalPage:
          out.push_back({inner, index, outer});
          break;
        case Axis::VerticalLayer:
          out.push_back({outer, inner, index});
          break;
      }
    }
  }
  return out;
}

}  // namespace cubedet
