#pragma once

#include <vector>

#include "cubedet/cubic_matrix.hpp"
#include "cubedet/determinant.hpp"
#include "cubedet/scalar.hpp"

namespace cubedet {

/// Which sign a cofactor carries.
enum class SignConvention {
  Expansion,  // (-1)^(j+k): the sign under which every Laplace expansion holds
  PaperDef,   // (-1)^(i+j+k): the definitional cofactor sign
};

const char* convention_name(SignConvention convention) noexcept;

/// Sign rule applied to the top-level terms of an expansion.
using SignRule = int (*)(const Index3&);

SignRule sign_rule(SignConvention convention) noexcept;

struct MinorValue {
  Scalar value;
  friend bool operator==(const MinorValue&, const MinorValue&) = default;
};

struct CofactorValue {
  Scalar value;
  SignConvention convention = SignConvention::Expansion;
  friend bool operator==(const CofactorValue&, const CofactorValue&) = default;
};

/// One entry of a Laplace expansion.
struct TraceTerm {
  Index3 at;
  Scalar entry;
  int sign = 1;
  Scalar minor_value;
  Scalar contribution;  // sign * entry * minor_value
};

/// Full record of expanding along one layer: order^2 terms and their sum.
struct ExpansionTrace {
  Axis axis = Axis::HorizontalLayer;
  int index = 1;
  std::vector<TraceTerm> terms;
  Scalar total;
};

/// Determinant of the order-(n-1) matrix left after deleting the layers
/// through `at`. Throws ShapeError for order 1.
MinorValue minor(const CubicMatrix& a, const Index3& at);

/// Minor with the sign of the chosen convention.
CofactorValue cofactor(const CubicMatrix& a, const Index3& at,
                       SignConvention convention = SignConvention::Expansion);

/// Expands along layer `index` of `axis`. Terms follow layer_positions();
/// minors are evaluated recursively with det_laplace. With the default sign
/// the total is the determinant for every axis and index.
///
/// The recursive pseudo-code form with sign (-1)^(1 + fixed + free1 + free2)
/// is not used: for an even fixed horizontal index it negates the result.
ExpansionTrace expand(const CubicMatrix& a, Axis axis, int index,
                      SignRule sign = sign_expansion);
ExpansionTrace expand(const CubicMatrix& a, Axis axis, int index, SignConvention convention);

/// Recursive Laplace determinant. Order 1 returns the entry; otherwise
/// expands along (axis, index) and evaluates each minor by expanding along
/// the same axis at index 1.
DetValue det_laplace(const CubicMatrix& a, Axis axis, int index);

/// One trace per (axis, index) pair: axes in h, p, l order, indices ascending.
std::vector<ExpansionTrace> expand_all(const CubicMatrix& a);

}  // namespace cubedet
