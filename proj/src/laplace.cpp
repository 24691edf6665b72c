#include "cubedet/laplace.hpp"

#include "cubedet/error.hpp"

namespace cubedet {
namespace {

void require_expandable(const CubicMatrix& a) {
  if (a.order() < 2) {
    throw ShapeError("expansion needs order 2 or 3, got order 1");
  }
}

}  // namespace

const char* convention_name(SignConvention convention) noexcept {
  return convention == SignConvention::Expansion ? "expansion" : "paper-def";
}

SignRule sign_rule(SignConvention convention) noexcept {
  return convention == SignConvention::Expansion ? &sign_expansion : &sign_paper_def;
}

MinorValue minor(const CubicMatrix& a, const Index3& at) {
  return {det_closed(delete_sub(a, at)).value};
}

CofactorValue cofactor(const CubicMatrix& a, const Index3& at, SignConvention convention) {
  const MinorValue m = minor(a, at);
  return {Scalar{sign_rule(convention)(at)} * m.value, convention};
}

ExpansionTrace expand(const CubicMatrix& a, Axis axis, int index, SignRule sign) {
  require_expandable(a);
  ExpansionTrace trace;
  trace.axis = axis;
  trace.index = index;
  for (const Index3& at : layer_positions(a.order(), axis, index)) {
    TraceTerm t;
    t.at = at;
    t.entry = a.get(at);
    t.sign = sign(at);
    t.minor_value = det_laplace(delete_sub(a, at), axis, 1).value;
    t.contribution = Scalar{t.sign} * t.entry * t.minor_value;
    trace.total += t.contribution;
    trace.terms.push_back(std::move(t));
  }
  return trace;
}

ExpansionTrace expand(const CubicMatrix& a, Axis axis, int index, SignConvention convention) {
  return expand(a, axis, index, sign_rule(convention));
}

DetValue det_laplace(const CubicMatrix& a, Axis axis, int index) {
  check_layer_index(a.order(), index, axis_name(axis));
  if (a.order() == 1) {
    return {a.get({1, 1, 1})};
  }
  Scalar sum;
  for (const Index3& at : layer_positions(a.order(), axis, index)) {
    const Scalar& entry = a.get(at);
    if (entry.is_zero()) {
      continue;
    }
    sum += Scalar{sign_expansion(at)} * entry * det_laplace(delete_sub(a, at), axis, 1).value;
  }
  return {sum};
}

std::vector<ExpansionTrace> expand_all(const CubicMatrix& a) {
  require_expandable(a);
  std::vector<ExpansionTrace> out;
  for (Axis axis : kAllAxes) {
    for (int index = 1; index <= a.order(); ++index) {
      out.push_back(expand(a, axis, index));
    }
  }
  return out;
}

}  // namespace cubedet
