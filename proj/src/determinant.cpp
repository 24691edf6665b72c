#include "cubedet/determinant.hpp"

#include <algorithm>
#include <numeric>

#include "cubedet/error.hpp"

namespace cubedet {
namespace {

// Compact encoding of a position: digits i j k, e.g. 123 -> (1,2,3).
constexpr Index3 at(int ijk) noexcept { return {ijk / 100, (ijk / 10) % 10, ijk % 10}; }

TermTemplate term(int sign, std::initializer_list<int> codes) {
  TermTemplate t;
  t.sign = sign;
  for (int c : codes) {
    t.positions.push_back(at(c));
  }
  return t;
}

std::vector<TermTemplate> order1_table() { return {term(+1, {111})}; }

std::vector<TermTemplate> order2_table() {
  return {
      term(+1, {111, 222}),
      term(-1, {112, 221}),
      term(-1, {121, 212}),
      term(+1, {122, 211}),
  };
}

// Transcribed row by row from the order-3 definition, four terms per row.
std::vector<TermTemplate> order3_table() {
  return {
      term(+1, {111, 222, 333}), term(-1, {111, 232, 323}),
      term(-1, {111, 223, 332}), term(+1, {111, 233, 322}),

      term(-1, {112, 221, 333}), term(+1, {112, 223, 331}),
      term(+1, {112, 231, 323}), term(-1, {112, 233, 321}),

      term(+1, {113, 221, 332}), term(-1, {113, 222, 331}),
      term(-1, {113, 231, 322}), term(+1, {113, 232, 321}),

      term(-1, {121, 212, 333}), term(+1, {121, 213, 332}),
      term(+1, {121, 232, 313}), term(-1, {121, 233, 312}),

      term(+1, {122, 211, 333}), term(-1, {122, 213, 331}),
      term(-1, {122, 231, 313}), term(+1, {122, 233, 311}),

      term(-1, {123, 211, 332}), term(+1, {123, 212, 331}),
      term(+1, {123, 231, 312}), term(-1, {123, 232, 311}),

      term(+1, {131, 212, 323}), term(-1, {131, 213, 322}),
      term(-1, {131, 222, 313}), term(+1, {131, 223, 312}),

      term(-1, {132, 211, 323}), term(+1, {132, 213, 321}),
      term(+1, {132, 221, 313}), term(-1, {132, 223, 311}),

      term(+1, {133, 211, 322}), term(-1, {133, 212, 321}),
      term(-1, {133, 221, 312}), term(+1, {133, 222, 311}),
  };
}

Scalar evaluate(const CubicMatrix& a, int sign, const std::vector<Index3>& positions) {
  Scalar product{sign};
  for (const Index3& pos : positions) {
    product *= a.get(pos);
  }
  return product;
}

}  // namespace

const std::vector<TermTemplate>& closed_form_terms(int order) {
  static const std::vector<TermTemplate> t1 = order1_table();
  static const std::vector<TermTemplate> t2 = order2_table();
  static const std::vector<TermTemplate> t3 = order3_table();
  check_order(order);
  switch (order) {
    case 1:
      return t1;
    case 2:
      return t2;
    default:
      return t3;
  }
}

DetValue det_closed(const CubicMatrix& a) {
  Scalar sum;
  for (const TermTemplate& t : closed_form_terms(a.order())) {
    sum += evaluate(a, t.sign, t.positions);
  }
  return {sum};
}

int permutation_parity(const std::vector<int>& perm) noexcept {
  int inversions = 0;
  for (std::size_t x = 0; x < perm.size(); ++x) {
    for (std::size_t y = x + 1; y < perm.size(); ++y) {
      if (perm[x] > perm[y]) {
        ++inversions;
      }
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<TermTemplate> perm_terms(int order) {
  check_order(order);
  std::vector<int> sigma(static_cast<std::size_t>(order));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<TermTemplate> out;
  do {
    std::vector<int> tau(sigma.size());
    std::iota(tau.begin(), tau.end(), 1);
    do {
      TermTemplate t;
      t.sign = permutation_parity(sigma) * permutation_parity(tau);
      for (int i = 1; i <= order; ++i) {
        const auto n = static_cast<std::size_t>(i - 1);
        t.positions.push_back({i, sigma[n], tau[n]});
      }
      out.push_back(std::move(t));
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<SignedTerm> signed_terms(const CubicMatrix& a) {
  std::vector<SignedTerm> out;
  for (TermTemplate& t : perm_terms(a.order())) {
    Scalar value = evaluate(a, t.sign, t.positions);
    out.push_back({t.sign, std::move(t.positions), value});
  }
  return out;
}

DetValue det_permutation(const CubicMatrix& a) {
  Scalar sum;
  for (const TermTemplate& t : perm_terms(a.order())) {
    sum += evaluate(a, t.sign, t.positions);
  }
  return {sum};
}

int sign_expansion(const Index3& at) noexcept { return (at.j + at.k) % 2 == 0 ? 1 : -1; }

int sign_paper_def(const Index3& at) noexcept { return (at.i + at.j + at.k) % 2 == 0 ? 1 : -1; }

}  // namespace cubedet
