#pragma once

#include <vector>

#include "cubedet/cubic_matrix.hpp"
#include "cubedet/scalar.hpp"

namespace cubedet {

/// A determinant value. Kept distinct from a bare Scalar so minors,
/// cofactors and determinants are not mixed up at call sites.
struct DetValue {
  Scalar value;
  friend bool operator==(const DetValue&, const DetValue&) = default;
};

/// A signed monomial shape: sign and one position per horizontal layer,
/// listed with i ascending.
struct TermTemplate {
  int sign = 1;
  std::vector<Index3> positions;
  friend bool operator==(const TermTemplate&, const TermTemplate&) = default;
  friend auto operator<=>(const TermTemplate&, const TermTemplate&) = default;
};

/// A monomial evaluated on a concrete matrix.
struct SignedTerm {
  int sign = 1;
  std::vector<Index3> positions;
  Scalar value;  // sign * product of the addressed entries
};

/// The literal term list of the closed-form determinant for `order`
/// (1 term, 4 terms, or 36 terms). Hard-coded, not generated.
const std::vector<TermTemplate>& closed_form_terms(int order);

/// Determinant from the hard-coded closed-form term list.
DetValue det_closed(const CubicMatrix& a);

/// All (order!)^2 templates (i, sigma(i), tau(i)) with sign
/// parity(sigma) * parity(tau), sigma and tau ranging over permutations of
/// {1..order}. Generated by enumeration.
std::vector<TermTemplate> perm_terms(int order);

/// perm_terms(order) evaluated on `a`.
std::vector<SignedTerm> signed_terms(const CubicMatrix& a);

/// Sum over perm_terms: the independent oracle for every other path.
DetValue det_permutation(const CubicMatrix& a);

/// Sign carried by a_{ijk} in the determinant: (-1)^(j+k), independent of i.
/// This is the sign every valid Laplace expansion uses.
int sign_expansion(const Index3& at) noexcept;

/// The textbook-style cofactor sign (-1)^(i+j+k). Kept for cofactor tables;
/// with it, expansion along horizontal layer i yields (-1)^i * det.
int sign_paper_def(const Index3& at) noexcept;

/// +1 for even permutations of 1..n, -1 for odd ones (inversion count).
int permutation_parity(const std::vector<int>& perm) noexcept;

}  // namespace cubedet
