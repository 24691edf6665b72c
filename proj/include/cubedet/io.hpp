#pragma once

#include <string>
#include <string_view>

#include "cubedet/cubic_matrix.hpp"

namespace cubedet {

// Text format: the order on the first non-blank line, then one block per
// vertical layer, blocks separated by a blank line. Block k, row i,
// column j holds entry (i, j, k). Literals are integers or "p/q".
//
//   2
//   4 -3
//   -1 5
//
//   -2 4
//   -7 3

/// Throws ParseError (with a 1-based line/column location) on malformed
/// input, including non-cubic shapes and orders above 3. LF and CRLF line
/// endings are both accepted.
CubicMatrix parse_text(std::string_view input);

/// Canonical text: single spaces, one blank line between blocks, reduced
/// rationals, LF endings, trailing newline.
std::string serialize_text(const CubicMatrix& a);

/// {"order": n, "layers": [[[...]]]} with layers[k-1][i-1][j-1] = a_{ijk}.
/// Entries are JSON integers or "p/q" strings; floats are rejected.
/// Throws ParseError whose location names the offending block/row/column.
CubicMatrix parse_json(std::string_view input);

/// Compact JSON with keys in the order "order", "layers"; no trailing newline.
std::string serialize_json(const CubicMatrix& a);

/// JSON when the first non-whitespace character is '{', text otherwise.
CubicMatrix parse_any(std::string_view input);

}  // namespace cubedet
