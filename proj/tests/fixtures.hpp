#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cubedet/cubic_matrix.hpp"

namespace cubedet::testing {

inline CubicMatrix example1() {
  return CubicMatrix::from_layers(2, {{{4, -3}, {-1, 5}}, {{-2, 4}, {-7, 3}}});
}

inline CubicMatrix example2() {
  return CubicMatrix::from_layers(3, {
                                         {{3, 0, -4}, {2, 5, -1}, {0, 3, -2}},
                                         {{-2, 4, 0}, {-3, 0, 3}, {-3, 2, 5}},
                                         {{5, 1, 0}, {3, 1, 2}, {0, 4, 3}},
                                     });
}

/// Random integer matrix from std::mt19937_64, deliberately not the
/// library's own generator.
inline CubicMatrix random_matrix(std::mt19937_64& rng, int order, int range = 9) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<Scalar> entries;
  for (int n = 0; n < order * order * order; ++n) {
    entries.emplace_back(dist(rng));
  }
  return CubicMatrix::from_entries(order, std::move(entries));
}

inline Scalar random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  int n = 0;
  while (n == 0) {
    n = num(rng);
  }
  return Scalar(n, den(rng));
}

inline std::string data_path(const std::string& name) {
  return std::string(CUBEDET_TEST_DATA_DIR) + "/" + name;
}

}  // namespace cubedet::testing
