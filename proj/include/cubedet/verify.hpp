#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubedet/cubic_matrix.hpp"
#include "cubedet/laplace.hpp"
#include "cubedet/scalar.hpp"

namespace cubedet {

/// splitmix64: the fixed generator behind every random matrix.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// Parameters of one generated matrix: integer entries drawn from [-range, range].
struct GenSpec {
  int order = 2;
  std::uint64_t seed = 0;
  std::int64_t range = 9;

  std::string to_string() const;
  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

inline constexpr std::int64_t kMaxRange = std::int64_t{1} << 62;

/// Entries are successive splitmix64 outputs in canonical layout order,
/// each mapped to (x mod (2R+1)) - R. Throws ShapeError/std::invalid_argument
/// for an invalid spec.
CubicMatrix random_cubic(const GenSpec& spec);

/// Order plus an FNV-1a hash of the canonical text form.
std::string matrix_digest(const CubicMatrix& a);

struct PathResult {
  std::string name;  // "closed", "permutation" or "laplace:<axis>:<index>"
  Scalar value;
  bool agrees = false;
};

struct LawResult {
  std::string name;
  bool passed = false;
};

struct VerifyReport {
  std::string subject;
  Scalar det_value;
  std::vector<PathResult> paths;
  std::vector<LawResult> derived_laws;
  bool overall = false;

  /// Recomputes every agreement flag and the overall verdict from the
  /// stored values.
  void finalize();
  std::vector<std::string> disagreeing_paths() const;
};

/// Test hooks for checking that the harness notices broken code.
struct CheckOptions {
  SignRule laplace_sign = sign_expansion;
};

/// Evaluates the closed form, the permutation oracle and every Laplace
/// expansion, plus the scaling/swap/zero-layer laws on transformed matrices.
/// The permutation oracle supplies det_value. Order must be 2 or 3.
VerifyReport cross_check(const CubicMatrix& a, const CheckOptions& options = {});

struct BatchSummary {
  std::uint64_t trials_run = 0;
  std::uint64_t failures = 0;
  std::vector<GenSpec> failing;  // in trial order, capped at kMaxRecorded
  std::map<std::string, std::uint64_t> path_failures;
  std::map<std::string, std::uint64_t> law_failures;

  static constexpr std::size_t kMaxRecorded = 20;

  std::optional<GenSpec> first_failure() const;
  friend bool operator==(const BatchSummary&, const BatchSummary&) = default;
};

/// Trial t of order n checks random_cubic({n, seed + t, range}), so any
/// failure reproduces from its GenSpec alone. Orders run in the given order.
BatchSummary batch_verify(const std::vector<int>& orders, std::uint64_t trials,
                          std::uint64_t seed, std::int64_t range,
                          const CheckOptions& options = {});

}  // namespace cubedet
