#include "cubedet/verify.hpp"

#include <stdexcept>

#include "cubedet/determinant.hpp"
#include "cubedet/error.hpp"
#include "cubedet/io.hpp"

namespace cubedet {
namespace {

// Factor used by the scaling law; non-integer so rational arithmetic is exercised.
const Scalar kLawFactor{-3, 2};

struct LawCheck {
  std::string name;
  CubicMatrix transformed;
  Scalar predicted;
};

bool law_holds(const LawCheck& law, const CheckOptions& options) {
  const CubicMatrix& t = law.transformed;
  if (det_permutation(t).value != law.predicted || det_closed(t).value != law.predicted) {
    return false;
  }
  for (Axis axis : kAllAxes) {
    if (expand(t, axis, 1, options.laplace_sign).total != law.predicted) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string GenSpec::to_string() const {
  return "order=" + std::to_string(order) + " seed=" + std::to_string(seed) +
         " range=" + std::to_string(range);
}

CubicMatrix random_cubic(const GenSpec& spec) {
  check_order(spec.order);
  if (spec.range < 1 || spec.range > kMaxRange) {
    throw std::invalid_argument("range must be in [1, 2^62], got " + std::to_string(spec.range));
  }
  const auto modulus = static_cast<std::uint64_t>(spec.range) * 2 + 1;
  SplitMix64 rng(spec.seed);
  std::vector<Scalar> entries;
  const int count = spec.order * spec.order * spec.order;
  entries.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    entries.emplace_back(static_cast<std::int64_t>(rng.next() % modulus) - spec.range);
  }
  return CubicMatrix::from_entries(spec.order, std::move(entries));
}

std::string matrix_digest(const CubicMatrix& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_text(a)) {
    h = (h ^ c) * 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "order" + std::to_string(a.order()) + ":";
  for (int shift = 60; shift >= 0; shift -= 4) {
    out.push_back(hex[(h >> shift) & 0xf]);
  }
  return out;
}

void VerifyReport::finalize() {
  overall = true;
  for (PathResult& p : paths) {
    p.agrees = p.value == det_value;
    overall = overall && p.agrees;
  }
  for (const LawResult& law : derived_laws) {
    overall = overall && law.passed;
  }
}

std::vector<std::string> VerifyReport::disagreeing_paths() const {
  std::vector<std::string> out;
  for (const PathResult& p : paths) {
    if (!p.agrees) {
      out.push_back(p.name);
    }
  }
  return out;
}

VerifyReport cross_check(const CubicMatrix& a, const CheckOptions& options) {
  if (a.order() < 2) {
    throw ShapeError("cross-check needs order 2 or 3, got order 1");
  }
  VerifyReport report;
  report.subject = matrix_digest(a);
  report.det_value = det_permutation(a).value;

  report.paths.push_back({"closed", det_closed(a).value});
  report.paths.push_back({"permutation", report.det_value});
  for (Axis axis : kAllAxes) {
    for (int index = 1; index <= a.order(); ++index) {
      report.paths.push_back({std::string("laplace:") + axis_code(axis) + ":" +
                                  std::to_string(index),
                              expand(a, axis, index, options.laplace_sign).total});
    }
  }

  const int n = a.order();
  const Scalar& det = report.det_value;
  std::vector<LawCheck> laws;
  for (Axis axis : kAllAxes) {
    const std::string code = axis_code(axis);
    laws.push_back({"scale:" + code, scale_layer(a, axis, n, kLawFactor), kLawFactor * det});
    laws.push_back({"swap:" + code, swap_layers(a, axis, 1, n),
                    axis == Axis::HorizontalLayer ? det : -det});
    laws.push_back({"zero-layer:" + code, scale_layer(a, axis, 1, Scalar{0}), Scalar{0}});
  }
  for (const LawCheck& law : laws) {
    report.derived_laws.push_back({law.name, law_holds(law, options)});
  }

  report.finalize();
  return report;
}

std::optional<GenSpec> BatchSummary::first_failure() const {
  if (failing.empty()) {
    return std::nullopt;
  }
  return failing.front();
}

BatchSummary batch_verify(const std::vector<int>& orders, std::uint64_t trials,
                          std::uint64_t seed, std::int64_t range,
                          const CheckOptions& options) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  BatchSummary summary;
  for (int order : orders) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      const GenSpec spec{order, seed + t, range};
      const VerifyReport report = cross_check(random_cubic(spec), options);
      ++summary.trials_run;
      if (report.overall) {
        continue;
      }
      ++summary.failures;
      if (summary.failing.size() < BatchSummary::kMaxRecorded) {
        summary.failing.push_back(spec);
      }
      for (const PathResult& p : report.paths) {
        if (!p.agrees) {
          ++summary.path_failures[p.name];
        }
      }
      for (const LawResult& law : report.derived_laws) {
        if (!law.passed) {
          ++summary.law_failures[law.name];
        }
      }
    }
  }
  return summary;
}

}  // namespace cubedet
