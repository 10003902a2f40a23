#pragma once

#include <cstddef>

#include "fq/quantizer.hpp"

namespace fq {

/// Quantize in extended precision; ground truth for the narrower pipelines.
/// Ignores config.precision.
Extended quantize_hp(const QuantizerConfig& config, Extended v_in);

struct DiffReport {
  double max_abs_error = 0.0;
  double argmax_input = 0.0;
  std::size_t samples_tested = 0;
  std::size_t samples_excluded = 0;
};

/// Half-width, in volts, of the window around each step boundary that the
/// sweep skips. Near a boundary the floor can legitimately pick different
/// steps in different precisions.
inline constexpr double kBoundaryExclusion = 1e-7;

/// Tolerance on max_abs_error for the single-precision pipeline.
inline constexpr double kSinglePrecisionTolerance = 5e-6;

/// max |quantize_single(v) - quantize_hp(v)| over `count` evenly spaced v in
/// [lo, hi], skipping v within kBoundaryExclusion of a step boundary.
/// Throws DomainError unless lo < hi and count >= 2.
DiffReport differential_sweep(const QuantizerConfig& config, double lo, double hi,
                              std::size_t count);

}  // namespace fq
