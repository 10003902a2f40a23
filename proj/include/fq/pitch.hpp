#pragma once

#include <Eigen/Core>

#include <vector>

#include "fq/quantizer.hpp"
#include "fq/scale.hpp"

namespace fq {

/// Default base frequency of the command-line tool: middle C.
inline constexpr double kDefaultBaseFrequency = 261.6256;

/// Inclusive range of octave numbers.
struct OctaveRange {
  int first = 0;
  int last = 0;

  int count() const noexcept { return last - first + 1; }
};

struct FrequencyRow {
  int octave;
  int step;
  double frequency_hz;
  /// 1200 log2 f(n/T), relative to the octave's root.
  double cents;
};

struct FrequencyTable {
  double base_frequency;
  std::vector<FrequencyRow> rows;
};

/// F_0 * 2^(v / V_ref). Throws InvalidParameter for F_0 <= 0.
double voltage_to_frequency(double base_frequency, const Calibration& calibration, double v);

/// 2^octave * F_0 * f(n/T), computed in extended precision.
double step_frequency(const ScaleSpec& spec, double base_frequency, int octave, int step);

/// Rows (k, n) for every octave k in range and n = 0..T-1, plus the closing
/// n = T row of the last octave.
FrequencyTable scale_frequencies(const ScaleSpec& spec, double base_frequency,
                                 OctaveRange octaves);

/// 1200 * log2 f(n/T), n = 0..T.
Eigen::ArrayXd step_cents(const ScaleSpec& spec);

}  // namespace fq
