#include "fq/pitch.hpp"

#include <cmath>

namespace fq {

namespace {

void require_base_frequency(double base_frequency) {
  if (!std::isfinite(base_frequency) || base_frequency <= 0.0) {
    throw InvalidParameter("base frequency must be finite and > 0");
  }
}

}  // namespace

double voltage_to_frequency(double base_frequency, const Calibration& calibration, double v) {
  require_base_frequency(base_frequency);
  if (!std::isfinite(v)) {
    throw DomainError("voltage must be finite");
  }
  return base_frequency * std::exp2(v / calibration.v_ref());
}

double step_frequency(const ScaleSpec& spec, double base_frequency, int octave, int step) {
  require_base_frequency(base_frequency);
  const Extended ratio = std::exp2(step_octave_fraction<Extended>(spec, step));
  return static_cast<double>(std::ldexp(static_cast<Extended>(base_frequency) * ratio, octave));
}

FrequencyTable scale_frequencies(const ScaleSpec& spec, double base_frequency,
                                 OctaveRange octaves) {
  require_base_frequency(base_frequency);
  if (octaves.count() < 1) {
    throw DomainError("octave range is empty");
  }
  const auto steps = build_step_table<Extended>(spec);
  const int tones = spec.tones_per_octave();

  FrequencyTable table{base_frequency, {}};
  table.rows.reserve(static_cast<std::size_t>(octaves.count()) * tones + 1);
  for (int k = octaves.first; k <= octaves.last; ++k) {
    const int last_step = k == octaves.last ? tones : tones - 1;
    for (int n = 0; n <= last_step; ++n) {
      const Extended ratio = std::exp2(steps[n]);
      const Extended hz = std::ldexp(static_cast<Extended>(base_frequency) * ratio, k);
      table.rows.push_back({k, n, static_cast<double>(hz), static_cast<double>(1200.0L * steps[n])});
    }
  }
  return table;
}

Eigen::ArrayXd step_cents(const ScaleSpec& spec) {
  return (build_step_table<Extended>(spec).entries * 1200.0L).cast<double>();
}

}  // namespace fq
