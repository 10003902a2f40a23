#include "fq/reference.hpp"

#include <cmath>

namespace fq {

Extended quantize_hp(const QuantizerConfig& config, Extended v_in) {
  return quantize_as<Extended>(config.spec, static_cast<Extended>(config.calibration.v_ref()),
                               v_in);
}

namespace {

bool near_step_boundary(const QuantizerConfig& config, Extended v) {
  const Extended v_ref = config.calibration.v_ref();
  const Extended tones = config.spec.tones_per_octave();
  const Extended pos = v / v_ref * tones;
  const Extended distance = std::fabs(pos - std::nearbyint(pos)) * v_ref / tones;
  return distance < kBoundaryExclusion;
}

}  // namespace

DiffReport differential_sweep(const QuantizerConfig& config, double lo, double hi,
                              std::size_t count) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw DomainError("differential sweep requires finite lo < hi");
  }
  if (count < 2) {
    throw DomainError("differential sweep requires count >= 2");
  }

  const float v_ref_single = static_cast<float>(config.calibration.v_ref());
  const double spacing = (hi - lo) / static_cast<double>(count - 1);
  DiffReport report;
  for (std::size_t i = 0; i < count; ++i) {
    const double v = i + 1 == count ? hi : lo + static_cast<double>(i) * spacing;
    if (near_step_boundary(config, v)) {
      ++report.samples_excluded;
      continue;
    }
    const Extended single = quantize_as<float>(config.spec, v_ref_single, static_cast<float>(v));
    const Extended reference = quantize_hp(config, v);
    const double err = static_cast<double>(std::fabs(single - reference));
    if (report.samples_tested == 0 || err > report.max_abs_error) {
      report.max_abs_error = err;
      report.argmax_input = v;
    }
    ++report.samples_tested;
  }
  if (report.samples_tested == 0) {
    throw DomainError("differential sweep excluded every sample");
  }
  return report;
}

}  // namespace fq
