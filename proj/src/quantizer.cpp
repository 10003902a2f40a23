#include "fq/quantizer.hpp"

namespace fq {

Calibration::Calibration(double v_ref) : v_ref_(v_ref) {
  if (!std::isfinite(v_ref) || v_ref <= 0.0) {
    throw InvalidParameter("v_ref must be finite and > 0");
  }
}

QuantizerConfig::QuantizerConfig(ScaleSpec spec_, Calibration calibration_, Precision precision_)
    : spec(std::move(spec_)), calibration(calibration_), precision(precision_) {
  require_valid(spec);
}

StepIndex step_index(const QuantizerConfig& config, double v_in) {
  const int tones = config.spec.tones_per_octave();
  if (config.precision == Precision::Single) {
    return step_index_as<float>(tones, static_cast<float>(config.calibration.v_ref()),
                                static_cast<float>(v_in));
  }
  return step_index_as<double>(tones, config.calibration.v_ref(), v_in);
}

double quantize(const QuantizerConfig& config, double v_in) {
  if (config.precision == Precision::Single) {
    return quantize_as<float>(config.spec, static_cast<float>(config.calibration.v_ref()),
                              static_cast<float>(v_in));
  }
  return quantize_as<double>(config.spec, config.calibration.v_ref(), v_in);
}

Eigen::ArrayXd quantize_block(const QuantizerConfig& config,
                              const Eigen::Ref<const Eigen::ArrayXd>& samples) {
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples(i))) {
      throw NonFiniteSample(static_cast<std::size_t>(i));
    }
  }
  return samples.unaryExpr([&](double v) { return quantize(config, v); });
}

}  // namespace fq
