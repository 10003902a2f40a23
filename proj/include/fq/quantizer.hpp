#pragma once

#include <Eigen/Core>

#include <cmath>
#include <concepts>
#include <cstdint>

#include "fq/scale.hpp"

namespace fq {

/// Reference voltage in volts per octave.
class Calibration {
 public:
  /// Throws InvalidParameter unless v_ref is finite and > 0.
  explicit Calibration(double v_ref = 1.0);

  static Calibration volt_per_octave() { return Calibration(1.0); }
  static Calibration buchla() { return Calibration(1.2); }

  double v_ref() const noexcept { return v_ref_; }
  friend bool operator==(const Calibration&, const Calibration&) = default;

 private:
  double v_ref_;
};

/// Arithmetic width of the quantization pipeline. Single mirrors the 32-bit
/// float pipeline of software synth hosts.
enum class Precision { Single, Double };

struct QuantizerConfig {
  /// Throws ValidationError if the spec fails validation.
  explicit QuantizerConfig(ScaleSpec spec, Calibration calibration = Calibration(),
                           Precision precision = Precision::Double);

  ScaleSpec spec;
  Calibration calibration;
  Precision precision;
};

struct StepIndex {
  std::int64_t octave;
  int step;  // in [0, T-1]

  friend bool operator==(const StepIndex&, const StepIndex&) = default;
};

/// (floor(v / v_ref), floor(T * frac(v / v_ref))) with frac(t) = t - floor(t).
///
/// Floors round toward -inf, so negative voltages fall into negative octaves.
/// No epsilon is added: a boundary that is not representable in binary (0.1 V
/// at T = 12) may land on the step below, exactly as the formula evaluates.
template <std::floating_point Scalar>
StepIndex step_index_as(int tones, Scalar v_ref, Scalar v) {
  if (!std::isfinite(v)) {
    throw DomainError("input voltage must be finite");
  }
  const Scalar t = v / v_ref;
  const Scalar octave = std::floor(t);
  const Scalar frac = t - octave;
  int step = static_cast<int>(std::floor(Scalar(tones) * frac));
  // t slightly below an integer can round t - floor(t) up to exactly 1.
  if (step >= tones) {
    step = tones - 1;
  }
  return {static_cast<std::int64_t>(octave), step};
}

/// V_out = V_ref * (floor(V_in / V_ref) + log2 f(n / T)), in Scalar arithmetic.
///
/// For the Log family at T = 12 this evaluates term for term as
/// V_ref * (floor(V_in / V_ref) - 1 + log2 log2(4 + n)).
template <std::floating_point Scalar>
Scalar quantize_as(const ScaleSpec& spec, Scalar v_ref, Scalar v) {
  const StepIndex idx = step_index_as(spec.tones_per_octave(), v_ref, v);
  const Scalar out =
      v_ref * (static_cast<Scalar>(idx.octave) + step_octave_fraction<Scalar>(spec, idx.step));
  return out + Scalar(0);  // no negative zero
}

StepIndex step_index(const QuantizerConfig& config, double v_in);

/// Quantized voltage using the configured precision.
double quantize(const QuantizerConfig& config, double v_in);

/// Element-wise quantize. Throws NonFiniteSample naming the first bad index.
Eigen::ArrayXd quantize_block(const QuantizerConfig& config,
                              const Eigen::Ref<const Eigen::ArrayXd>& samples);

}  // namespace fq
