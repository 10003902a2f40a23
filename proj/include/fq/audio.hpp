#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fq/pitch.hpp"
#include "fq/quantizer.hpp"

namespace fq {

/// Linear fade applied at each note edge.
inline constexpr double kFadeSeconds = 0.005;

/// Mono 16-bit PCM rendering parameters.
struct RenderConfig {
  int sample_rate = 44100;
  double note_duration = 0.5;  // seconds
  double amplitude = 0.5;      // linear, (0, 1]

  /// Throws InvalidParameter unless sample_rate >= 8000, note_duration > 0
  /// and 0 < amplitude <= 1.
  void validate() const;
};

struct CvPoint {
  double time;     // seconds
  double voltage;  // volts
};

struct CvTrace {
  std::vector<CvPoint> samples;
};

/// Throws DomainError if times are not strictly increasing or a voltage is
/// not finite (NonFiniteSample with its index).
void validate_trace(const CvTrace& trace);

/// Same times, voltages passed through quantize().
CvTrace quantize_trace(const QuantizerConfig& config, const CvTrace& trace);

/// Sine oscillator stepping through the scale: one note per (octave, step)
/// in scale_frequencies() order. Phase runs continuously across notes.
std::vector<std::int16_t> render_scale_samples(const ScaleSpec& spec, double base_frequency,
                                               OctaveRange octaves, const RenderConfig& config);

/// render_scale_samples() wrapped in a WAV container.
std::vector<std::uint8_t> render_scale(const ScaleSpec& spec, double base_frequency,
                                       OctaveRange octaves, const RenderConfig& config);

/// Sine whose pitch follows the quantized trace, sample-and-hold between
/// trace points. The last point is held for config.note_duration.
std::vector<std::uint8_t> render_trace(const QuantizerConfig& quantizer, const CvTrace& trace,
                                       double base_frequency, const RenderConfig& config);

struct WavData {
  int sample_rate = 0;
  int channels = 0;
  int bits_per_sample = 0;
  std::vector<std::int16_t> samples;  // interleaved
};

/// RIFF/WAVE, format tag 1, mono, 16-bit little-endian.
std::vector<std::uint8_t> encode_wav(std::span<const std::int16_t> samples, int sample_rate);

/// Reads 16-bit PCM WAV. Throws ParseError on anything else or on
/// inconsistent header fields.
WavData decode_wav(std::span<const std::uint8_t> bytes);

}  // namespace fq
