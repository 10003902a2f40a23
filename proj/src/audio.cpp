#include "fq/audio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fq {

void RenderConfig::validate() const {
  if (sample_rate < 8000) {
    throw InvalidParameter("sample rate must be >= 8000 Hz");
  }
  if (!std::isfinite(note_duration) || note_duration <= 0.0) {
    throw InvalidParameter("note duration must be > 0");
  }
  if (!std::isfinite(amplitude) || amplitude <= 0.0 || amplitude > 1.0) {
    throw InvalidParameter("amplitude must lie in (0, 1]");
  }
}

void validate_trace(const CvTrace& trace) {
  const auto& s = trace.samples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i].voltage)) {
      throw NonFiniteSample(i);
    }
    if (!std::isfinite(s[i].time)) {
      throw DomainError("trace time at index " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(s[i].time > s[i - 1].time)) {
      throw DomainError("trace times must be strictly increasing (index " + std::to_string(i) +
                        ")");
    }
  }
}

CvTrace quantize_trace(const QuantizerConfig& config, const CvTrace& trace) {
  validate_trace(trace);
  CvTrace out;
  out.samples.reserve(trace.samples.size());
  for (const auto& p : trace.samples) {
    out.samples.push_back({p.time, quantize(config, p.voltage)});
  }
  return out;
}

namespace {

constexpr double kFullScale = 32767.0;

class SineOscillator {
 public:
  explicit SineOscillator(int sample_rate) : sample_rate_(sample_rate) {}

  double next(double frequency) {
    const double value = std::sin(phase_);
    phase_ += 2.0 * std::numbers::pi * frequency / sample_rate_;
    phase_ = std::fmod(phase_, 2.0 * std::numbers::pi);
    return value;
  }

 private:
  int sample_rate_;
  double phase_ = 0.0;
};

double edge_gain(std::size_t j, std::size_t length, std::size_t fade) {
  if (fade == 0) {
    return 1.0;
  }
  const double in = static_cast<double>(j) / fade;
  const double out = static_cast<double>(length - 1 - j) / fade;
  return std::min({1.0, in, out});
}

std::int16_t to_pcm(double value) {
  return static_cast<std::int16_t>(std::lround(std::clamp(value, -1.0, 1.0) * kFullScale));
}

std::size_t fade_length(int sample_rate, std::size_t note_length) {
  const auto fade = static_cast<std::size_t>(std::lround(kFadeSeconds * sample_rate));
  return std::min(fade, note_length / 2);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
  }
}

void put_tag(std::vector<std::uint8_t>& out, const char (&tag)[5]) {
  out.insert(out.end(), tag, tag + 4);
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, std::string_view tag) {
  return std::equal(tag.begin(), tag.end(), b.begin() + static_cast<std::ptrdiff_t>(at));
}

}  // namespace

std::vector<std::int16_t> render_scale_samples(const ScaleSpec& spec, double base_frequency,
                                               OctaveRange octaves, const RenderConfig& config) {
  config.validate();
  const FrequencyTable table = scale_frequencies(spec, base_frequency, octaves);
  const double note_samples = config.note_duration * config.sample_rate;
  const std::size_t notes = table.rows.size();
  const auto total = static_cast<std::size_t>(std::llround(notes * note_samples));

  std::vector<std::int16_t> out;
  out.reserve(total);
  SineOscillator osc(config.sample_rate);
  for (std::size_t i = 0; i < notes; ++i) {
    const auto begin = static_cast<std::size_t>(std::llround(i * note_samples));
    const auto end = static_cast<std::size_t>(std::llround((i + 1) * note_samples));
    const std::size_t length = end - begin;
    const std::size_t fade = fade_length(config.sample_rate, length);
    const double hz = table.rows[i].frequency_hz;
    for (std::size_t j = 0; j < length; ++j) {
      out.push_back(to_pcm(config.amplitude * edge_gain(j, length, fade) * osc.next(hz)));
    }
  }
  return out;
}

std::vector<std::uint8_t> render_scale(const ScaleSpec& spec, double base_frequency,
                                       OctaveRange octaves, const RenderConfig& config) {
  return encode_wav(render_scale_samples(spec, base_frequency, octaves, config),
                    config.sample_rate);
}

std::vector<std::uint8_t> render_trace(const QuantizerConfig& quantizer, const CvTrace& trace,
                                       double base_frequency, const RenderConfig& config) {
  config.validate();
  const CvTrace held = quantize_trace(quantizer, trace);
  if (held.samples.empty()) {
    return encode_wav({}, config.sample_rate);
  }
  const double start = held.samples.front().time;
  const double stop = held.samples.back().time + config.note_duration;
  const auto total = static_cast<std::size_t>(std::llround((stop - start) * config.sample_rate));
  const std::size_t fade = fade_length(config.sample_rate, total);

  std::vector<std::int16_t> pcm;
  pcm.reserve(total);
  SineOscillator osc(config.sample_rate);
  std::size_t point = 0;
  double hz = voltage_to_frequency(base_frequency, quantizer.calibration, held.samples[0].voltage);
  for (std::size_t j = 0; j < total; ++j) {
    const double t = start + static_cast<double>(j) / config.sample_rate;
    while (point + 1 < held.samples.size() && held.samples[point + 1].time <= t) {
      ++point;
      hz = voltage_to_frequency(base_frequency, quantizer.calibration,
                                held.samples[point].voltage);
    }
    pcm.push_back(to_pcm(config.amplitude * edge_gain(j, total, fade) * osc.next(hz)));
  }
  return encode_wav(pcm, config.sample_rate);
}

std::vector<std::uint8_t> encode_wav(std::span<const std::int16_t> samples, int sample_rate) {
  constexpr std::uint16_t channels = 1;
  constexpr std::uint16_t bits = 16;
  constexpr std::uint16_t block_align = channels * bits / 8;
  const auto data_bytes = static_cast<std::uint32_t>(samples.size() * block_align);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, 1);
  put_u16(out, channels);
  put_u32(out, static_cast<std::uint32_t>(sample_rate));
  put_u32(out, static_cast<std::uint32_t>(sample_rate) * block_align);
  put_u16(out, block_align);
  put_u16(out, bits);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (const std::int16_t s : samples) {
    put_u16(out, static_cast<std::uint16_t>(s));
  }
  return out;
}

WavData decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE")) {
    throw ParseError("wav: missing RIFF/WAVE header");
  }
  if (get_u32(bytes, 4) != bytes.size() - 8) {
    throw ParseError("wav: RIFF size does not match file length");
  }

  WavData wav;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t size = get_u32(bytes, pos + 4);
    const std::size_t body = pos + 8;
    if (body + size > bytes.size()) {
      throw ParseError("wav: chunk runs past end of file");
    }
    if (tag_is(bytes, pos, "fmt ")) {
      if (size < 16) {
        throw ParseError("wav: fmt chunk too short");
      }
      if (get_u16(bytes, body) != 1) {
        throw ParseError("wav: not PCM (format tag != 1)");
      }
      wav.channels = get_u16(bytes, body + 2);
      wav.sample_rate = static_cast<int>(get_u32(bytes, body + 4));
      const std::uint32_t byte_rate = get_u32(bytes, body + 8);
      const std::uint16_t block_align = get_u16(bytes, body + 12);
      wav.bits_per_sample = get_u16(bytes, body + 14);
      if (wav.bits_per_sample != 16) {
        throw ParseError("wav: only 16-bit PCM is supported");
      }
      if (wav.channels < 1 || block_align != wav.channels * 2 ||
          byte_rate != static_cast<std::uint32_t>(wav.sample_rate) * block_align) {
        throw ParseError("wav: inconsistent fmt chunk");
      }
      have_fmt = true;
    } else if (tag_is(bytes, pos, "data")) {
      if (!have_fmt) {
        throw ParseError("wav: data chunk before fmt chunk");
      }
      if (size % (2 * static_cast<std::uint32_t>(wav.channels)) != 0) {
        throw ParseError("wav: data length is not a whole number of frames");
      }
      wav.samples.resize(size / 2);
      for (std::size_t i = 0; i < wav.samples.size(); ++i) {
        wav.samples[i] = static_cast<std::int16_t>(get_u16(bytes, body + 2 * i));
      }
      return wav;
    }
    pos = body + size + (size & 1);
  }
  throw ParseError("wav: no data chunk");
}

}  // namespace fq
