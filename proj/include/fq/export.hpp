#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fq/pitch.hpp"
#include "fq/scale.hpp"

namespace fq {

/// One octave of a tuning in Scala form. The implicit 1/1 is not stored.
struct SclDocument {
  std::string description;
  int note_count = 0;
  std::vector<double> pitch_cents;  // steps 1..T
};

struct SclOptions {
  /// Written as '!' comment lines ahead of the description when set.
  std::optional<std::string> banner;
};

/// Scala .scl text: description, note count T, then T cents values with six
/// decimals. LF line endings.
std::string write_scl(const ScaleSpec& spec, std::string_view description,
                      const SclOptions& options = {});

/// Minimal .scl reader: accepts cents lines (containing '.') and ratio lines
/// (n/d or n). Throws ParseError.
SclDocument parse_scl(std::string_view text);

/// Header `octave,step,frequency_hz,cents`, one row per table row, six
/// decimals.
std::string write_frequency_csv(const FrequencyTable& table);

/// JSON scale descriptor:
///   {"family": "log"}                                  Log, T = 12
///   {"family": "power", "a": 2.0, "tones_per_octave": 19}
///   {"steps": [0.0, 0.3, 0.6, 1.0]}                    custom, T = 3
/// Throws ParseError for malformed JSON or schema violations and
/// ValidationError when the described scale breaks the f(0) = 1, f(1) = 2,
/// strictly increasing contract.
ScaleSpec read_scale_descriptor(std::string_view text);

std::string write_scale_descriptor(const ScaleSpec& spec);

/// Parses a family name ("log", "equal", ...) with its optional parameter.
/// Throws ParseError for unknown names or a missing / superfluous parameter.
ScaleFamily make_family(std::string_view name, std::optional<double> a);

}  // namespace fq
