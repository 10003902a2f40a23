#include "fq/export.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fq {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

template <class T>
T parse_number(std::string_view token, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("scl: bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

double parse_pitch(std::string_view line) {
  const auto token = line.substr(0, line.find_first_of(" \t"));
  if (token.find('.') != std::string_view::npos) {
    return parse_number<double>(token, "cents value");
  }
  const auto slash = token.find('/');
  const double num = parse_number<long long>(token.substr(0, slash), "ratio");
  const double den =
      slash == std::string_view::npos ? 1.0 : parse_number<long long>(token.substr(slash + 1), "ratio");
  if (num <= 0 || den <= 0) {
    throw ParseError("scl: ratio must be positive");
  }
  return 1200.0 * std::log2(num / den);
}

}  // namespace

std::string write_scl(const ScaleSpec& spec, std::string_view description,
                      const SclOptions& options) {
  const auto steps = build_step_table<Extended>(spec);
  std::string desc(description);
  std::replace(desc.begin(), desc.end(), '\n', ' ');
  std::replace(desc.begin(), desc.end(), '\r', ' ');

  std::string out;
  if (options.banner) {
    out += "! " + *options.banner + "\n!\n";
  }
  out += desc + "\n";
  out += std::to_string(spec.tones_per_octave()) + "\n";
  for (int n = 1; n <= spec.tones_per_octave(); ++n) {
    out += fixed6(static_cast<double>(1200.0L * steps[n])) + "\n";
  }
  return out;
}

SclDocument parse_scl(std::string_view text) {
  SclDocument doc;
  enum class Expect { Description, Count, Pitch } expect = Expect::Description;
  for (auto raw : split_lines(text)) {
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    if (!raw.empty() && raw.front() == '!') {
      continue;
    }
    switch (expect) {
      case Expect::Description:
        doc.description = std::string(raw);
        expect = Expect::Count;
        break;
      case Expect::Count: {
        const auto line = trim(raw);
        doc.note_count = parse_number<int>(line.substr(0, line.find_first_of(" \t")), "note count");
        if (doc.note_count < 0) {
          throw ParseError("scl: negative note count");
        }
        expect = Expect::Pitch;
        break;
      }
      case Expect::Pitch: {
        const auto line = trim(raw);
        if (line.empty()) {
          continue;
        }
        if (static_cast<int>(doc.pitch_cents.size()) == doc.note_count) {
          throw ParseError("scl: more pitch lines than note count");
        }
        doc.pitch_cents.push_back(parse_pitch(line));
        break;
      }
    }
  }
  if (expect != Expect::Pitch) {
    throw ParseError("scl: missing description or note count");
  }
  if (static_cast<int>(doc.pitch_cents.size()) != doc.note_count) {
    throw ParseError("scl: expected " + std::to_string(doc.note_count) + " pitch lines, found " +
                     std::to_string(doc.pitch_cents.size()));
  }
  return doc;
}

std::string write_frequency_csv(const FrequencyTable& table) {
  std::string out = "octave,step,frequency_hz,cents\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.octave) + "," + std::to_string(row.step) + "," +
           fixed6(row.frequency_hz) + "," + fixed6(row.cents) + "\n";
  }
  return out;
}

ScaleFamily make_family(std::string_view name, std::optional<double> a) {
  const bool parameterized = name == "power" || name == "power2";
  if (parameterized && !a) {
    throw ParseError("family '" + std::string(name) + "' requires parameter a");
  }
  if (!parameterized && a) {
    throw ParseError("family '" + std::string(name) + "' takes no parameter");
  }
  if (name == "equal" || name == "equal_temperament") return family::EqualTemperament{};
  if (name == "log") return family::Log{};
  if (name == "sqrt") return family::Sqrt{};
  if (name == "sine") return family::Sine{};
  if (name == "power") return family::Power(*a);
  if (name == "power2") return family::Power2(*a);
  throw ParseError("unknown scale family '" + std::string(name) + "'");
}

ScaleSpec read_scale_descriptor(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("descriptor: top level must be an object");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "family" && key != "a" && key != "tones_per_octave" && key != "steps") {
      throw ParseError("descriptor: unknown field '" + key + "'");
    }
  }

  std::optional<int> tones;
  if (doc.contains("tones_per_octave")) {
    const auto& t = doc["tones_per_octave"];
    if (!t.is_number_integer()) {
      throw ParseError("descriptor: tones_per_octave must be an integer");
    }
    tones = t.get<int>();
  }
  std::optional<double> a;
  if (doc.contains("a")) {
    if (!doc["a"].is_number()) {
      throw ParseError("descriptor: a must be a number");
    }
    a = doc["a"].get<double>();
  }
  std::string name = "custom";
  if (doc.contains("family")) {
    if (!doc["family"].is_string()) {
      throw ParseError("descriptor: family must be a string");
    }
    name = doc["family"].get<std::string>();
  }

  if (name == "custom") {
    if (!doc.contains("steps") || !doc["steps"].is_array()) {
      throw ParseError("descriptor: custom scale requires a steps array");
    }
    if (a) {
      throw ParseError("descriptor: custom scale takes no parameter a");
    }
    std::vector<double> steps;
    for (const auto& v : doc["steps"]) {
      if (!v.is_number()) {
        throw ParseError("descriptor: steps must be numbers");
      }
      steps.push_back(v.get<double>());
    }
    auto spec = tones ? ScaleSpec(family::Custom(std::move(steps)), *tones)
                      : ScaleSpec::custom(std::move(steps));
    require_valid(spec);
    return spec;
  }
  if (doc.contains("steps")) {
    throw ParseError("descriptor: steps is only valid for custom scales");
  }
  ScaleSpec spec(make_family(name, a), tones.value_or(12));
  require_valid(spec);
  return spec;
}

std::string write_scale_descriptor(const ScaleSpec& spec) {
  nlohmann::ordered_json doc;
  doc["family"] = std::string(family_name(spec.family()));
  std::visit(detail::Overloaded{
                 [&](const family::Power& p) { doc["a"] = p.a(); },
                 [&](const family::Power2& p) { doc["a"] = p.a(); },
                 [&](const family::Custom& c) { doc["steps"] = c.steps(); },
                 [](const auto&) {},
             },
             spec.family());
  doc["tones_per_octave"] = spec.tones_per_octave();
  return doc.dump(2) + "\n";
}

}  // namespace fq
