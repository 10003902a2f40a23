#include "fq/cli.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fq/audio.hpp"
#include "fq/export.hpp"
#include "fq/pitch.hpp"
#include "fq/quantizer.hpp"
#include "fq/reference.hpp"

namespace fq::cli {

namespace {

constexpr const char* kToolBanner = "fq " FQ_VERSION;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string scale;
  std::string descriptor;
  std::optional<int> tones;
  std::vector<std::string> params;
  std::optional<double> vref;
  std::string precision = "double";
  double base_freq = kDefaultBaseFrequency;
  int octaves = 1;
  int first_octave = 0;
  std::string out;
  std::string input = "-";
  std::string description;
  bool no_banner = false;
  std::string range = "0:10";
  std::size_t samples = 100000;
  double tolerance = kSinglePrecisionTolerance;
  double note_duration = 0.5;
  int sample_rate = 44100;
  double amplitude = 0.5;
  std::string trace;
};

std::optional<double> parse_double(std::string_view text) {
  double value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    return std::nullopt;
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

/// Writes to --out when given, otherwise to the standard output stream.
void emit(const Options& opts, std::ostream& out, std::string_view data) {
  if (opts.out.empty() || opts.out == "-") {
    out << data;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file || !file.write(data.data(), static_cast<std::streamsize>(data.size()))) {
    throw IoError("cannot write '" + opts.out + "'");
  }
}

ScaleSpec resolve_scale(const Options& opts) {
  const bool by_name = !opts.scale.empty();
  const bool by_file = !opts.descriptor.empty();
  if (by_name == by_file) {
    throw UsageError("exactly one of --scale or --descriptor is required");
  }
  if (by_file) {
    if (opts.tones || !opts.params.empty()) {
      throw UsageError("--tones and --param cannot be combined with --descriptor");
    }
    return read_scale_descriptor(read_file(opts.descriptor));
  }

  std::optional<double> a;
  for (const auto& p : opts.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || p.substr(0, eq) != "a") {
      throw UsageError("--param expects a=<value>, got '" + p + "'");
    }
    a = parse_double(std::string_view(p).substr(eq + 1));
    if (!a) {
      throw UsageError("--param value is not a number: '" + p + "'");
    }
  }
  ScaleFamily family = family::EqualTemperament{};
  try {
    family = make_family(opts.scale, a);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  return ScaleSpec(std::move(family), opts.tones.value_or(12));
}

Calibration resolve_calibration(const Options& opts) {
  if (opts.vref) {
    return Calibration(*opts.vref);
  }
  if (const char* env = std::getenv("FQ_DEFAULT_VREF"); env != nullptr && *env != '\0') {
    const auto v = parse_double(env);
    if (!v) {
      throw UsageError(std::string("FQ_DEFAULT_VREF is not a number: '") + env + "'");
    }
    return Calibration(*v);
  }
  return Calibration::volt_per_octave();
}

Precision resolve_precision(const Options& opts) {
  return opts.precision == "single" ? Precision::Single : Precision::Double;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("--range expects lo:hi");
  }
  const auto lo = parse_double(std::string_view(text).substr(0, colon));
  const auto hi = parse_double(std::string_view(text).substr(colon + 1));
  if (!lo || !hi) {
    throw UsageError("--range expects numeric lo:hi, got '" + text + "'");
  }
  return {*lo, *hi};
}

OctaveRange octave_range(const Options& opts) {
  if (opts.octaves < 1) {
    throw UsageError("--octaves must be >= 1");
  }
  return {opts.first_octave, opts.first_octave + opts.octaves - 1};
}

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
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// ---------------------------------------------------------------------------

int cmd_list(std::ostream& out) {
  const ScaleFamily families[] = {family::EqualTemperament{}, family::Log{},
                                  family::Sqrt{},             family::Sine{},
                                  family::Power(1.0),         family::Power2(1.0)};
  for (const auto& f : families) {
    out << family_name(f) << "\t" << family_formula(f) << "\n";
  }
  out << "custom\tvia --descriptor with a steps array\n";
  return kExitOk;
}

int cmd_validate(const Options& opts, std::ostream& out) {
  const ScaleSpec spec = resolve_scale(opts);
  const ValidationReport report = validate(spec);
  out << "scale: " << describe(spec) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Le", report.max_boundary_residual);
  out << "max_boundary_residual: " << buf << "\n";
  for (const auto& v : report.violations) {
    out << "violation: " << v << "\n";
  }
  out << "status: " << (report.valid() ? "valid" : "invalid") << "\n";
  return report.valid() ? kExitOk : kExitFailure;
}

int cmd_table(const Options& opts, std::ostream& out) {
  const ScaleSpec spec = resolve_scale(opts);
  emit(opts, out, write_frequency_csv(scale_frequencies(spec, opts.base_freq, octave_range(opts))));
  return kExitOk;
}

int cmd_scl(const Options& opts, std::ostream& out) {
  const ScaleSpec spec = resolve_scale(opts);
  SclOptions scl;
  if (!opts.no_banner) {
    scl.banner = kToolBanner;
  }
  const std::string description =
      opts.description.empty() ? "Functionally quantized scale: " + describe(spec)
                               : opts.description;
  emit(opts, out, write_scl(spec, description, scl));
  return kExitOk;
}

/// Streams `time,voltage` or bare `voltage` lines through the quantizer. A
/// non-numeric first line is treated as a header and passed through.
int cmd_quantize(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const QuantizerConfig config(resolve_scale(opts), resolve_calibration(opts),
                               resolve_precision(opts));

  std::ifstream file;
  std::istream* src = &in;
  if (opts.input != "-") {
    file.open(opts.input);
    if (!file) {
      throw IoError("cannot open '" + opts.input + "' for reading");
    }
    src = &file;
  }
  std::ofstream out_file;
  std::ostream* dst = &out;
  if (!opts.out.empty() && opts.out != "-") {
    out_file.open(opts.out);
    if (!out_file) {
      throw IoError("cannot write '" + opts.out + "'");
    }
    dst = &out_file;
  }

  const std::string source = opts.input == "-" ? std::string("<stdin>") : opts.input;
  auto fail = [&](std::size_t line_no, const std::string& msg) {
    err << "fq: " << source << ":" << line_no << ": " << msg << "\n";
    return kExitFailure;
  };

  std::string line;
  std::size_t line_no = 0;
  int columns = 0;
  std::optional<double> last_time;
  bool first_data = true;
  while (std::getline(*src, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) {
      continue;
    }
    const auto comma = text.find(',');
    const int cols = comma == std::string_view::npos ? 1 : 2;
    const auto v_text = trim(cols == 1 ? text : text.substr(comma + 1));
    const auto t_text = trim(cols == 1 ? std::string_view{} : text.substr(0, comma));
    const auto voltage = parse_double(v_text);
    const auto time = cols == 2 ? parse_double(t_text) : std::optional<double>(0.0);

    if (first_data && (!voltage || !time)) {
      *dst << text << "\n";
      first_data = false;
      continue;
    }
    first_data = false;
    if (v_text.find(',') != std::string_view::npos) {
      return fail(line_no, "expected `time,voltage` or `voltage`");
    }
    if (!voltage || !time) {
      return fail(line_no, "not a number");
    }
    if (columns == 0) {
      columns = cols;
    } else if (cols != columns) {
      return fail(line_no, "column count changed");
    }
    if (!std::isfinite(*voltage)) {
      return fail(line_no, "non-finite voltage");
    }
    if (cols == 2) {
      if (!std::isfinite(*time) || (last_time && !(*time > *last_time))) {
        return fail(line_no, "times must be finite and strictly increasing");
      }
      last_time = *time;
      *dst << t_text << "," << fixed6(quantize(config, *voltage)) << "\n";
    } else {
      *dst << fixed6(quantize(config, *voltage)) << "\n";
    }
  }
  if (src->bad()) {
    throw IoError("read error on '" + source + "'");
  }
  dst->flush();
  return kExitOk;
}

CvTrace read_trace(const std::string& path) {
  std::istringstream in(read_file(path));
  CvTrace trace;
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    const auto text = trim(line);
    if (text.empty()) {
      continue;
    }
    const auto comma = text.find(',');
    std::optional<double> t, v;
    if (comma == std::string_view::npos) {
      t = static_cast<double>(index);
      v = parse_double(text);
    } else {
      t = parse_double(trim(text.substr(0, comma)));
      v = parse_double(trim(text.substr(comma + 1)));
    }
    if (!t || !v) {
      if (trace.samples.empty() && index == 0) {
        continue;  // header
      }
      throw ParseError(path + ": bad trace line '" + std::string(text) + "'");
    }
    trace.samples.push_back({*t, *v});
    ++index;
  }
  return trace;
}

int cmd_render(const Options& opts, std::ostream& out) {
  if (opts.out.empty() || opts.out == "-") {
    throw UsageError("render requires --out <file.wav>");
  }
  const ScaleSpec spec = resolve_scale(opts);
  RenderConfig cfg;
  cfg.sample_rate = opts.sample_rate;
  cfg.note_duration = opts.note_duration;
  cfg.amplitude = opts.amplitude;

  std::vector<std::uint8_t> wav;
  if (opts.trace.empty()) {
    wav = render_scale(spec, opts.base_freq, octave_range(opts), cfg);
  } else {
    const QuantizerConfig config(spec, resolve_calibration(opts), resolve_precision(opts));
    wav = render_trace(config, read_trace(opts.trace), opts.base_freq, cfg);
  }
  emit(opts, out, std::string_view(reinterpret_cast<const char*>(wav.data()), wav.size()));
  return kExitOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
  const QuantizerConfig config(resolve_scale(opts), resolve_calibration(opts),
                               Precision::Single);
  const auto [lo, hi] = parse_range(opts.range);
  const DiffReport report = differential_sweep(config, lo, hi, opts.samples);
  const bool pass = report.max_abs_error <= opts.tolerance;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "scale: %s\nv_ref: %g\nrange: %g:%g\nsamples_tested: %zu\nsamples_excluded: %zu\n"
                "max_abs_error: %.3e\nargmax_input: %.9f\ntolerance: %.3e\nstatus: %s\n",
                describe(config.spec).c_str(), config.calibration.v_ref(), lo, hi,
                report.samples_tested, report.samples_excluded, report.max_abs_error,
                report.argmax_input, opts.tolerance, pass ? "PASS" : "FAIL");
  out << buf;
  return pass ? kExitOk : kExitFailure;
}

void add_scale_options(CLI::App* sub, Options& o) {
  auto* scale = sub->add_option("--scale", o.scale, "Bundled family: equal, log, sqrt, sine, power, power2");
  auto* desc = sub->add_option("--descriptor", o.descriptor, "JSON scale descriptor file");
  scale->excludes(desc);
  sub->add_option("--tones", o.tones, "Tones per octave T (default 12)")->check(CLI::PositiveNumber);
  sub->add_option("--param", o.params, "Family parameter, a=<value>");
}

void add_calibration_options(CLI::App* sub, Options& o) {
  sub->add_option("--vref", o.vref, "Volts per octave (default $FQ_DEFAULT_VREF or 1.0)");
  sub->add_option("--precision", o.precision, "Pipeline precision")
      ->check(CLI::IsMember({"single", "double"}));
}

void add_octave_options(CLI::App* sub, Options& o) {
  sub->add_option("--base-freq", o.base_freq, "Base frequency F_0 in Hz (default 261.6256)");
  sub->add_option("--octaves", o.octaves, "Number of octaves");
  sub->add_option("--first-octave", o.first_octave, "First octave number");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Functionally quantized musical scales", "fq"};
  app.set_version_flag("--version", kToolBanner);
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List bundled scale families");

  auto* validate_cmd = app.add_subcommand("validate", "Check a scale's f(0)=1, f(1)=2, monotone contract");
  add_scale_options(validate_cmd, o);

  auto* table = app.add_subcommand("table", "Frequency table as CSV");
  add_scale_options(table, o);
  add_octave_options(table, o);
  table->add_option("--out", o.out, "Output file (default stdout)");

  auto* quantize_cmd = app.add_subcommand("quantize", "Quantize a CSV control-voltage trace");
  add_scale_options(quantize_cmd, o);
  add_calibration_options(quantize_cmd, o);
  quantize_cmd->add_option("--input", o.input, "Input CSV (default stdin)");
  quantize_cmd->add_option("--out", o.out, "Output file (default stdout)");

  auto* scl = app.add_subcommand("scl", "Write a Scala .scl tuning file");
  add_scale_options(scl, o);
  scl->add_option("--description", o.description, "Description line");
  scl->add_flag("--no-banner", o.no_banner, "Omit the generator comment header");
  scl->add_option("--out", o.out, "Output file (default stdout)");

  auto* render = app.add_subcommand("render", "Render a scale or quantized trace to WAV");
  add_scale_options(render, o);
  add_calibration_options(render, o);
  add_octave_options(render, o);
  render->add_option("--note-duration", o.note_duration, "Seconds per note");
  render->add_option("--sample-rate", o.sample_rate, "Sample rate in Hz");
  render->add_option("--amplitude", o.amplitude, "Linear amplitude in (0, 1]");
  render->add_option("--trace", o.trace, "CSV trace to sonify instead of the scale");
  render->add_option("--out", o.out, "Output WAV file")->required();

  auto* verify = app.add_subcommand("verify", "Single vs extended precision sweep");
  add_scale_options(verify, o);
  verify->add_option("--vref", o.vref, "Volts per octave");
  verify->add_option("--range", o.range, "Sweep range lo:hi (default 0:10)");
  verify->add_option("--samples", o.samples, "Sample count (default 100000)");
  verify->add_option("--tolerance", o.tolerance, "Max allowed error in volts (default 5e-6)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (quantize_cmd->parsed()) return cmd_quantize(o, in, out, err);
    if (scl->parsed()) return cmd_scl(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "fq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "fq: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "fq: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fq::cli
