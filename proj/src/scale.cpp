#include "fq/scale.hpp"

#include <algorithm>
#include <sstream>

namespace fq {

namespace family {

Power::Power(double a) : a_(a) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw InvalidParameter("power: parameter a must be finite and > 0");
  }
}

Power2::Power2(double a) : a_(a) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw InvalidParameter("power2: parameter a must be finite and > 0");
  }
}

Custom::Custom(std::vector<double> steps) : steps_(std::move(steps)) {
  if (steps_.size() < 2) {
    throw InvalidParameter("custom: step table needs at least two entries");
  }
  if (!std::all_of(steps_.begin(), steps_.end(), [](double v) { return std::isfinite(v); })) {
    throw InvalidParameter("custom: step table entries must be finite");
  }
}

}  // namespace family

std::string_view family_name(const ScaleFamily& family) {
  return std::visit(detail::Overloaded{
                        [](const family::EqualTemperament&) { return "equal"; },
                        [](const family::Log&) { return "log"; },
                        [](const family::Sqrt&) { return "sqrt"; },
                        [](const family::Sine&) { return "sine"; },
                        [](const family::Power&) { return "power"; },
                        [](const family::Power2&) { return "power2"; },
                        [](const family::Custom&) { return "custom"; },
                    },
                    family);
}

std::string_view family_formula(const ScaleFamily& family) {
  return std::visit(detail::Overloaded{
                        [](const family::EqualTemperament&) { return "f(x) = 2^x"; },
                        [](const family::Log&) { return "f(x) = log2(4 + 12x) / 2"; },
                        [](const family::Sqrt&) { return "f(x) = sqrt(4 + 12x) / 2"; },
                        [](const family::Sine&) { return "f(x) = 1 + sin(pi x / 2)"; },
                        [](const family::Power&) {
                          return "f(x) = (2^a + (4^a - 2^a) x)^(1/a) / 2, a > 0";
                        },
                        [](const family::Power2&) { return "f(x) = 1 + x^a, a > 0"; },
                        [](const family::Custom&) {
                          return "log2 f(n/T) tabulated, linear in between";
                        },
                    },
                    family);
}

bool family_has_parameter(const ScaleFamily& family) {
  return std::holds_alternative<family::Power>(family) ||
         std::holds_alternative<family::Power2>(family);
}

ScaleSpec::ScaleSpec(ScaleFamily family, int tones_per_octave)
    : family_(std::move(family)), tones_(tones_per_octave) {
  if (tones_ < 1) {
    throw InvalidParameter("tones_per_octave must be >= 1");
  }
  if (const auto* custom = std::get_if<family::Custom>(&family_)) {
    if (custom->steps().size() != static_cast<std::size_t>(tones_) + 1) {
      throw InvalidParameter("custom: step table must hold tones_per_octave + 1 entries");
    }
  }
}

ScaleSpec ScaleSpec::custom(std::vector<double> steps) {
  family::Custom c(std::move(steps));
  const auto tones = static_cast<int>(c.steps().size()) - 1;
  return ScaleSpec(std::move(c), tones);
}

std::string describe(const ScaleSpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family());
  std::visit(detail::Overloaded{
                 [&](const family::Power& p) { os << "(a=" << p.a() << ")"; },
                 [&](const family::Power2& p) { os << "(a=" << p.a() << ")"; },
                 [](const auto&) {},
             },
             spec.family());
  os << ", T=" << spec.tones_per_octave();
  return os.str();
}

ValidationReport validate(const ScaleSpec& spec) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  const Extended f0 = eval_f<Extended>(spec, 0.0L);
  const Extended f1 = eval_f<Extended>(spec, 1.0L);
  const Extended r0 = std::fabs(f0 - 1.0L);
  const Extended r1 = std::fabs(f1 - 2.0L);
  report.max_boundary_residual = std::max(r0, r1);
  if (!(r0 <= kBoundaryTolerance)) {
    fail("f(0) != 1 (residual " + std::to_string(static_cast<double>(r0)) + ")");
  }
  if (!(r1 <= kBoundaryTolerance)) {
    fail("f(1) != 2 (residual " + std::to_string(static_cast<double>(r1)) + ")");
  }

  Extended prev = f0;
  for (int k = 1; k <= kMonotonicityGrid; ++k) {
    const Extended x = static_cast<Extended>(k) / kMonotonicityGrid;
    const Extended fx = eval_f<Extended>(spec, x);
    if (!(fx > prev)) {
      fail("f not strictly increasing at x = " + std::to_string(static_cast<double>(x)));
      break;
    }
    prev = fx;
  }

  if (const auto* custom = std::get_if<family::Custom>(&spec.family())) {
    const auto& s = custom->steps();
    for (std::size_t n = 1; n < s.size(); ++n) {
      if (!(s[n] > s[n - 1])) {
        fail("custom steps not strictly increasing at n = " + std::to_string(n));
        break;
      }
    }
    if (s.front() < 0.0 || s.back() > 1.0) {
      fail("custom steps must lie in [0, 1]");
    }
  }
  return report;
}

void require_valid(const ScaleSpec& spec) {
  const auto report = validate(spec);
  if (report.valid()) {
    return;
  }
  std::string msg = "invalid scale " + describe(spec) + ":";
  for (const auto& v : report.violations) {
    msg += " " + v + ";";
  }
  throw ValidationError(msg);
}

}  // namespace fq
