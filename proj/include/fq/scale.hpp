#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "fq/errors.hpp"

namespace fq {

/// Widest native floating type; used as the reference precision.
using Extended = long double;

namespace family {

/// f(x) = 2^x
struct EqualTemperament {
  friend bool operator==(const EqualTemperament&, const EqualTemperament&) = default;
};

/// f(x) = log2(4 + 12x) / 2, the logarithmic (non-Pythagorean) scale.
struct Log {
  friend bool operator==(const Log&, const Log&) = default;
};

/// f(x) = sqrt(4 + 12x) / 2
struct Sqrt {
  friend bool operator==(const Sqrt&, const Sqrt&) = default;
};

/// f(x) = 1 + sin(pi x / 2)
struct Sine {
  friend bool operator==(const Sine&, const Sine&) = default;
};

/// f(x) = (2^a + (4^a - 2^a) x)^(1/a) / 2, a > 0.
///
/// a = 2 gives Sqrt exactly; a -> 0 tends to EqualTemperament.
class Power {
 public:
  explicit Power(double a);
  double a() const noexcept { return a_; }
  friend bool operator==(const Power&, const Power&) = default;

 private:
  double a_;
};

/// f(x) = 1 + x^a, a > 0.
class Power2 {
 public:
  explicit Power2(double a);
  double a() const noexcept { return a_; }
  friend bool operator==(const Power2&, const Power2&) = default;

 private:
  double a_;
};

/// User scale given by tabulated octave fractions log2 f(n/T), n = 0..T.
/// Between step points log2 f is interpolated linearly.
class Custom {
 public:
  explicit Custom(std::vector<double> steps);
  const std::vector<double>& steps() const noexcept { return steps_; }
  friend bool operator==(const Custom&, const Custom&) = default;

 private:
  std::vector<double> steps_;
};

}  // namespace family

using ScaleFamily =
    std::variant<family::EqualTemperament, family::Log, family::Sqrt, family::Sine,
                 family::Power, family::Power2, family::Custom>;

/// Short lowercase identifier: "equal", "log", "sqrt", "sine", "power",
/// "power2", "custom".
std::string_view family_name(const ScaleFamily& family);

/// Human-readable f(x) for listings.
std::string_view family_formula(const ScaleFamily& family);

/// True for Power and Power2.
bool family_has_parameter(const ScaleFamily& family);

class ScaleSpec {
 public:
  /// Throws InvalidParameter if tones_per_octave < 1, or if the family is
  /// Custom and its table does not hold tones_per_octave + 1 entries.
  explicit ScaleSpec(ScaleFamily family, int tones_per_octave = 12);

  /// Custom scale whose T is implied by the table length.
  static ScaleSpec custom(std::vector<double> steps);

  const ScaleFamily& family() const noexcept { return family_; }
  int tones_per_octave() const noexcept { return tones_; }

  friend bool operator==(const ScaleSpec&, const ScaleSpec&) = default;

 private:
  ScaleFamily family_;
  int tones_;
};

std::string describe(const ScaleSpec& spec);

namespace detail {

// log2 of the Power family ratio, rewritten as log1p(expm1(c) x) / c with
// c = a ln 2. For c > 1 the equivalent 1 + ln(x + (1 - x) e^-c) / c is used,
// with the logarithm of the sum taken in log-add-exp form so neither e^c nor
// e^-c is formed.
template <std::floating_point Scalar>
Scalar power_octave_fraction(Scalar a, Scalar x) {
  const Scalar c = a * std::numbers::ln2_v<Scalar>;
  if (c <= Scalar(1)) {
    return std::log1p(std::expm1(c) * x) / c;
  }
  const Scalar lhs = std::log(x);
  const Scalar rhs = std::log1p(-x) - c;
  const Scalar hi = std::max(lhs, rhs);
  const Scalar lo = std::min(lhs, rhs);
  return Scalar(1) + (hi + std::log1p(std::exp(lo - hi))) / c;
}

template <std::floating_point Scalar>
Scalar custom_octave_fraction(const std::vector<double>& steps, Scalar x) {
  const auto tones = static_cast<int>(steps.size()) - 1;
  const Scalar pos = x * Scalar(tones);
  const int i = std::min(static_cast<int>(std::floor(pos)), tones - 1);
  const Scalar w = pos - Scalar(i);
  const auto lo = static_cast<Scalar>(steps[i]);
  const auto hi = static_cast<Scalar>(steps[i + 1]);
  return lo + w * (hi - lo);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <std::floating_point Scalar>
void require_unit_interval(Scalar x) {
  if (!(x >= Scalar(0) && x <= Scalar(1))) {
    throw DomainError("scale argument x must lie in [0, 1]");
  }
}

}  // namespace detail

/// Frequency ratio f(x) for x in [0, 1], evaluated in Scalar arithmetic.
template <std::floating_point Scalar>
Scalar eval_f(const ScaleSpec& spec, Scalar x) {
  detail::require_unit_interval(x);
  using std::numbers::pi_v;
  return std::visit(
      detail::Overloaded{
          [&](const family::EqualTemperament&) { return std::exp2(x); },
          [&](const family::Log&) { return std::log2(Scalar(4) + Scalar(12) * x) / Scalar(2); },
          [&](const family::Sqrt&) { return std::sqrt(Scalar(4) + Scalar(12) * x) / Scalar(2); },
          [&](const family::Sine&) {
            return Scalar(1) + std::sin(pi_v<Scalar> * x / Scalar(2));
          },
          [&](const family::Power& p) {
            return std::exp2(detail::power_octave_fraction(static_cast<Scalar>(p.a()), x));
          },
          [&](const family::Power2& p) {
            return Scalar(1) + std::pow(x, static_cast<Scalar>(p.a()));
          },
          [&](const family::Custom& c) {
            return std::exp2(detail::custom_octave_fraction(c.steps(), x));
          },
      },
      spec.family());
}

/// Octave fraction log2 f(x) for x in [0, 1].
template <std::floating_point Scalar>
Scalar octave_fraction(const ScaleSpec& spec, Scalar x) {
  detail::require_unit_interval(x);
  using std::numbers::pi_v;
  return std::visit(
      detail::Overloaded{
          [&](const family::EqualTemperament&) { return x; },
          [&](const family::Log&) {
            return std::log2(std::log2(Scalar(4) + Scalar(12) * x)) - Scalar(1);
          },
          [&](const family::Sqrt&) {
            return std::log2(Scalar(4) + Scalar(12) * x) / Scalar(2) - Scalar(1);
          },
          [&](const family::Sine&) {
            return std::log2(Scalar(1) + std::sin(pi_v<Scalar> * x / Scalar(2)));
          },
          [&](const family::Power& p) {
            return detail::power_octave_fraction(static_cast<Scalar>(p.a()), x);
          },
          [&](const family::Power2& p) {
            return std::log2(Scalar(1) + std::pow(x, static_cast<Scalar>(p.a())));
          },
          [&](const family::Custom& c) { return detail::custom_octave_fraction(c.steps(), x); },
      },
      spec.family());
}

/// Octave fraction log2 f(n/T) at step n, 0 <= n <= T.
///
/// Where the family is written in terms of 12x the product is formed as the
/// ratio 12n / T so that it stays an exact integer when T divides 12n. For the
/// Log family this evaluates log2(log2(4 + n)) - 1 at T = 12, which is the
/// term the LOG QNT formula uses.
template <std::floating_point Scalar>
Scalar step_octave_fraction(const ScaleSpec& spec, int n) {
  const int tones = spec.tones_per_octave();
  if (n < 0 || n > tones) {
    throw DomainError("step index out of range");
  }
  const Scalar x = Scalar(n) / Scalar(tones);
  const Scalar twelve_x = Scalar(12 * static_cast<long long>(n)) / Scalar(tones);
  return std::visit(
      detail::Overloaded{
          [&](const family::Log&) { return std::log2(std::log2(Scalar(4) + twelve_x)) - Scalar(1); },
          [&](const family::Sqrt&) { return std::log2(Scalar(4) + twelve_x) / Scalar(2) - Scalar(1); },
          [&](const family::Custom& c) { return static_cast<Scalar>(c.steps()[n]); },
          [&](const auto&) { return octave_fraction(spec, x); },
      },
      spec.family());
}

struct ValidationReport {
  std::vector<std::string> violations;
  /// max(|f(0) - 1|, |f(1) - 2|), extended precision.
  Extended max_boundary_residual = 0;

  bool valid() const noexcept { return violations.empty(); }
};

inline constexpr Extended kBoundaryTolerance = 1e-12L;
inline constexpr int kMonotonicityGrid = 1000;

/// Checks f(0) = 1, f(1) = 2 and strict monotonicity on x = k/1000.
/// Never throws for a constructed spec; violations are listed instead.
ValidationReport validate(const ScaleSpec& spec);

/// Throws ValidationError listing the violations if the spec is invalid.
void require_valid(const ScaleSpec& spec);

/// Per-step octave fractions log2 f(n/T), n = 0..T.
template <std::floating_point Scalar>
struct StepTable {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> entries;

  int tones_per_octave() const noexcept { return static_cast<int>(entries.size()) - 1; }
  Scalar operator[](int n) const { return entries(n); }
};

/// Computes the table in extended precision and narrows to Scalar.
template <std::floating_point Scalar = Extended>
StepTable<Scalar> build_step_table(const ScaleSpec& spec) {
  require_valid(spec);
  const int tones = spec.tones_per_octave();
  StepTable<Scalar> table;
  table.entries.resize(tones + 1);
  for (int n = 0; n <= tones; ++n) {
    table.entries(n) = static_cast<Scalar>(step_octave_fraction<Extended>(spec, n));
  }
  return table;
}

}  // namespace fq
