#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fq/scale.hpp"
#include "oracle_constants.hpp"

namespace fq {
namespace {

using Ext = long double;

std::vector<ScaleSpec> bundled_specs() {
  std::vector<ScaleSpec> specs{ScaleSpec(family::EqualTemperament{}), ScaleSpec(family::Log{}),
                               ScaleSpec(family::Sqrt{}), ScaleSpec(family::Sine{})};
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    specs.emplace_back(family::Power(a));
    specs.emplace_back(family::Power2(a));
  }
  return specs;
}

// Power family exactly as written, (2^a + (4^a - 2^a) x)^(1/a) / 2.
Ext power_literal(Ext a, Ext x) {
  return std::pow(std::pow(2.0L, a) + (std::pow(4.0L, a) - std::pow(2.0L, a)) * x, 1.0L / a) / 2.0L;
}

TEST(EvalF, Examples) {
  EXPECT_EQ(eval_f<Ext>(ScaleSpec(family::Log{}), 0.0L), 1.0L);
  EXPECT_EQ(eval_f<Ext>(ScaleSpec(family::Sqrt{}), 1.0L), 2.0L);
  EXPECT_NEAR(eval_f<Ext>(ScaleSpec(family::Sine{}), 0.5L), oracle::kSineAtHalf, 1e-18L);
  EXPECT_NEAR(eval_f<Ext>(ScaleSpec(family::Log{}), 0.5L), oracle::kLogAtHalf, 1e-18L);
  EXPECT_NEAR(eval_f<double>(ScaleSpec(family::Log{}), 0.5), 1.6609640474436812, 1e-15);
}

TEST(EvalF, RejectsArgumentsOutsideUnitInterval) {
  const ScaleSpec spec(family::Log{});
  EXPECT_THROW(eval_f<double>(spec, -0.01), DomainError);
  EXPECT_THROW(eval_f<double>(spec, 1.01), DomainError);
  EXPECT_THROW(eval_f<double>(spec, std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(octave_fraction<float>(spec, 2.0f), DomainError);
}

TEST(EvalF, PowerMatchesLiteralFormula) {
  for (double a : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const ScaleSpec spec{family::Power(a)};
    for (int k = 0; k <= 100; ++k) {
      const Ext x = k / 100.0L;
      EXPECT_NEAR(eval_f<Ext>(spec, x), power_literal(a, x), 1e-14L) << "a=" << a << " x=" << x;
    }
  }
}

TEST(EvalF, PowerLargeParameterDoesNotOverflow) {
  const ScaleSpec spec(family::Power(300.0));
  EXPECT_EQ(eval_f<float>(spec, 1.0f), 2.0f);
  EXPECT_EQ(eval_f<float>(spec, 0.0f), 1.0f);
  // 2^a is negligible here, so f(x) ~ (x 4^a)^(1/a) / 2 = 2 x^(1/a)
  EXPECT_NEAR(eval_f<float>(spec, 0.5f), 2.0f * std::pow(0.5f, 1.0f / 300.0f), 1e-5f);
  EXPECT_EQ(step_octave_fraction<float>(spec, 0), 0.0f);
  EXPECT_EQ(step_octave_fraction<double>(spec, 12), 1.0);
}

TEST(ScaleSpecTest, ParameterDomain) {
  EXPECT_THROW(family::Power(0.0), InvalidParameter);
  EXPECT_THROW(family::Power(-1.0), InvalidParameter);
  EXPECT_THROW(family::Power2(0.0), InvalidParameter);
  EXPECT_THROW(family::Power2(std::numeric_limits<double>::infinity()), InvalidParameter);
  EXPECT_THROW(ScaleSpec(family::Log{}, 0), InvalidParameter);
  EXPECT_THROW(ScaleSpec(family::Custom({0.0, 0.5, 1.0}), 3), InvalidParameter);
  EXPECT_THROW(family::Custom({0.0}), InvalidParameter);
  EXPECT_EQ(ScaleSpec(family::Log{}).tones_per_octave(), 12);
}

TEST(ScaleSpecTest, Names) {
  EXPECT_EQ(family_name(family::Power2(1.0)), "power2");
  EXPECT_EQ(describe(ScaleSpec(family::Power(2.0), 19)), "power(a=2), T=19");
  EXPECT_TRUE(family_has_parameter(family::Power(1.0)));
  EXPECT_FALSE(family_has_parameter(family::Sine{}));
}

TEST(Validate, BundledFamiliesHoldContract) {
  for (const auto& spec : bundled_specs()) {
    const auto report = validate(spec);
    EXPECT_TRUE(report.valid()) << describe(spec);
    EXPECT_LE(report.max_boundary_residual, 1e-12L) << describe(spec);
  }
}

TEST(Validate, CustomViolationsAreReported) {
  const auto dip = validate(ScaleSpec::custom({0.0, 0.6, 0.5, 1.0}));
  EXPECT_FALSE(dip.valid());

  const auto short_octave = validate(ScaleSpec::custom({0.0, 0.5, 0.9}));
  EXPECT_FALSE(short_octave.valid());
  EXPECT_NEAR(short_octave.max_boundary_residual, 2.0L - std::exp2(0.9L), 1e-15L);

  EXPECT_TRUE(validate(ScaleSpec::custom({0.0, 0.25, 0.6, 1.0})).valid());
  EXPECT_THROW(build_step_table(ScaleSpec::custom({0.0, 0.6, 0.5, 1.0})), ValidationError);
}

TEST(Validate, StrictlyIncreasingOnGrid) {
  for (const auto& spec : bundled_specs()) {
    Ext prev = eval_f<Ext>(spec, 0.0L);
    for (int k = 1; k <= 1000; ++k) {
      const Ext fx = eval_f<Ext>(spec, k / 1000.0L);
      ASSERT_GT(fx, prev) << describe(spec) << " k=" << k;
      prev = fx;
    }
  }
}

TEST(StepTableTest, EqualTemperamentIsExact) {
  const auto table = build_step_table(ScaleSpec(family::EqualTemperament{}));
  ASSERT_EQ(table.tones_per_octave(), 12);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(table[n], static_cast<Ext>(n) / 12.0L);
  }
}

TEST(StepTableTest, LogMatchesOracle) {
  const auto table = build_step_table(ScaleSpec(family::Log{}));
  for (int n = 0; n <= 12; ++n) {
    EXPECT_NEAR(table[n], oracle::kLogSteps[n], 1e-18L) << n;
  }
  EXPECT_NEAR(table[1], oracle::kLogStep1, 1e-18L);
  EXPECT_EQ(table[12], 1.0L);
  EXPECT_EQ(table[0], 0.0L);
}

TEST(StepTableTest, NarrowingFollowsExtendedValues) {
  const ScaleSpec spec(family::Sine{}, 17);
  const auto wide = build_step_table<Ext>(spec);
  const auto narrow = build_step_table<float>(spec);
  for (int n = 0; n <= 17; ++n) {
    EXPECT_EQ(narrow[n], static_cast<float>(wide[n]));
  }
}

TEST(StepTableTest, InvariantsForManyToneCounts) {
  for (const auto& base : bundled_specs()) {
    for (int tones : {1, 5, 12, 19, 31, 53}) {
      const ScaleSpec spec(base.family(), tones);
      const auto table = build_step_table(spec);
      EXPECT_NEAR(table[0], 0.0L, 1e-12L);
      EXPECT_NEAR(table[tones], 1.0L, 1e-12L);
      for (int n = 1; n <= tones; ++n) {
        ASSERT_GT(table[n], table[n - 1]) << describe(spec);
      }
    }
  }
}

TEST(StepTableTest, StepIndexOutOfRange) {
  const ScaleSpec spec(family::Log{});
  EXPECT_THROW(step_octave_fraction<double>(spec, -1), DomainError);
  EXPECT_THROW(step_octave_fraction<double>(spec, 13), DomainError);
}

TEST(FamilyIdentities, PowerTwoIsSqrt) {
  for (int tones : {12, 7, 24}) {
    const ScaleSpec power(family::Power(2.0), tones);
    const ScaleSpec sqrt(family::Sqrt{}, tones);
    for (int n = 0; n <= tones; ++n) {
      const Ext x = static_cast<Ext>(n) / tones;
      EXPECT_NEAR(eval_f<Ext>(power, x), eval_f<Ext>(sqrt, x), 1e-12L);
    }
  }
}

TEST(FamilyIdentities, PowerTendsToEqualTemperament) {
  Ext previous = std::numeric_limits<Ext>::infinity();
  for (double a : {1.0, 0.1, 0.01, 0.001}) {
    const ScaleSpec spec{family::Power(a)};
    Ext deviation = 0;
    for (int n = 0; n <= 12; ++n) {
      // literal formula, independent of the library's log1p form
      const Ext x = n / 12.0L;
      deviation = std::max(deviation, std::fabs(std::log2(power_literal(a, x)) - x));
      EXPECT_NEAR(step_octave_fraction<Ext>(spec, n), std::log2(power_literal(a, x)), 1e-14L);
    }
    EXPECT_LT(deviation, previous) << "a=" << a;
    previous = deviation;
  }
  EXPECT_LE(previous, 1e-3L);
}

TEST(CustomFamily, InterpolatesOctaveFractions) {
  const ScaleSpec spec = ScaleSpec::custom({0.0, 0.25, 0.75, 1.0});
  EXPECT_EQ(spec.tones_per_octave(), 3);
  EXPECT_NEAR(octave_fraction<Ext>(spec, 0.5L), 0.5L, 1e-18L);
  EXPECT_NEAR(eval_f<Ext>(spec, 1.0L / 3.0L), std::exp2(0.25L), 1e-18L);
  EXPECT_EQ(step_octave_fraction<double>(spec, 2), 0.75);
}

}  // namespace
}  // namespace fq
