#pragma once

// Reference values evaluated once with mpmath at 40 significant digits
// (tests/golden/make_golden.py uses the same approach for the golden files).
// They do not depend on the library under test.

namespace fq::oracle {

// 1 + sin(pi/4)
inline constexpr long double kSineAtHalf = 1.707106781186547524400844L;
// log2(10) / 2
inline constexpr long double kLogAtHalf = 1.66096404744368117393516L;
// log2(log2(5) / 2)
inline constexpr long double kLogStep1 = 0.2153232957367876316854532L;
// -1 + log2 log2 10
inline constexpr long double kLogQuantizeHalf = 0.7320208456446193411391788L;
// 1.2 (-1 + log2 log2 10)
inline constexpr long double kLogQuantizeHalfBuchla = 0.8784250147735432093670146L;
// 440 sqrt(2)
inline constexpr long double k440Sqrt2 = 622.253967444161821472743L;
// 1200 (log2 log2 5 - 1)
inline constexpr long double kLogStep1Cents = 258.3879548841451580225438L;
// 440 log2(10) / 2
inline constexpr long double kLogStep6Hz440 = 730.8241808752197165314703L;

// log2 f(n/12) for the Log family, n = 0..12
inline constexpr long double kLogSteps[13] = {
    0.0L,
    0.2153232957367876316854532L,
    0.3701433519460012544096914L,
    0.4892114692381259621726516L,
    0.5849625007211561814537389L,
    0.6644487074538893833480293L,
    0.7320208456446193411391788L,
    0.7905350238931240508880534L,
    0.8419580281861559616222123L,
    0.887696714387222176503546L,
    0.9287890643643863507304122L,
    0.9660208563961769831213421L,
    1.0L,
};

}  // namespace fq::oracle
