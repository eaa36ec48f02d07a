#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "ihull/elementary.hpp"
#include "ihull/enclosures.hpp"
#include "ihull/format.hpp"
#include "ihull/parse.hpp"

using namespace ihull;

namespace {

// pi to 50 decimals, as a reference independent of the library's Machin series.
const char* const kPiDigits = "314159265358979323846264338327950288419716939937510";

Interval reference_pi()
{
    const Integer digits(kPiDigits);
    const Integer scale = boost::multiprecision::pow(Integer(10), 50);
    return Interval(Rational(digits, scale), Rational(digits + 1, scale));
}

// Interval Newton for sqrt(c): X <- (m - (m^2 - c) / (2X)) n X.
Interval newton_sqrt(const Rational& c, int steps)
{
    Interval x(Rational(0), std::max(Rational(1), c));
    x = Interval(Rational(1, 1000000), x.hi());
    for (int i = 0; i < steps; ++i) {
        const Rational m = x.midpoint();
        const Interval n = Interval(m) - Interval(Rational(m * m - c)) / (Interval(2) * x);
        x = *intersect(x, n);
        x = x.rounded_out(200);
    }
    return x;
}

// Plain Taylor series of cos/sin at 0 with the Lagrange remainder, no argument reduction.
Interval taylor_reference(const Rational& x, bool is_cos, int terms)
{
    Rational sum = 0;
    Rational power = is_cos ? Rational(1) : x;
    Rational factorial = 1;
    int k = is_cos ? 0 : 1;
    for (int i = 0; i < terms; ++i) {
        sum += (i % 2 == 0 ? power : Rational(-power)) / factorial;
        power *= x * x;
        factorial *= Rational((k + 1) * (k + 2));
        k += 2;
    }
    const Rational bound = abs_of(power) / factorial;
    return Interval(sum - bound, sum + bound);
}

bool overlaps(const Interval& a, const Interval& b) { return intersect(a, b).has_value(); }

} // namespace

TEST(Pi, EnclosesReferenceDigits)
{
    for (unsigned p : {10U, 64U, 128U, 160U}) {
        const Interval pi = pi_enclosure(p);
        EXPECT_TRUE(overlaps(pi, reference_pi())) << p;
        EXPECT_LE(pi.width(), Rational(Integer(2), pow2(p))) << p;
    }
    const Interval coarse = pi_enclosure(10);
    EXPECT_TRUE(Interval(Rational(3140, 1000), Rational(3143, 1000)).contains(coarse));
}

TEST(Pi, EnclosuresAreNested)
{
    Interval prev = pi_enclosure(8);
    for (unsigned p = 9; p < 100; p += 7) {
        const Interval next = pi_enclosure(p);
        EXPECT_TRUE(prev.contains(next)) << p;
        prev = next;
    }
}

TEST(SqrtInterval, ExactOnPerfectSquares)
{
    EXPECT_EQ(sqrt_interval(Interval(Rational(9, 4)), 64), Interval(Rational(3, 2)));
    EXPECT_EQ(sqrt_interval(Interval(0), 64), Interval(0));
    EXPECT_THROW(sqrt_interval(Interval(Rational(-1), Rational(1)), 64), NotPositive);
}

TEST(SqrtInterval, TwoToSixtyFourBits)
{
    const Interval r = sqrt_interval(Interval(2), 64);
    EXPECT_LE(r.width(), Rational(Integer(1), pow2(64)));
    EXPECT_LE(r.lo() * r.lo(), 2);
    EXPECT_GE(r.hi() * r.hi(), 2);
}

TEST(SqrtInterval, AgreesWithIntervalNewton)
{
    gen::Source g(31);
    for (int i = 0; i < 60; ++i) {
        const Rational c = abs_of(g.nonzero_rational(1, 50, 9));
        const Interval lib = sqrt_interval(Interval(c), 96);
        const Interval ref = newton_sqrt(c, 12);
        EXPECT_TRUE(overlaps(lib, ref)) << to_string(c);
        EXPECT_LE(lib.lo() * lib.lo(), c);
        EXPECT_GE(lib.hi() * lib.hi(), c);
    }
}

TEST(SqrtInterval, MonotoneInPrecision)
{
    gen::Source g(32);
    for (int i = 0; i < 30; ++i) {
        const Rational c = abs_of(g.nonzero_rational(1, 20, 7));
        Interval prev = sqrt_interval(Interval(c), 16);
        for (unsigned p = 24; p <= 128; p += 8) {
            const Interval next = sqrt_interval(Interval(c), p);
            EXPECT_TRUE(prev.contains(next));
            prev = next;
        }
    }
}

TEST(CosSin, CosOfOne)
{
    const Interval c = cos_interval(Interval(1), 64);
    const Rational scale(Integer(10000000000000000LL));
    EXPECT_TRUE(Interval(Rational(5403023058681397LL) / scale, Rational(5403023058681398LL) / scale).contains(c));
    EXPECT_LE(c.width(), Rational(Integer(1), pow2(63)));
    EXPECT_EQ(to_decimal(c).substr(0, 9), "[0.540302");
}

TEST(CosSin, ExactAtZero)
{
    EXPECT_EQ(cos_interval(Interval(0), 64), Interval(1));
    EXPECT_EQ(sin_interval(Interval(0), 64), Interval(0));
}

TEST(CosSin, AgreeWithPlainTaylorReference)
{
    gen::Source g(41);
    for (int i = 0; i < 80; ++i) {
        const Rational x = g.rational(-8, 8, 16);
        const Interval c = cos_interval(Interval(x), 80);
        const Interval s = sin_interval(Interval(x), 80);
        EXPECT_TRUE(overlaps(c, taylor_reference(x, true, 60))) << to_string(x);
        EXPECT_TRUE(overlaps(s, taylor_reference(x, false, 60))) << to_string(x);
        EXPECT_TRUE((c.square() + s.square()).contains(Rational(1))) << to_string(x);
        EXPECT_NEAR(to_double(c.midpoint()), std::cos(to_double(x)), 1e-12);
    }
}

TEST(CosSin, LargeArgumentsUseReduction)
{
    const Interval c = cos_interval(Interval(1000), 64);
    EXPECT_NEAR(to_double(c.midpoint()), std::cos(1000.0), 1e-12);
    EXPECT_LE(c.width(), Rational(Integer(1), pow2(60)));
}

TEST(CosSin, RangeOverIntervalIncludesExtrema)
{
    // [3, 3.3] contains pi, where cos attains -1.
    const Interval c = cos_interval(Interval(Rational(3), Rational(33, 10)), 64);
    EXPECT_TRUE(c.contains(Rational(-1)));
    // [1, 2] contains pi/2, where sin attains 1.
    const Interval s = sin_interval(Interval(Rational(1), Rational(2)), 64);
    EXPECT_TRUE(s.contains(Rational(1)));
    EXPECT_GT(s.lo(), Rational(8, 10));
    // Wide intervals cover the full range.
    EXPECT_EQ(cos_interval(Interval(Rational(0), Rational(100)), 64), Interval(Rational(-1), Rational(1)));
}

TEST(CosSin, NestedInPrecision)
{
    Interval prev = cos_interval(Interval(Rational(7, 3)), 16);
    for (unsigned p = 20; p <= 120; p += 10) {
        const Interval next = cos_interval(Interval(Rational(7, 3)), p);
        EXPECT_TRUE(prev.contains(next)) << p;
        prev = next;
    }
}

TEST(ElementarySeries, SqrtOfPerfectSquareSeries)
{
    const LeviCivita r = sqrt(parse_number("1 + 2t + t^2"), Rational(4), 64);
    EXPECT_TRUE(identical(r, parse_number("1 + t + O(t^4)"))) << to_string(r);
    EXPECT_TRUE(identical(sqrt(parse_number("4t^2"), Rational(8), 64), parse_number("2t")));
}

TEST(ElementarySeries, SqrtRejectsNonPositive)
{
    EXPECT_THROW(sqrt(parse_number("-1 + t"), Rational(4), 64), NotPositive);
    EXPECT_THROW(sqrt(LeviCivita(), Rational(4), 64), NotPositive);
    EXPECT_THROW(sqrt_nonneg(parse_number("-t"), Rational(4), 64), NotPositive);
}

TEST(ElementarySeries, SqrtNonnegEdgeCases)
{
    EXPECT_TRUE(sqrt_nonneg(LeviCivita(), Rational(4), 64).is_exact_zero());
    EXPECT_TRUE(identical(sqrt_nonneg(parse_number("O(t^4)"), Rational(4), 64), parse_number("O(t^2)")));
    // Leading coefficient touching zero: the root is at most sqrt(hi) t^(e/2).
    const LeviCivita touching = LeviCivita(Interval(Rational(-1, 100), Rational(4))) + parse_number("t");
    const LeviCivita r = sqrt_nonneg(touching, Rational(4), 64);
    ASSERT_EQ(r.terms().size(), 1U);
    EXPECT_EQ(r.terms().front().coeff, Interval(Rational(0), Rational(2)));
    EXPECT_EQ(*r.truncation(), Rational(1, 2));
}

TEST(ElementarySeries, CosOfInfinitesimal)
{
    const LeviCivita c = cos_enclosure(LeviCivita::t(), Rational(4), 64);
    EXPECT_TRUE(identical(c, parse_number("1 - 1/2t^2 + O(t^4)"))) << to_string(c);
}

TEST(ElementarySeries, CosRejectsInfiniteArgument)
{
    EXPECT_THROW(cos_enclosure(LeviCivita::t(-1), Rational(4), 64), NotFinite);
}

TEST(ElementarySeriesProperty, SqrtSquaredEnclosesInput)
{
    gen::Source g(51);
    for (int i = 0; i < 100; ++i) {
        LeviCivita a = LeviCivita::monomial(Interval(abs_of(g.nonzero_rational(1, 9, 5))), g.half_exponent(-2, 2));
        a += LeviCivita::monomial(Interval(g.nonzero_rational(-3, 3, 4)), a.terms().front().exponent + g.half_exponent(1, 3));
        const Rational order(6);
        const LeviCivita r = sqrt(a, order, 96);
        const LeviCivita diff = r * r - a;
        // Only interval slack at the leading exponent and the truncation remain.
        for (const auto& term : diff.terms()) {
            EXPECT_TRUE(term.coeff.contains_zero()) << to_string(a) << " : " << to_string(diff);
        }
    }
}

TEST(ElementarySeriesProperty, PythagoreanIdentityForSeriesArguments)
{
    gen::Source g(52);
    for (int i = 0; i < 60; ++i) {
        const LeviCivita x = LeviCivita(g.rational(-3, 3, 5)) + LeviCivita::monomial(Interval(g.nonzero_rational()), Rational(1));
        const LeviCivita c = cos_enclosure(x, Rational(5), 96);
        const LeviCivita s = sin_enclosure(x, Rational(5), 96);
        const LeviCivita one = c * c + s * s - LeviCivita(1);
        for (const auto& term : one.terms()) {
            EXPECT_TRUE(term.coeff.contains_zero()) << to_string(x) << " : " << to_string(one);
        }
    }
}
