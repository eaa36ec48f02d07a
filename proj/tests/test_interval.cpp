#include <gtest/gtest.h>

#include "generators.hpp"
#include "ihull/interval.hpp"

using ihull::Interval;
using ihull::Rational;

TEST(Interval, RejectsReversedEndpoints)
{
    EXPECT_THROW(Interval(Rational(2), Rational(1)), ihull::Error);
}

TEST(Interval, ExactArithmeticStaysExact)
{
    const Interval a(Rational(3, 2));
    const Interval b(Rational(-2, 3));
    EXPECT_TRUE((a * b).is_exact());
    EXPECT_EQ(a * b, Interval(Rational(-1)));
    EXPECT_EQ(a + b, Interval(Rational(5, 6)));
    EXPECT_EQ(a / b, Interval(Rational(-9, 4)));
}

TEST(Interval, SignDecisions)
{
    EXPECT_EQ(Interval(Rational(1), Rational(2)).sign(), 1);
    EXPECT_EQ(Interval(Rational(-2), Rational(-1)).sign(), -1);
    EXPECT_EQ(Interval(0).sign(), 0);
    EXPECT_FALSE(Interval(Rational(-1), Rational(1)).sign().has_value());
    EXPECT_TRUE(Interval(Rational(-1), Rational(1)).straddles_zero());
    EXPECT_FALSE(Interval(0).straddles_zero());
}

TEST(Interval, ReciprocalOfZeroStraddlerThrows)
{
    EXPECT_THROW(Interval(Rational(-1), Rational(1)).reciprocal(), ihull::ZeroOrUnknownLeading);
    EXPECT_THROW(Interval(0).reciprocal(), ihull::ZeroOrUnknownLeading);
}

TEST(Interval, SquareIsTighterThanProduct)
{
    const Interval x(Rational(-1), Rational(2));
    EXPECT_EQ(x.square(), Interval(Rational(0), Rational(4)));
    EXPECT_EQ(x * x, Interval(Rational(-2), Rational(4)));
}

TEST(Interval, RoundedOutContainsOriginal)
{
    const Interval x(Rational(1, 3), Rational(2, 3));
    const Interval r = x.rounded_out(10);
    EXPECT_TRUE(r.contains(x));
    EXPECT_LE(r.width() - x.width(), Rational(2, 1024));
    EXPECT_EQ(Interval(Rational(1, 3)).rounded_out(10), Interval(Rational(1, 3)));
}

TEST(Interval, IntersectAndHull)
{
    const Interval a(Rational(0), Rational(2));
    const Interval b(Rational(1), Rational(3));
    EXPECT_EQ(*ihull::intersect(a, b), Interval(Rational(1), Rational(2)));
    EXPECT_FALSE(ihull::intersect(a, Interval(Rational(5), Rational(6))).has_value());
    EXPECT_EQ(ihull::hull_of(a, b), Interval(Rational(0), Rational(3)));
}

// Inclusion property: f(x, y) for sample points x in X, y in Y lies in F(X, Y).
TEST(IntervalProperty, OperationsContainPointwiseResults)
{
    gen::Source g(11);
    for (int i = 0; i < 300; ++i) {
        const Rational x0 = g.rational();
        const Rational y0 = g.nonzero_rational();
        const Interval x(x0 - Rational(g.integer(0, 4), 7), x0 + Rational(g.integer(0, 4), 7));
        const Interval y = y0 > 0 ? Interval(y0, y0 + Rational(g.integer(0, 4), 9))
                                  : Interval(y0 - Rational(g.integer(0, 4), 9), y0);
        for (int k = 0; k < 5; ++k) {
            const Rational xs = x.lo() + x.width() * Rational(k, 4);
            const Rational ys = y.lo() + y.width() * Rational(4 - k, 4);
            EXPECT_TRUE((x + y).contains(Rational(xs + ys)));
            EXPECT_TRUE((x - y).contains(Rational(xs - ys)));
            EXPECT_TRUE((x * y).contains(Rational(xs * ys)));
            EXPECT_TRUE((x / y).contains(Rational(xs / ys)));
            EXPECT_TRUE(x.square().contains(Rational(xs * xs)));
        }
    }
}
