#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "ihull/cover.hpp"
#include "ihull/grid_oracle.hpp"
#include "ihull/parse.hpp"

using namespace ihull;
using cover::CoverPoint;

namespace {

LeviCivita num(const char* text) { return parse_number(text); }

CoverPoint pt(const char* r, const char* zeta) { return CoverPoint(num(r), num(zeta)); }

double approx(const LeviCivita& x) { return to_double(standard_part(x).midpoint()); }

} // namespace

TEST(CoverPoint, RequiresPositiveRadius)
{
    EXPECT_THROW(pt("0", "0"), InvalidPoint);
    EXPECT_THROW(pt("-t", "0"), InvalidPoint);
    EXPECT_THROW(pt("O(1)", "0"), InvalidPoint);
    EXPECT_NO_THROW(pt("t^3", "t^-5"));
}

TEST(CoverDistance, Examples)
{
    EXPECT_TRUE(identical(cover::cover_distance(pt("1", "0"), pt("2", "0")), LeviCivita(1)));
    EXPECT_TRUE(identical(cover::cover_distance(pt("1", "0"), pt("1", "4")), LeviCivita(2)));
    EXPECT_TRUE(identical(cover::cover_distance(pt("1", "t^-1"), pt("t", "0")), num("1 + t")));
    const LeviCivita d = cover::cover_distance(pt("1", "0"), pt("1", "1"));
    EXPECT_NEAR(approx(d), 2.0 * std::sin(0.5), 1e-15);
    EXPECT_NEAR(approx(d), 0.958851, 1e-6);
}

TEST(CoverDistance, BranchIndeterminateAtPiEnclosure)
{
    EXPECT_THROW(cover::cover_distance(pt("1", "0"), pt("1", "pi")), BranchIndeterminate);
    EXPECT_THROW(cover::cover_distance(pt("1", "0"), pt("1", "O(1)")), BranchIndeterminate);
    // Infinitesimally below pi is still decided: the chord branch.
    EXPECT_EQ(cover::distance_branch(pt("1", "0"), pt("1", "3"), 64), cover::Branch::Chord);
    EXPECT_EQ(cover::distance_branch(pt("1", "0"), pt("1", "t^-1"), 64), cover::Branch::ThroughOrigin);
}

TEST(CoverDistance, ThreeLegPathBound)
{
    const LeviCivita eps = LeviCivita::t();
    EXPECT_TRUE(identical(cover::origin_path_upper_bound(pt("1", "t^-1"), eps), num("1 + 2t - 2t^2")));
    EXPECT_TRUE(identical(cover::origin_path_upper_bound(pt("1", "t^-2"), eps), num("1 + t + t^2 - 2t^4")));
    EXPECT_THROW(cover::origin_path_upper_bound(pt("2", "t^-1"), eps), PreconditionViolated);
    EXPECT_THROW(cover::origin_path_upper_bound(pt("1", "5"), eps), PreconditionViolated);
    EXPECT_THROW(cover::origin_path_upper_bound(pt("1", "t^-1"), num("1")), PreconditionViolated);
}

TEST(CoverDistance, SandwichGivesStandardPartOne)
{
    const LeviCivita eps = LeviCivita::t();
    const LeviCivita d = cover::cover_distance(pt("1", "t^-1"), CoverPoint(eps, LeviCivita(0)));
    const LeviCivita upper = cover::origin_path_upper_bound(pt("1", "t^-1"), eps);
    EXPECT_NE(compare(d, upper), Ordering::GT);
    EXPECT_NE(compare(LeviCivita(1) - eps, d), Ordering::GT);
    EXPECT_EQ(standard_part(d), Interval(1));
    EXPECT_EQ(standard_part(upper), Interval(1));
}

TEST(Certificate, RadiusHalfForUnitRadius)
{
    const auto cert = cover::separation_certificate(pt("1", "t^-1"));
    EXPECT_EQ(cert.r_lo, Rational(1, 2));
    EXPECT_EQ(cert.r_hi, 2);
    EXPECT_EQ(cert.ball_radius, Rational(1, 2));
    EXPECT_EQ(cover::inapproachability_lower_bound(pt("1", "t^-1"), pt("1", "0")), Rational(1, 2));
    EXPECT_EQ(cover::inapproachability_lower_bound(pt("1", "t^-1"), pt("7", "3")), Rational(1, 2));
    EXPECT_EQ(cover::separation_certificate(pt("4 + t", "-t^-2")).ball_radius, 2);
    EXPECT_THROW(cover::separation_certificate(pt("1", "5")), NotApplicable);
    EXPECT_THROW(cover::inapproachability_lower_bound(pt("1", "t^-1"), pt("1", "t^-1")), NotApplicable);
}

TEST(Certificate, SoundAgainstGridOracle)
{
    // Standard shadow of the certificate: from (1, Z), points outside
    // [1/2, 2] x [Z - 1, Z + 1] are at least 1/2 away.
    const grid::StandardPoint center{1.0, 50.0};
    const grid::StandardPoint q{1.0, 0.0};
    const double g = grid::oracle_distance(grid::fit_window(center, q), center, q);
    EXPECT_GT(g, 0.5);
    EXPECT_NEAR(g, 2.0, 0.05);
}

TEST(Classify, Table)
{
    const auto near = cover::classify_point(pt("1 + t", "5"));
    EXPECT_EQ(near.kind, cover::PointKind::Nearstandard);
    ASSERT_TRUE(near.standard_point.has_value());
    EXPECT_TRUE(identical(near.standard_point->r(), LeviCivita(1)));
    EXPECT_TRUE(identical(near.standard_point->zeta(), LeviCivita(5)));
    EXPECT_EQ(cover::classify_point(pt("1", "t^-1")).kind, cover::PointKind::FiniteInapproachable);
    const auto halo = cover::classify_point(pt("t", "t^-2"));
    EXPECT_EQ(halo.kind, cover::PointKind::OriginHalo);
    ASSERT_TRUE(halo.origin_bound.has_value());
    EXPECT_EQ(classify_magnitude(*halo.origin_bound), MagnitudeClass::Infinitesimal);
    EXPECT_EQ(cover::classify_point(pt("t^-1", "0")).kind, cover::PointKind::OutsideGalaxy);
    EXPECT_EQ(cover::classify_point(pt("[1, 2]", "O(1)")).kind, cover::PointKind::Unknown);
}

TEST(Classify, OriginHaloBoundDominatesDistance)
{
    gen::Source g(5);
    for (int i = 0; i < 40; ++i) {
        const LeviCivita r = LeviCivita::monomial(Interval(abs_of(g.nonzero_rational(1, 4, 3))), g.half_exponent(1, 4));
        const LeviCivita zeta = g.coin() ? LeviCivita(g.rational(-2, 2, 3))
                                         : LeviCivita::monomial(Interval(g.nonzero_rational()), g.half_exponent(-4, -1));
        const CoverPoint a(r, zeta);
        const auto c = cover::classify_point(a);
        ASSERT_EQ(c.kind, cover::PointKind::OriginHalo) << cover::to_string(a);
        try {
            const LeviCivita d = cover::cover_distance(a, CoverPoint(LeviCivita::t(), LeviCivita(0)));
            EXPECT_NE(greater_than(d, *c.origin_bound), Tri::True) << cover::to_string(a);
        } catch (const BranchIndeterminate&) {
        }
    }
}

TEST(Completion, Distances)
{
    const auto origin = cover::CompletionPoint::origin();
    EXPECT_TRUE(identical(cover::completion_distance(origin, pt("1", "0")), LeviCivita(1)));
    EXPECT_TRUE(identical(cover::completion_distance(origin, pt("1", "t^-1")), LeviCivita(1)));
    EXPECT_TRUE(cover::completion_distance(origin, origin).is_exact_zero());
}

TEST(Net, SeparatedNet)
{
    const auto two = cover::separated_net(2);
    EXPECT_TRUE(identical(cover::cover_distance(two[0], two[1]), LeviCivita(2)));
    const auto five = cover::separated_net(5);
    for (std::size_t i = 0; i < five.size(); ++i) {
        EXPECT_TRUE(identical(cover::completion_distance(cover::CompletionPoint::origin(), five[i]), LeviCivita(1)));
        for (std::size_t j = i + 1; j < five.size(); ++j) {
            EXPECT_TRUE(identical(cover::cover_distance(five[i], five[j]), LeviCivita(2)));
        }
    }
    EXPECT_THROW(cover::separated_net(1), PreconditionViolated);
    // Negative control: spacing below pi.
    EXPECT_EQ(greater_than(LeviCivita(2), cover::cover_distance(pt("1", "0"), pt("1", "1"))), Tri::True);
}

TEST(CoveringMap, ReducesModuloTwoPi)
{
    const auto a = cover::covering_map(pt("1", "0"));
    EXPECT_EQ(a.theta, Interval(0));
    const auto b = cover::covering_map(pt("1", "4"));
    EXPECT_EQ(b.theta, Interval(4));
    const auto c = cover::covering_map(pt("2", "7"));
    EXPECT_EQ(c.r, 2);
    EXPECT_NEAR(to_double(c.theta.midpoint()), 7.0 - 2.0 * M_PI, 1e-15);
    EXPECT_LE(c.theta.width(), Rational(1, 1000000000));
    const auto d = cover::covering_map(pt("1", "-1"));
    EXPECT_NEAR(to_double(d.theta.midpoint()), 2.0 * M_PI - 1.0, 1e-15);
    EXPECT_THROW(cover::covering_map(pt("1 + t", "0")), NotStandard);
}

TEST(CoveringMap, LocalIsometry)
{
    gen::Source g(9);
    for (int i = 0; i < 30; ++i) {
        const Rational r1 = abs_of(g.nonzero_rational(1, 3, 4));
        const Rational r2 = abs_of(g.nonzero_rational(1, 3, 4));
        const Rational z1 = g.rational(-3, 3, 4);
        const Rational z2 = z1 + g.rational(-3, 3, 8);
        const double d = approx(cover::cover_distance(CoverPoint(r1, z1), CoverPoint(r2, z2)));
        const auto p = cover::covering_map(CoverPoint(r1, z1));
        const auto q = cover::covering_map(CoverPoint(r2, z2));
        const double t1 = to_double(p.theta.midpoint());
        const double t2 = to_double(q.theta.midpoint());
        const double planar = std::hypot(to_double(p.r) * std::cos(t1) - to_double(q.r) * std::cos(t2),
                                         to_double(p.r) * std::sin(t1) - to_double(q.r) * std::sin(t2));
        EXPECT_NEAR(d, planar, 1e-12);
    }
}

TEST(CoverProperty, MetricAxiomsOnStandardPoints)
{
    gen::Source g(21);
    for (int i = 0; i < 60; ++i) {
        const CoverPoint a(abs_of(g.nonzero_rational(1, 3, 4)), g.rational(-4, 4, 4));
        const CoverPoint b(abs_of(g.nonzero_rational(1, 3, 4)), g.rational(-4, 4, 4));
        const CoverPoint c(abs_of(g.nonzero_rational(1, 3, 4)), g.rational(-4, 4, 4));
        try {
            const LeviCivita ab = cover::cover_distance(a, b);
            const LeviCivita ba = cover::cover_distance(b, a);
            const LeviCivita bc = cover::cover_distance(b, c);
            const LeviCivita ac = cover::cover_distance(a, c);
            EXPECT_TRUE(identical(ab, ba));
            EXPECT_NE(greater_than(ac, ab + bc), Tri::True);
            EXPECT_NE(greater_than(abs(a.r() - b.r()), ab), Tri::True);
            EXPECT_TRUE(cover::cover_distance(a, a).is_exact_zero() || standard_part(cover::cover_distance(a, a)).contains(Rational(0)));
        } catch (const BranchIndeterminate&) {
        }
    }
}

TEST(CoverProperty, BranchContinuityNearPi)
{
    for (const char* r_text : {"1", "1/2", "2", "7/4"}) {
        const Rational r = parse_number(r_text).terms().front().coeff.lo();
        const Interval pi = pi_enclosure(64);
        const Rational delta(1, 1000);
        const CoverPoint a(r, Rational(0));
        const LeviCivita below = cover::cover_distance(a, CoverPoint(r, Rational(pi.lo() - delta)));
        const LeviCivita above = cover::cover_distance(a, CoverPoint(r, Rational(pi.hi() + delta)));
        EXPECT_EQ(cover::distance_branch(a, CoverPoint(r, Rational(pi.lo() - delta)), 64), cover::Branch::Chord);
        EXPECT_EQ(cover::distance_branch(a, CoverPoint(r, Rational(pi.hi() + delta)), 64), cover::Branch::ThroughOrigin);
        const Interval gap = standard_part(above) - standard_part(below);
        EXPECT_LT(gap.magnitude(), Rational(r / 100)) << r_text;
    }
}

TEST(CoverProperty, DistanceIsWellDefinedOnHalos)
{
    gen::Source g(33);
    const CoverPoint a = pt("1", "t^-1");
    const CoverPoint b = pt("3/2", "t^-1 + 1");
    const Interval base = standard_part(cover::cover_distance(a, b));
    for (int i = 0; i < 50; ++i) {
        const LeviCivita dr = LeviCivita::monomial(Interval(g.nonzero_rational(-2, 2, 4)), g.half_exponent(1, 4));
        const LeviCivita dz = LeviCivita::monomial(Interval(g.nonzero_rational(-2, 2, 4)), g.half_exponent(1, 4));
        const Interval moved = standard_part(cover::cover_distance(CoverPoint(a.r() + dr, a.zeta() + dz), b));
        EXPECT_TRUE(intersect(base, moved).has_value()) << to_string(base) << " vs " << to_string(moved);
    }
}
