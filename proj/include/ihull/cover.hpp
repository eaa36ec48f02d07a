#ifndef IHULL_COVER_HPP
#define IHULL_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ihull/elementary.hpp"
#include "ihull/errors.hpp"
#include "ihull/format.hpp"
#include "ihull/series.hpp"

// The metric universal cover of the punctured plane: the chart r > 0,
// zeta in R (zeta is the unwrapped polar angle) with metric dr^2 + r^2 dzeta^2.
//
// Geodesic distance in closed form: when the angular separation is below pi
// the two points see each other along a straight chord of the plane, which
// lifts to the cover; otherwise every path is at least as long as the
// radial trip through the (missing) origin, and that infimum r1 + r2 is
// approached but not attained in the cover.

namespace ihull::cover {

class CoverPoint {
public:
    CoverPoint(LeviCivita r, LeviCivita zeta) : r_(std::move(r)), zeta_(std::move(zeta))
    {
        Tri positive = Tri::Unknown;
        try {
            positive = tri_of(compare(r_, LeviCivita()) == Ordering::GT);
        } catch (const Indeterminate&) {
        }
        if (positive != Tri::True) {
            throw InvalidPoint("cover point needs r > 0, got r = " + to_string(r_));
        }
    }

    const LeviCivita& r() const noexcept { return r_; }
    const LeviCivita& zeta() const noexcept { return zeta_; }

private:
    LeviCivita r_;
    LeviCivita zeta_;
};

inline std::string to_string(const CoverPoint& p) { return "(" + ihull::to_string(p.r()) + ", " + ihull::to_string(p.zeta()) + ")"; }

enum class Branch { Chord, ThroughOrigin };

/// Which closed-form branch governs d(a, b). Throws BranchIndeterminate when
/// |zeta_a - zeta_b| cannot be separated from pi at this precision.
inline Branch distance_branch(const CoverPoint& a, const CoverPoint& b, unsigned precision)
{
    const LeviCivita diff = a.zeta() - b.zeta();
    switch (classify_magnitude(diff)) {
        case MagnitudeClass::Infinite:
            return Branch::ThroughOrigin;
        case MagnitudeClass::Infinitesimal:
            return Branch::Chord;
        case MagnitudeClass::Appreciable:
            break;
        case MagnitudeClass::Unknown:
            throw BranchIndeterminate("angular separation " + to_string(diff) + " has undecided magnitude",
                                      diff.lead_order());
    }
    const LeviCivita gap = abs(diff);
    try {
        return compare(gap, pi_constant(precision)) == Ordering::LT ? Branch::Chord : Branch::ThroughOrigin;
    } catch (const Indeterminate& e) {
        throw BranchIndeterminate("angular separation " + to_string(gap) + " cannot be separated from pi", e.exponent());
    }
}

inline LeviCivita cover_distance(const CoverPoint& a, const CoverPoint& b, const Rational& order = kDefaultOrder,
                                 unsigned precision = kDefaultPrecision)
{
    if (distance_branch(a, b, precision) == Branch::ThroughOrigin) {
        return a.r() + b.r();
    }
    const LeviCivita diff = a.zeta() - b.zeta();
    const LeviCivita cos_diff = cos_enclosure(diff, order, precision);
    const LeviCivita radicand = a.r() * a.r() + b.r() * b.r() - LeviCivita(2) * a.r() * b.r() * cos_diff;
    return sqrt_nonneg(radicand, order, precision);
}

/// Length of the three-leg path (1, zeta) -> (rho, zeta) -> (rho, 0) -> (eps, 0)
/// with rho = 1/zeta^2:  (1 - rho) + rho |zeta| + |rho - eps|.
/// An upper bound on the distance from (1, zeta) to (eps, 0).
inline LeviCivita origin_path_upper_bound(const CoverPoint& a, const LeviCivita& eps,
                                          const Rational& order = kDefaultOrder)
{
    Ordering unit = Ordering::LT;
    try {
        unit = compare(a.r(), LeviCivita(1));
    } catch (const Indeterminate&) {
    }
    if (unit != Ordering::EQ) {
        throw PreconditionViolated("origin path bound needs a point with r = 1 exactly");
    }
    if (classify_magnitude(a.zeta()) != MagnitudeClass::Infinite) {
        throw PreconditionViolated("origin path bound needs an infinite zeta");
    }
    if (classify_magnitude(eps) != MagnitudeClass::Infinitesimal || greater_than(eps, LeviCivita()) != Tri::True) {
        throw PreconditionViolated("origin path bound needs a positive infinitesimal eps");
    }
    const LeviCivita zeta_sq = a.zeta() * a.zeta();
    // Any positive rho with rho * |zeta| infinitesimal works; the series part of 1/zeta^2 is one.
    const LeviCivita rho = inverse(zeta_sq, order).without_truncation();
    return (a.r() - rho) + rho * abs(a.zeta()) + abs(rho - eps);
}

/// Rectangle K = [r_lo, r_hi] x [zeta - h, zeta + h] around an infinitely
/// far point and the radius of the hull ball it is certified to contain.
struct SeparationCertificate {
    CoverPoint center;
    Rational r_lo;
    Rational r_hi;
    Rational zeta_halfwidth;
    Rational ball_radius;
};

/// Inside K the metric dominates dr^2 + r_lo^2 dzeta^2, so any path leaving
/// K costs at least the smaller of the radial margins and r_lo * halfwidth.
/// With rho the lower end of st(r): K = [rho/2, 2 rho] x [zeta - 1, zeta + 1].
inline SeparationCertificate separation_certificate(const CoverPoint& center)
{
    if (classify_magnitude(center.r()) != MagnitudeClass::Appreciable) {
        throw NotApplicable("separation certificate needs an appreciable radius");
    }
    if (classify_magnitude(center.zeta()) != MagnitudeClass::Infinite) {
        throw NotApplicable("separation certificate needs an infinite zeta");
    }
    const Interval st_r = standard_part(center.r());
    const Rational rho = st_r.lo();
    if (rho <= 0) {
        throw NotApplicable("separation certificate needs st(r) > 0");
    }
    const Rational r_lo = rho / 2;
    const Rational r_hi = rho * 2;
    const Rational halfwidth = 1;
    const Rational inner_margin = st_r.lo() - r_lo;
    const Rational outer_margin = r_hi - st_r.hi();
    const Rational angular = r_lo * halfwidth;
    const Rational radius = std::min({inner_margin, outer_margin, angular});
    if (radius <= 0) {
        throw NotApplicable("standard part of r is too loosely enclosed for a certificate");
    }
    return SeparationCertificate{center, r_lo, r_hi, halfwidth, radius};
}

/// Certified lower bound on the hull distance from an infinitely far center
/// to any point q with finite zeta (q lies outside K since the zeta gap is infinite).
inline Rational inapproachability_lower_bound(const CoverPoint& center, const CoverPoint& q)
{
    if (!is_finite(classify_magnitude(q.zeta()))) {
        throw NotApplicable("lower bound needs a finite zeta for q");
    }
    return separation_certificate(center).ball_radius;
}

enum class PointKind { Nearstandard, OriginHalo, FiniteInapproachable, OutsideGalaxy, Unknown };

inline const char* name_of(PointKind k)
{
    switch (k) {
        case PointKind::Nearstandard:
            return "nearstandard";
        case PointKind::OriginHalo:
            return "origin_halo";
        case PointKind::FiniteInapproachable:
            return "finite_inapproachable";
        case PointKind::OutsideGalaxy:
            return "outside_galaxy";
        case PointKind::Unknown:
            return "unknown";
    }
    return "unknown";
}

struct CoverClassification {
    PointKind kind = PointKind::Unknown;
    std::optional<CoverPoint> standard_point; // Nearstandard only
    std::optional<LeviCivita> origin_bound;   // OriginHalo: certified infinitesimal path length to (t, 0)
};

namespace detail {

// Length of (r, zeta) -> (rho, zeta) -> (rho, 0) -> (eps, 0) with rho chosen
// as t^(1 - q), q the leading exponent of an infinite zeta (t when zeta is finite),
// so that rho * |zeta| stays infinitesimal.
inline LeviCivita origin_halo_bound(const CoverPoint& a, const LeviCivita& eps)
{
    Rational q = 0;
    if (classify_magnitude(a.zeta()) == MagnitudeClass::Infinite) {
        q = a.zeta().terms().front().exponent;
    }
    const LeviCivita rho = LeviCivita::t(Rational(1 - q));
    return abs(a.r() - rho) + rho * abs(a.zeta()) + abs(rho - eps);
}

} // namespace detail

inline CoverClassification classify_point(const CoverPoint& a)
{
    CoverClassification out;
    const MagnitudeClass r_class = classify_magnitude(a.r());
    const MagnitudeClass zeta_class = classify_magnitude(a.zeta());
    switch (r_class) {
        case MagnitudeClass::Infinite:
            out.kind = PointKind::OutsideGalaxy;
            return out;
        case MagnitudeClass::Infinitesimal: {
            if (zeta_class == MagnitudeClass::Unknown) {
                return out;
            }
            try {
                LeviCivita bound = detail::origin_halo_bound(a, LeviCivita::t());
                if (classify_magnitude(bound) == MagnitudeClass::Infinitesimal) {
                    out.kind = PointKind::OriginHalo;
                    out.origin_bound = std::move(bound);
                }
            } catch (const Indeterminate&) {
            }
            return out;
        }
        case MagnitudeClass::Appreciable:
            if (is_finite(zeta_class)) {
                out.kind = PointKind::Nearstandard;
                out.standard_point = CoverPoint(LeviCivita(standard_part(a.r())), LeviCivita(standard_part(a.zeta())));
            } else if (zeta_class == MagnitudeClass::Infinite) {
                out.kind = PointKind::FiniteInapproachable;
            }
            return out;
        case MagnitudeClass::Unknown:
            return out;
    }
    return out;
}

/// A point of the completion: the cover plus the restored origin.
class CompletionPoint {
public:
    CompletionPoint(CoverPoint p) : point_(std::move(p)) {} // NOLINT(implicit)
    static CompletionPoint origin() { return CompletionPoint(); }

    bool is_origin() const noexcept { return !point_; }
    const CoverPoint& point() const { return *point_; }

private:
    CompletionPoint() = default;
    std::optional<CoverPoint> point_;
};

inline std::string to_string(const CompletionPoint& p) { return p.is_origin() ? "origin" : to_string(p.point()); }

inline LeviCivita completion_distance(const CompletionPoint& a, const CompletionPoint& b,
                                      const Rational& order = kDefaultOrder, unsigned precision = kDefaultPrecision)
{
    if (a.is_origin() && b.is_origin()) {
        return LeviCivita();
    }
    if (a.is_origin()) {
        return b.point().r();
    }
    if (b.is_origin()) {
        return a.point().r();
    }
    return cover_distance(a.point(), b.point(), order, precision);
}

/// Points (1, 4k), k = 0..n-1: on the unit sphere about the origin, pairwise 2 apart.
inline std::vector<CoverPoint> separated_net(int n)
{
    if (n < 2) {
        throw PreconditionViolated("separated net needs n >= 2");
    }
    std::vector<CoverPoint> net;
    net.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        net.emplace_back(LeviCivita(1), LeviCivita(4 * k));
    }
    return net;
}

struct PlanarPolar {
    Rational r;
    Interval theta; // in [0, 2pi)
};

namespace detail {

inline std::optional<Rational> standard_exact(const LeviCivita& x)
{
    if (!x.is_exact()) {
        return std::nullopt;
    }
    if (x.empty()) {
        return Rational(0);
    }
    if (x.terms().size() == 1 && x.terms().front().exponent == 0) {
        return x.terms().front().coeff.lo();
    }
    return std::nullopt;
}

} // namespace detail

/// Projection (r, zeta) -> (r, theta) with theta = zeta mod 2pi.
inline PlanarPolar covering_map(const CoverPoint& a, unsigned precision = kDefaultPrecision)
{
    const auto r = detail::standard_exact(a.r());
    const auto zeta = detail::standard_exact(a.zeta());
    if (!r || !zeta) {
        throw NotStandard("covering map needs standard exact coordinates");
    }
    for (unsigned bits = precision;; bits += 32) {
        const Interval two_pi = Interval(2) * pi_enclosure(bits);
        const Rational x = *zeta >= 0 ? Rational(*zeta / two_pi.hi()) : Rational(*zeta / two_pi.lo());
        const Rational y = *zeta >= 0 ? Rational(*zeta / two_pi.lo()) : Rational(*zeta / two_pi.hi());
        const Integer k_lo = floor_of(x);
        const Integer k_hi = floor_of(y);
        if (k_lo == k_hi) {
            if (k_lo == 0) {
                return PlanarPolar{*r, Interval(*zeta)};
            }
            const Interval theta = Interval(*zeta) - Interval(Rational(k_lo)) * two_pi;
            return PlanarPolar{*r, theta};
        }
        if (bits > precision + 2048) {
            throw Indeterminate("covering map: zeta is too close to a multiple of 2pi");
        }
    }
}

} // namespace ihull::cover

#endif
