#ifndef IHULL_SPACES_HPP
#define IHULL_SPACES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ihull/cover.hpp"
#include "ihull/hull.hpp"
#include "ihull/parse.hpp"

// Registry of concrete metric spaces:
//
//   rationals-line    Q with |a - b|: incomplete, completion R is Heine-Borel
//   euclidean-plane   R^2: complete and Heine-Borel
//   cover             universal cover of the punctured plane: incomplete,
//                     completion not Heine-Borel (alias punctured-plane-cover)
//   cover-completion  the cover with the origin restored (r = 0)

namespace ihull {

namespace detail {

inline LeviCivita midpoint_of(const Interval& x) { return LeviCivita(x.midpoint()); }

inline std::optional<LeviCivita> exact_standard(const LeviCivita& x)
{
    try {
        const Interval s = standard_part(x);
        if (s.is_exact()) {
            return LeviCivita(s);
        }
    } catch (const Error&) {
    }
    return std::nullopt;
}

inline cover::CoverPoint as_cover_point(const ExtendedPoint& p) { return cover::CoverPoint(p.coords[0], p.coords[1]); }

inline cover::CompletionPoint as_completion_point(const ExtendedPoint& p)
{
    if (p.coords[0].is_exact_zero()) {
        return cover::CompletionPoint::origin();
    }
    return as_cover_point(p);
}

inline ExtendedPoint from_cover(const std::string& id, const cover::CoverPoint& p) { return {id, {p.r(), p.zeta()}}; }

// Standard point of the cover within eps of an approachable point: its
// standard part, or for the origin halo a point (eps/4, zeta') close to the
// origin on a sheet whose angle is easy to compare.
inline std::optional<ExtendedPoint> cover_witness(const std::string& id, const ExtendedPoint& p, const Rational& eps)
{
    const cover::CoverPoint a = as_cover_point(p);
    const cover::CoverClassification c = cover::classify_point(a);
    if (c.kind == cover::PointKind::Nearstandard) {
        return ExtendedPoint{id, {midpoint_of(standard_part(a.r())), midpoint_of(standard_part(a.zeta()))}};
    }
    if (c.kind == cover::PointKind::OriginHalo) {
        LeviCivita zeta{0};
        if (is_finite(classify_magnitude(a.zeta()))) {
            zeta = midpoint_of(standard_part(a.zeta()));
        }
        return ExtendedPoint{id, {LeviCivita(Rational(eps / 4)), zeta}};
    }
    return std::nullopt;
}

} // namespace detail

inline SpaceDescriptor rationals_line(const EvalOptions& = {})
{
    SpaceDescriptor s;
    s.id = "rationals-line";
    s.summary = "rational numbers with |a - b|; incomplete, completion R is Heine-Borel";
    s.dimension = 1;
    s.basepoint = {s.id, {LeviCivita(0)}};
    s.distance = [](const ExtendedPoint& a, const ExtendedPoint& b) { return abs(a.coords[0] - b.coords[0]); };
    // Q is dense in R, so every finite point is approachable.
    s.approachable = [](const ExtendedPoint& a) { return finite_tri(a.coords[0]); };
    s.nearstandard = [id = s.id](const ExtendedPoint& a) -> std::optional<ExtendedPoint> {
        if (auto x = detail::exact_standard(a.coords[0])) {
            return ExtendedPoint{id, {*x}};
        }
        return std::nullopt;
    };
    s.approach_witness = [id = s.id](const ExtendedPoint& a, const Rational&) -> std::optional<ExtendedPoint> {
        if (finite_tri(a.coords[0]) != Tri::True) {
            return std::nullopt;
        }
        return ExtendedPoint{id, {detail::midpoint_of(standard_part(a.coords[0]))}};
    };
    s.metadata = {false, true};
    return s;
}

inline SpaceDescriptor euclidean_plane(const EvalOptions& options = {})
{
    SpaceDescriptor s;
    s.id = "euclidean-plane";
    s.summary = "R^2 with the Euclidean metric; complete and Heine-Borel";
    s.dimension = 2;
    s.basepoint = {s.id, {LeviCivita(0), LeviCivita(0)}};
    s.distance = [options](const ExtendedPoint& a, const ExtendedPoint& b) {
        const LeviCivita dx = a.coords[0] - b.coords[0];
        const LeviCivita dy = a.coords[1] - b.coords[1];
        return sqrt_nonneg(dx * dx + dy * dy, options.order, options.precision);
    };
    s.approachable = [](const ExtendedPoint& a) {
        const Tri x = finite_tri(a.coords[0]);
        const Tri y = finite_tri(a.coords[1]);
        if (x == Tri::False || y == Tri::False) {
            return Tri::False;
        }
        return (x == Tri::True && y == Tri::True) ? Tri::True : Tri::Unknown;
    };
    s.nearstandard = [id = s.id](const ExtendedPoint& a) -> std::optional<ExtendedPoint> {
        if (finite_tri(a.coords[0]) != Tri::True || finite_tri(a.coords[1]) != Tri::True) {
            return std::nullopt;
        }
        return ExtendedPoint{id, {LeviCivita(standard_part(a.coords[0])), LeviCivita(standard_part(a.coords[1]))}};
    };
    s.approach_witness = [id = s.id](const ExtendedPoint& a, const Rational&) -> std::optional<ExtendedPoint> {
        if (finite_tri(a.coords[0]) != Tri::True || finite_tri(a.coords[1]) != Tri::True) {
            return std::nullopt;
        }
        return ExtendedPoint{id,
                             {detail::midpoint_of(standard_part(a.coords[0])), detail::midpoint_of(standard_part(a.coords[1]))}};
    };
    s.metadata = {true, true};
    return s;
}

inline SpaceDescriptor punctured_plane_cover(const EvalOptions& options = {})
{
    SpaceDescriptor s;
    s.id = "cover";
    s.summary = "universal cover of the punctured plane, metric dr^2 + r^2 dzeta^2; incomplete, "
                "completion not Heine-Borel";
    s.dimension = 2;
    s.basepoint = {s.id, {LeviCivita(1), LeviCivita(0)}};
    s.validate = [](const ExtendedPoint& a) { (void)detail::as_cover_point(a); };
    s.distance = [options](const ExtendedPoint& a, const ExtendedPoint& b) {
        return cover::cover_distance(detail::as_cover_point(a), detail::as_cover_point(b), options.order,
                                     options.precision);
    };
    s.approachable = [](const ExtendedPoint& a) {
        switch (cover::classify_point(detail::as_cover_point(a)).kind) {
            case cover::PointKind::Nearstandard:
            case cover::PointKind::OriginHalo:
                return Tri::True;
            case cover::PointKind::FiniteInapproachable:
            case cover::PointKind::OutsideGalaxy:
                return Tri::False;
            case cover::PointKind::Unknown:
                return Tri::Unknown;
        }
        return Tri::Unknown;
    };
    s.nearstandard = [id = s.id](const ExtendedPoint& a) -> std::optional<ExtendedPoint> {
        const auto c = cover::classify_point(detail::as_cover_point(a));
        if (c.kind == cover::PointKind::Nearstandard) {
            return detail::from_cover(id, *c.standard_point);
        }
        return std::nullopt;
    };
    s.approach_witness = [id = s.id](const ExtendedPoint& a, const Rational& eps) {
        return detail::cover_witness(id, a, eps);
    };
    s.metadata = {false, false};
    return s;
}

inline SpaceDescriptor cover_completion(const EvalOptions& options = {})
{
    SpaceDescriptor s;
    s.id = "cover-completion";
    s.summary = "the cover with the origin restored (r = 0); complete, not Heine-Borel";
    s.dimension = 2;
    s.basepoint = {s.id, {LeviCivita(1), LeviCivita(0)}};
    s.validate = [](const ExtendedPoint& a) { (void)detail::as_completion_point(a); };
    s.distance = [options](const ExtendedPoint& a, const ExtendedPoint& b) {
        return cover::completion_distance(detail::as_completion_point(a), detail::as_completion_point(b), options.order,
                                          options.precision);
    };
    s.approachable = [](const ExtendedPoint& a) {
        if (a.coords[0].is_exact_zero()) {
            return Tri::True;
        }
        switch (cover::classify_point(detail::as_cover_point(a)).kind) {
            case cover::PointKind::Nearstandard:
            case cover::PointKind::OriginHalo:
                return Tri::True;
            case cover::PointKind::FiniteInapproachable:
            case cover::PointKind::OutsideGalaxy:
                return Tri::False;
            case cover::PointKind::Unknown:
                return Tri::Unknown;
        }
        return Tri::Unknown;
    };
    s.nearstandard = [id = s.id](const ExtendedPoint& a) -> std::optional<ExtendedPoint> {
        const ExtendedPoint origin{id, {LeviCivita(0), LeviCivita(0)}};
        if (a.coords[0].is_exact_zero()) {
            return origin;
        }
        const auto c = cover::classify_point(detail::as_cover_point(a));
        if (c.kind == cover::PointKind::Nearstandard) {
            return detail::from_cover(id, *c.standard_point);
        }
        if (c.kind == cover::PointKind::OriginHalo) {
            return origin;
        }
        return std::nullopt;
    };
    s.approach_witness = [id = s.id](const ExtendedPoint& a, const Rational& eps) -> std::optional<ExtendedPoint> {
        if (a.coords[0].is_exact_zero()) {
            return a;
        }
        return detail::cover_witness(id, a, eps);
    };
    s.metadata = {true, false};
    return s;
}

inline std::vector<std::string> space_names()
{
    return {"rationals-line", "euclidean-plane", "cover", "cover-completion"};
}

inline SpaceDescriptor find_space(const std::string& name, const EvalOptions& options = {})
{
    if (name == "rationals-line") {
        return rationals_line(options);
    }
    if (name == "euclidean-plane") {
        return euclidean_plane(options);
    }
    if (name == "cover" || name == "punctured-plane-cover") {
        return punctured_plane_cover(options);
    }
    if (name == "cover-completion") {
        return cover_completion(options);
    }
    throw PreconditionViolated("unknown space '" + name + "'");
}

namespace detail {

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int den_max)
{
    std::uniform_int_distribution<int> den(1, den_max);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(lo * d, hi * d);
    return Rational(num(rng), d);
}

// Exponent in {1/2, 1, 3/2, 2}.
inline Rational random_positive_exponent(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> k(1, 4);
    return Rational(k(rng), 2);
}

inline LeviCivita random_finite(std::mt19937_64& rng, int lo, int hi)
{
    LeviCivita x(random_rational(rng, lo, hi, 8));
    std::uniform_int_distribution<int> extra(0, 2);
    const int n = extra(rng);
    for (int i = 0; i < n; ++i) {
        x += LeviCivita::monomial(Interval(random_rational(rng, -3, 3, 4)), random_positive_exponent(rng));
    }
    return x;
}

inline LeviCivita random_positive_infinitesimal(std::mt19937_64& rng)
{
    return LeviCivita::monomial(Interval(random_rational(rng, 1, 3, 4)), random_positive_exponent(rng));
}

inline LeviCivita random_infinite(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> sign(0, 1);
    const Rational c = random_rational(rng, 1, 5, 4);
    return LeviCivita::monomial(Interval(sign(rng) == 0 ? c : Rational(-c)), Rational(-random_positive_exponent(rng)));
}

} // namespace detail

/// Deterministic probe points for the theorem harness, mixing nearstandard,
/// infinitesimal, infinitely far and (where the space has them) infinite points.
inline std::vector<ExtendedPoint> probe_set(const SpaceDescriptor& s, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<ExtendedPoint> out;
    out.reserve(count);
    std::uniform_int_distribution<int> kind(0, 3);
    while (out.size() < count) {
        const int k = kind(rng);
        if (s.id == "rationals-line") {
            switch (k) {
                case 0:
                    out.push_back({s.id, {detail::random_finite(rng, -5, 5)}});
                    break;
                case 1:
                    out.push_back({s.id, {sqrt_nonneg(LeviCivita(detail::random_rational(rng, 1, 9, 4)), kDefaultOrder, kDefaultPrecision)}});
                    break;
                case 2:
                    out.push_back({s.id, {detail::random_positive_infinitesimal(rng)}});
                    break;
                default:
                    out.push_back({s.id, {detail::random_infinite(rng)}});
                    break;
            }
        } else if (s.id == "euclidean-plane") {
            if (k == 3) {
                out.push_back({s.id, {detail::random_infinite(rng), detail::random_finite(rng, -3, 3)}});
            } else {
                out.push_back({s.id, {detail::random_finite(rng, -5, 5), detail::random_finite(rng, -5, 5)}});
            }
        } else {
            LeviCivita r;
            LeviCivita zeta;
            switch (k) {
                case 0:
                    r = LeviCivita(detail::random_rational(rng, 1, 3, 4)) + detail::random_positive_infinitesimal(rng);
                    zeta = detail::random_finite(rng, -6, 6);
                    break;
                case 1:
                    r = detail::random_positive_infinitesimal(rng);
                    zeta = (rng() % 2 == 0) ? detail::random_finite(rng, -6, 6) : detail::random_infinite(rng);
                    // rho |zeta| must stay infinitesimal for a certified halo bound.
                    if (classify_magnitude(zeta) == MagnitudeClass::Infinite) {
                        zeta = LeviCivita::monomial(zeta.leading()->coeff, Rational(-1, 2));
                    }
                    break;
                case 2:
                    r = LeviCivita(detail::random_rational(rng, 1, 3, 4));
                    zeta = detail::random_infinite(rng);
                    break;
                default:
                    r = LeviCivita::monomial(Interval(detail::random_rational(rng, 1, 3, 4)), Rational(-1));
                    zeta = detail::random_finite(rng, -3, 3);
                    break;
            }
            if (s.id == "cover-completion" && rng() % 16 == 0) {
                r = LeviCivita();
                zeta = LeviCivita();
            }
            out.push_back({s.id, {r, zeta}});
        }
    }
    return out;
}

} // namespace ihull

#endif
