#ifndef IHULL_HULL_HPP
#define IHULL_HULL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ihull/errors.hpp"
#include "ihull/format.hpp"
#include "ihull/series.hpp"

// Nonstandard hulls of registered metric spaces.
//
// A point of *M is an ExtendedPoint; a point of the hull is the halo of a
// finite one, with distance st(*d(x, y)). Approachability and
// nearstandardness are not decidable in general, so each space supplies
// oracles for them together with its completeness metadata.

namespace ihull {

struct ExtendedPoint {
    std::string space_id;
    std::vector<LeviCivita> coords;
};

inline std::string to_string(const ExtendedPoint& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        out += (i == 0 ? "" : ", ") + to_string(p.coords[i]);
    }
    return out + ")";
}

/// A point of the hull, named by any representative of its halo.
struct HaloRef {
    ExtendedPoint representative;
};

struct SpaceMetadata {
    bool is_complete = false;
    bool completion_is_hb = false;
};

struct SpaceDescriptor {
    std::string id;
    std::string summary;
    std::size_t dimension = 1;
    ExtendedPoint basepoint;
    std::function<LeviCivita(const ExtendedPoint&, const ExtendedPoint&)> distance;
    std::function<Tri(const ExtendedPoint&)> approachable;
    std::function<std::optional<ExtendedPoint>(const ExtendedPoint&)> nearstandard;
    /// For an approachable point and a standard eps > 0, a standard point
    /// closer than eps. Realizes density of M in its completion.
    std::function<std::optional<ExtendedPoint>(const ExtendedPoint&, const Rational&)> approach_witness;
    /// Throws InvalidPoint when the space's domain constraints fail.
    std::function<void(const ExtendedPoint&)> validate;
    SpaceMetadata metadata;
    /// Heine-Borel property of M itself (complete and completion Heine-Borel).
    bool is_heine_borel() const { return metadata.is_complete && metadata.completion_is_hb; }
};

inline void check_membership(const SpaceDescriptor& s, const ExtendedPoint& a)
{
    if (a.space_id != s.id) {
        throw SpaceMismatch("point belongs to '" + a.space_id + "', not '" + s.id + "'");
    }
    if (a.coords.size() != s.dimension) {
        throw SpaceMismatch("space '" + s.id + "' has dimension " + std::to_string(s.dimension) + ", point has " +
                            std::to_string(a.coords.size()) + " coordinates");
    }
    if (s.validate) {
        s.validate(a);
    }
}

inline ExtendedPoint make_point(const SpaceDescriptor& s, std::vector<LeviCivita> coords)
{
    ExtendedPoint p{s.id, std::move(coords)};
    check_membership(s, p);
    return p;
}

inline LeviCivita extended_distance(const SpaceDescriptor& s, const ExtendedPoint& a, const ExtendedPoint& b)
{
    check_membership(s, a);
    check_membership(s, b);
    return s.distance(a, b);
}

/// Finite distance from the basepoint (equivalently from any standard point).
inline Tri in_galaxy(const SpaceDescriptor& s, const ExtendedPoint& a)
{
    check_membership(s, a);
    try {
        return finite_tri(s.distance(a, s.basepoint));
    } catch (const Indeterminate&) {
        return Tri::Unknown;
    }
}

/// st(*d(x, y)) for halos in the galaxy.
inline Interval hull_distance(const SpaceDescriptor& s, const HaloRef& x, const HaloRef& y)
{
    for (const auto* p : {&x.representative, &y.representative}) {
        const Tri finite = in_galaxy(s, *p);
        if (finite == Tri::False) {
            throw NotFinite("representative " + to_string(*p) + " lies outside the galaxy");
        }
        if (finite == Tri::Unknown) {
            throw Indeterminate("cannot decide whether " + to_string(*p) + " lies in the galaxy");
        }
    }
    return standard_part(extended_distance(s, x.representative, y.representative));
}

/// Halo equality: the representatives are infinitely close.
inline Tri same_halo(const SpaceDescriptor& s, const HaloRef& x, const HaloRef& y)
{
    try {
        const auto m = classify_magnitude(extended_distance(s, x.representative, y.representative));
        if (m == MagnitudeClass::Unknown) {
            return Tri::Unknown;
        }
        return tri_of(m == MagnitudeClass::Infinitesimal);
    } catch (const Indeterminate&) {
        return Tri::Unknown;
    }
}

inline Tri is_approachable(const SpaceDescriptor& s, const ExtendedPoint& a)
{
    check_membership(s, a);
    return s.approachable(a);
}

inline std::optional<ExtendedPoint> is_nearstandard(const SpaceDescriptor& s, const ExtendedPoint& a)
{
    check_membership(s, a);
    return s.nearstandard(a);
}

/// Membership in *B_n = {x : d(x, p) <= n}.
inline Tri in_closed_ball(const SpaceDescriptor& s, const ExtendedPoint& a, const Rational& n)
{
    check_membership(s, a);
    try {
        return tri_of(compare(s.distance(a, s.basepoint), LeviCivita(n)) != Ordering::GT);
    } catch (const Indeterminate&) {
        return Tri::Unknown;
    }
}

// ---------------------------------------------------------------------------
// Theorem-checking harness

enum class Verdict { Pass, Fail, Unknown };

inline const char* name_of(Verdict v)
{
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        case Verdict::Unknown:
            return "unknown";
    }
    return "unknown";
}

struct ProbeVerdict {
    std::string point;
    Tri finite = Tri::Unknown;
    Tri approachable = Tri::Unknown;
    std::optional<std::string> nearstandard; // the standard point, if any
    std::string note;
};

struct ClauseOutcome {
    std::string name;
    Verdict verdict = Verdict::Unknown;
    std::string details;
};

/// Outcome of a harness run. Universally quantified claims are checked on the
/// probe set only: a pass is property-test evidence, not a proof.
struct Report {
    std::string space_id;
    std::string claim;
    std::vector<ProbeVerdict> probes;
    std::vector<ClauseOutcome> clauses;

    Verdict summary() const
    {
        bool unknown = false;
        for (const auto& c : clauses) {
            if (c.verdict == Verdict::Fail) {
                return Verdict::Fail;
            }
            unknown = unknown || c.verdict == Verdict::Unknown;
        }
        return unknown ? Verdict::Unknown : Verdict::Pass;
    }

    std::size_t unknown_probes() const
    {
        std::size_t n = 0;
        for (const auto& p : probes) {
            n += (p.finite == Tri::Unknown || p.approachable == Tri::Unknown) ? 1 : 0;
        }
        return n;
    }

    const ClauseOutcome* clause(const std::string& name) const
    {
        for (const auto& c : clauses) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }
};

inline nlohmann::json to_json(const Report& r)
{
    nlohmann::json probes = nlohmann::json::array();
    for (const auto& p : r.probes) {
        nlohmann::json entry{{"point", p.point},
                             {"finite", name_of(p.finite)},
                             {"approachable", name_of(p.approachable)},
                             {"nearstandard", p.nearstandard ? nlohmann::json(*p.nearstandard) : nlohmann::json(nullptr)}};
        if (!p.note.empty()) {
            entry["note"] = p.note;
        }
        probes.push_back(std::move(entry));
    }
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& c : r.clauses) {
        clauses.push_back({{"name", c.name}, {"verdict", name_of(c.verdict)}, {"details", c.details}});
    }
    return {{"space", r.space_id},
            {"claim", r.claim},
            {"summary", name_of(r.summary())},
            {"unknown_probes", r.unknown_probes()},
            {"probes", std::move(probes)},
            {"clauses", std::move(clauses)}};
}

inline ProbeVerdict evaluate_probe(const SpaceDescriptor& s, const ExtendedPoint& a)
{
    ProbeVerdict v;
    v.point = to_string(a);
    try {
        v.finite = in_galaxy(s, a);
        v.approachable = is_approachable(s, a);
        if (auto x = is_nearstandard(s, a)) {
            v.nearstandard = to_string(*x);
        }
    } catch (const Error& e) {
        v.note = e.what();
    }
    return v;
}

namespace detail {

inline std::string count_text(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

// Nearstandard implies approachable: the easy direction, checked on every probe.
inline ClauseOutcome nearstandard_implies_approachable(const std::vector<ProbeVerdict>& probes)
{
    std::size_t violations = 0;
    for (const auto& p : probes) {
        if (p.nearstandard && p.approachable == Tri::False) {
            ++violations;
        }
    }
    return {"nearstandard implies approachable", violations == 0 ? Verdict::Pass : Verdict::Fail,
            count_text(violations, "violations")};
}

} // namespace detail

/// Every approachable point of *M is nearstandard iff M is complete.
///
/// Complete spaces: every approachable probe must be nearstandard. Incomplete
/// spaces: some probe must be approachable but not nearstandard.
inline Report check_proposition_a(const SpaceDescriptor& s, const std::vector<ExtendedPoint>& probes)
{
    Report report;
    report.space_id = s.id;
    report.claim = "every approachable point is nearstandard <=> M is complete";
    std::size_t approachable = 0;
    std::size_t approachable_not_near = 0;
    std::size_t skipped = 0;
    for (const auto& a : probes) {
        ProbeVerdict v = evaluate_probe(s, a);
        if (v.finite != Tri::True) {
            ++skipped;
            if (v.note.empty()) {
                v.note = v.finite == Tri::False ? "outside the galaxy; excluded" : "finiteness unknown; excluded";
            }
        } else if (v.approachable == Tri::True) {
            ++approachable;
            if (!v.nearstandard) {
                ++approachable_not_near;
                v.note = "approachable but not nearstandard";
            }
        }
        report.probes.push_back(std::move(v));
    }
    const std::string tally = detail::count_text(approachable, "approachable probes, ") +
                              detail::count_text(approachable_not_near, "not nearstandard, ") +
                              detail::count_text(report.unknown_probes(), "unknown, ") +
                              detail::count_text(skipped, "excluded");
    if (s.metadata.is_complete) {
        Verdict v = approachable_not_near == 0 ? Verdict::Pass : Verdict::Fail;
        if (v == Verdict::Pass && approachable == 0) {
            v = Verdict::Unknown;
        }
        report.clauses.push_back({"complete: every approachable probe is nearstandard", v, tally});
    } else {
        report.clauses.push_back({"incomplete: an approachable probe is not nearstandard",
                                  approachable_not_near > 0 ? Verdict::Pass : Verdict::Fail, tally});
    }
    report.clauses.push_back(detail::nearstandard_implies_approachable(report.probes));
    return report;
}

/// Theorem-b harness: (1) every finite point of *M is approachable, (2) the
/// completion is Heine-Borel, (3) the completion is the whole hull; plus the
/// corollary "every finite point is nearstandard iff M is Heine-Borel".
inline Report check_theorem_b(const SpaceDescriptor& s, const std::vector<ExtendedPoint>& probes,
                              const Rational& witness_eps = Rational(1, 1000))
{
    Report report;
    report.space_id = s.id;
    report.claim = "every finite point approachable <=> completion Heine-Borel <=> completion = hull";
    std::size_t finite = 0;
    std::size_t finite_approachable = 0;
    std::size_t inapproachable = 0;
    std::size_t finite_not_near = 0;
    std::size_t unknown = 0;
    std::size_t witnesses_checked = 0;
    std::size_t witnesses_failed = 0;
    for (const auto& a : probes) {
        ProbeVerdict v = evaluate_probe(s, a);
        if (v.finite == Tri::True) {
            ++finite;
            if (v.approachable == Tri::True) {
                ++finite_approachable;
                if (s.approach_witness) {
                    ++witnesses_checked;
                    const auto x = s.approach_witness(a, witness_eps);
                    const bool ok = x && greater_than(LeviCivita(witness_eps), s.distance(a, *x)) == Tri::True;
                    if (!ok) {
                        ++witnesses_failed;
                        v.note = "no standard point within " + to_string(witness_eps) + " certified";
                    }
                }
            } else if (v.approachable == Tri::False) {
                ++inapproachable;
                v.note = "finite_inapproachable";
            } else {
                ++unknown;
            }
            if (!v.nearstandard && v.approachable != Tri::Unknown) {
                ++finite_not_near;
            }
        } else if (v.finite == Tri::Unknown) {
            ++unknown;
        }
        report.probes.push_back(std::move(v));
    }

    const bool all_approachable = finite > 0 && inapproachable == 0 && unknown == 0;
    const bool witness = inapproachable > 0;
    const std::string tally = detail::count_text(finite, "finite probes, ") +
                              detail::count_text(finite_approachable, "approachable, ") +
                              detail::count_text(inapproachable, "inapproachable, ") +
                              detail::count_text(unknown, "unknown");

    const bool hb = s.metadata.completion_is_hb;
    Verdict first = Verdict::Unknown;
    if (hb) {
        first = witness ? Verdict::Fail : (all_approachable ? Verdict::Pass : Verdict::Unknown);
    } else {
        first = witness ? Verdict::Pass : Verdict::Fail;
    }
    report.clauses.push_back({hb ? "(1) every finite probe is approachable" : "(1) fails: a finite inapproachable probe exists",
                              first, tally});
    report.clauses.push_back({"(2) completion Heine-Borel",
                              first,
                              std::string("registered as ") + (hb ? "Heine-Borel" : "not Heine-Borel") +
                                  (witness ? "; refuted for the probes' hull by an inapproachable witness"
                                           : "; no finite inapproachable probe")});
    report.clauses.push_back({"(3) completion equals the hull",
                              first,
                              witness ? "halos of inapproachable probes lie in the hull but outside the completion"
                                      : "every finite probe's halo lies in the completion"});
    report.clauses.push_back({"clauses agree",
                              (all_approachable && witness) ? Verdict::Fail : Verdict::Pass,
                              all_approachable ? "all finite probes approachable, no witness"
                                               : (witness ? "witness found, universal clause not certified"
                                                          : "neither side certified")});
    if (s.approach_witness) {
        report.clauses.push_back({"approachable probes have standard points within " + to_string(witness_eps),
                                  witnesses_failed == 0 ? Verdict::Pass : Verdict::Fail,
                                  detail::count_text(witnesses_checked, "checked, ") +
                                      detail::count_text(witnesses_failed, "failed")});
    }
    const bool m_hb = s.is_heine_borel();
    Verdict corollary = Verdict::Unknown;
    if (m_hb) {
        corollary = finite_not_near == 0 ? (unknown == 0 ? Verdict::Pass : Verdict::Unknown) : Verdict::Fail;
    } else {
        corollary = finite_not_near > 0 ? Verdict::Pass : Verdict::Fail;
    }
    report.clauses.push_back({m_hb ? "corollary: every finite probe is nearstandard (M Heine-Borel)"
                                   : "corollary: a finite probe is not nearstandard (M not Heine-Borel)",
                              corollary, detail::count_text(finite_not_near, "finite probes not nearstandard")});
    return report;
}

} // namespace ihull

#endif
