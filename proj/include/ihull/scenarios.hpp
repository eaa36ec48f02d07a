#ifndef IHULL_SCENARIOS_HPP
#define IHULL_SCENARIOS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ihull/cover.hpp"
#include "ihull/grid_oracle.hpp"
#include "ihull/hull.hpp"
#include "ihull/spaces.hpp"

// Named end-to-end checks run by `ihull verify`.

namespace ihull {

struct ScenarioResult {
    std::string scenario;
    std::vector<ClauseOutcome> checks;
    std::vector<Report> reports;

    Verdict summary() const
    {
        bool unknown = false;
        for (const auto& c : checks) {
            if (c.verdict == Verdict::Fail) {
                return Verdict::Fail;
            }
            unknown = unknown || c.verdict == Verdict::Unknown;
        }
        return unknown ? Verdict::Unknown : Verdict::Pass;
    }
};

inline nlohmann::json to_json(const ScenarioResult& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"verdict", name_of(c.verdict)}, {"details", c.details}});
    }
    nlohmann::json out{{"scenario", r.scenario}, {"summary", name_of(r.summary())}, {"checks", std::move(checks)}};
    if (!r.reports.empty()) {
        nlohmann::json reports = nlohmann::json::array();
        for (const auto& rep : r.reports) {
            reports.push_back(to_json(rep));
        }
        out["reports"] = std::move(reports);
    }
    return out;
}

inline std::vector<std::string> scenario_names()
{
    return {"theorem-1.1", "cover-inapproachable", "proposition-a", "theorem-b", "hb-failure"};
}

namespace detail {

inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

inline LeviCivita random_exact_finite(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
        case 0:
            return random_positive_infinitesimal(rng) * LeviCivita(random_rational(rng, -2, 2, 3));
        case 1:
            return LeviCivita(random_rational(rng, -5, 5, 6));
        default:
            return random_finite(rng, -5, 5);
    }
}

// Fixed witnesses placed ahead of the generated probes.
inline std::vector<ExtendedPoint> named_probes(const SpaceDescriptor& s, const EvalOptions& options)
{
    const auto number = [&](const char* text) { return parse_number(text, options); };
    if (s.id == "rationals-line") {
        return {{s.id, {number("sqrt(2)")}}, {s.id, {number("1 + t")}}, {s.id, {number("t^-1")}}};
    }
    if (s.id == "euclidean-plane") {
        return {{s.id, {number("sqrt(2)"), number("t")}}, {s.id, {number("t^-1"), number("0")}}};
    }
    if (s.id == "cover" || s.id == "cover-completion") {
        return {{s.id, {number("1"), number("t^-1")}},
                {s.id, {number("t"), number("0")}},
                {s.id, {number("1 + t"), number("5")}},
                {s.id, {number("t^-1"), number("0")}}};
    }
    return {};
}

/// `count` probes in total: the named witnesses followed by generated ones.
inline std::vector<ExtendedPoint> scenario_probes(const SpaceDescriptor& s, const EvalOptions& options,
                                                  std::size_t count, std::uint64_t seed)
{
    std::vector<ExtendedPoint> probes = named_probes(s, options);
    auto generated = probe_set(s, count > probes.size() ? count - probes.size() : 0, seed);
    probes.insert(probes.end(), generated.begin(), generated.end());
    return probes;
}

inline void append_report(ScenarioResult& out, Report report)
{
    for (const auto& c : report.clauses) {
        out.checks.push_back({report.space_id + ": " + c.name, c.verdict, c.details});
    }
    out.reports.push_back(std::move(report));
}

inline ScenarioResult theorem_1_1(const EvalOptions&, std::uint64_t seed)
{
    ScenarioResult out{"theorem-1.1", {}, {}};
    std::mt19937_64 rng(seed);
    std::vector<LeviCivita> values;
    for (int i = 0; i < 500; ++i) {
        values.push_back(random_exact_finite(rng));
    }
    std::size_t add_fail = 0;
    std::size_t mul_fail = 0;
    std::size_t kernel_fail = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const LeviCivita& a = values[i];
        const LeviCivita& b = values[(i * 7 + 3) % values.size()];
        add_fail += standard_part(a + b) == standard_part(a) + standard_part(b) ? 0 : 1;
        mul_fail += standard_part(a * b) == standard_part(a) * standard_part(b) ? 0 : 1;
        const bool zero = standard_part(a) == Interval(0);
        const bool infinitesimal = classify_magnitude(a) == MagnitudeClass::Infinitesimal;
        kernel_fail += zero == infinitesimal ? 0 : 1;
    }
    out.checks.push_back({"st(a + b) = st(a) + st(b)", verdict_of(add_fail == 0),
                          std::to_string(add_fail) + " of 500 pairs differ"});
    out.checks.push_back({"st(a * b) = st(a) * st(b)", verdict_of(mul_fail == 0),
                          std::to_string(mul_fail) + " of 500 pairs differ"});
    out.checks.push_back({"st(a) = 0 <=> a infinitesimal", verdict_of(kernel_fail == 0),
                          std::to_string(kernel_fail) + " exceptions in 500 values"});
    std::size_t approx_fail = 0;
    for (int i = 0; i < 100; ++i) {
        const LeviCivita y = random_exact_finite(rng);
        const LeviCivita q = approximate_within(y, LeviCivita::t());
        const bool ok = q.is_exact() && !q.truncation() && halo_equal(q, y) == Tri::True &&
                        greater_than(LeviCivita::t(), abs(y - q)) == Tri::True;
        approx_fail += ok ? 0 : 1;
    }
    out.checks.push_back({"approximate_within(y, t) is exact and infinitely close to y", verdict_of(approx_fail == 0),
                          std::to_string(approx_fail) + " failures in 100 values"});
    return out;
}

inline ScenarioResult cover_inapproachable(const EvalOptions& options, std::uint64_t seed)
{
    using cover::CoverPoint;
    ScenarioResult out{"cover-inapproachable", {}, {}};
    const CoverPoint far(LeviCivita(1), LeviCivita::t(-1));
    const LeviCivita eps = LeviCivita::t();
    const CoverPoint near_origin(eps, LeviCivita(0));
    const LeviCivita d = cover::cover_distance(far, near_origin, options.order, options.precision);
    const Interval st = standard_part(d);
    out.checks.push_back({"st(d((1, t^-1), (t, 0))) = 1", verdict_of(st == Interval(1)),
                          "d = " + to_string(d) + ", st = " + to_string(st)});
    const LeviCivita upper = cover::origin_path_upper_bound(far, eps, options.order);
    out.checks.push_back({"three-leg path bound = 1 + 2t - 2t^2",
                          verdict_of(identical(upper, parse_number("1 + 2t - 2t^2"))), to_string(upper)});
    out.checks.push_back({"path bound dominates the distance", verdict_of(greater_than(d, upper) == Tri::False),
                          to_string(upper) + " >= " + to_string(d)});
    out.checks.push_back({"radial lower bound 1 - t <= distance",
                          verdict_of(greater_than(LeviCivita(1) - eps, d) == Tri::False), "1 - t <= " + to_string(d)});
    const auto kind = cover::classify_point(far).kind;
    out.checks.push_back({"(1, t^-1) is finite and inapproachable",
                          verdict_of(kind == cover::PointKind::FiniteInapproachable), cover::name_of(kind)});
    const auto cert = cover::separation_certificate(far);
    out.checks.push_back({"certified ball radius is 1/2", verdict_of(cert.ball_radius == Rational(1, 2)),
                          "K = [" + to_string(cert.r_lo) + ", " + to_string(cert.r_hi) + "] x [zeta - " +
                              to_string(cert.zeta_halfwidth) + ", zeta + " + to_string(cert.zeta_halfwidth) +
                              "], radius " + to_string(cert.ball_radius)});

    // Standard shadow: from (1, 50), points outside [1/2, 2] x [49, 51] are more than 1/2 away.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    std::uniform_real_distribution<double> angle(-100.0, 100.0);
    const grid::StandardPoint center{1.0, 50.0};
    double closest = 1e300;
    int below = 0;
    for (int i = 0; i < 10; ++i) {
        grid::StandardPoint q{radius(rng), angle(rng)};
        while (std::abs(q.zeta - 50.0) < 1.0) {
            q.zeta = angle(rng);
        }
        const double g = grid::oracle_distance(grid::fit_window(center, q), center, q);
        closest = std::min(closest, g);
        below += g > 0.5 ? 0 : 1;
    }
    out.checks.push_back({"grid distance from (1, 50) to standard points outside K exceeds 1/2",
                          verdict_of(below == 0),
                          "10 points, smallest grid distance " + std::to_string(closest)});
    return out;
}

inline ScenarioResult harness(const char* name, bool theorem_b, const EvalOptions& options, std::uint64_t seed)
{
    ScenarioResult out{name, {}, {}};
    for (const auto& id : space_names()) {
        const SpaceDescriptor s = find_space(id, options);
        const auto probes = scenario_probes(s, options, 100, seed);
        append_report(out, theorem_b ? check_theorem_b(s, probes) : check_proposition_a(s, probes));
    }
    return out;
}

inline ScenarioResult hb_failure(const EvalOptions& options)
{
    ScenarioResult out{"hb-failure", {}, {}};
    const auto net = cover::separated_net(10);
    std::size_t radius_fail = 0;
    for (const auto& p : net) {
        const LeviCivita d = cover::completion_distance(cover::CompletionPoint::origin(), p, options.order,
                                                        options.precision);
        radius_fail += identical(d, LeviCivita(1)) ? 0 : 1;
    }
    out.checks.push_back({"every net point is at distance exactly 1 from the origin", verdict_of(radius_fail == 0),
                          std::to_string(net.size() - radius_fail) + " of " + std::to_string(net.size())});
    std::size_t pairs = 0;
    std::size_t pair_fail = 0;
    for (std::size_t i = 0; i < net.size(); ++i) {
        for (std::size_t j = i + 1; j < net.size(); ++j) {
            ++pairs;
            pair_fail += identical(cover::cover_distance(net[i], net[j], options.order, options.precision),
                                   LeviCivita(2))
                             ? 0
                             : 1;
        }
    }
    out.checks.push_back({"all pairwise distances are exactly 2", verdict_of(pair_fail == 0),
                          std::to_string(pairs - pair_fail) + " of " + std::to_string(pairs) + " pairs"});
    const LeviCivita control = cover::cover_distance(cover::CoverPoint(LeviCivita(1), LeviCivita(0)),
                                                     cover::CoverPoint(LeviCivita(1), LeviCivita(1)), options.order,
                                                     options.precision);
    out.checks.push_back({"negative control: spacing 1 < pi gives distance < 2",
                          verdict_of(greater_than(LeviCivita(2), control) == Tri::True), to_string(control)});
    return out;
}

} // namespace detail

inline ScenarioResult run_scenario(const std::string& name, const EvalOptions& options = {}, std::uint64_t seed = 1)
{
    if (name == "theorem-1.1") {
        return detail::theorem_1_1(options, seed);
    }
    if (name == "cover-inapproachable") {
        return detail::cover_inapproachable(options, seed);
    }
    if (name == "proposition-a") {
        return detail::harness("proposition-a", false, options, seed);
    }
    if (name == "theorem-b") {
        return detail::harness("theorem-b", true, options, seed);
    }
    if (name == "hb-failure") {
        return detail::hb_failure(options);
    }
    throw PreconditionViolated("unknown scenario '" + name + "'");
}

} // namespace ihull

#endif
