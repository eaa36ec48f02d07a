// ihull: command-line front end for the nonstandard hull library.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ihull/ihull.hpp"

namespace {

using namespace ihull;
using nlohmann::json;

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kIndeterminate = 3 };

struct Globals {
    std::string order = "8";
    unsigned precision = kDefaultPrecision;
    bool json = false;
    std::uint64_t seed = 1;

    EvalOptions options() const
    {
        EvalOptions out;
        try {
            out.order = Rational(order);
        } catch (const std::exception&) {
            throw ParseError("--order expects a rational such as 8 or 17/2", 0);
        }
        out.precision = precision;
        return out;
    }
};

bool looks_like_point(const std::string& text)
{
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        } else if (c == ',' && depth == 1) {
            return true;
        }
    }
    return false;
}

ExtendedPoint read_point(const SpaceDescriptor& space, const std::string& text, const EvalOptions& options)
{
    std::vector<LeviCivita> coords;
    if (space.dimension == 1 && !looks_like_point(text)) {
        coords.push_back(parse_number(text, options));
    } else {
        coords = parse_point(text, options);
    }
    return make_point(space, std::move(coords));
}

std::string standard_text(const LeviCivita& x)
{
    try {
        const Interval s = standard_part(x);
        return s.is_exact() ? to_string(s) : to_string(s) + " ~ " + to_decimal(s);
    } catch (const NotFinite&) {
        return "not finite";
    }
}

int cmd_eval(const Globals& g, const std::string& expr)
{
    const LeviCivita x = parse_number(expr, g.options());
    if (g.json) {
        std::cout << json{{"value", to_string(x)}, {"decimal", to_decimal(x)}}.dump(2) << "\n";
    } else {
        std::cout << to_string(x) << "\n";
    }
    return kOk;
}

int cmd_dist(const Globals& g, const std::string& space_name, const std::string& p1, const std::string& p2)
{
    const EvalOptions options = g.options();
    const SpaceDescriptor space = find_space(space_name, options);
    const LeviCivita d = extended_distance(space, read_point(space, p1, options), read_point(space, p2, options));
    if (g.json) {
        std::cout << json{{"space", space.id}, {"distance", to_string(d)}, {"standard_part", standard_text(d)}}.dump(2)
                  << "\n";
    } else {
        std::cout << to_string(d) << "\n" << "st = " << standard_text(d) << "\n";
    }
    return kOk;
}

int cmd_hull_dist(const Globals& g, const std::string& space_name, const std::string& p1, const std::string& p2)
{
    const EvalOptions options = g.options();
    const SpaceDescriptor space = find_space(space_name, options);
    const Interval d = hull_distance(space, HaloRef{read_point(space, p1, options)}, HaloRef{read_point(space, p2, options)});
    if (g.json) {
        std::cout << json{{"space", space.id}, {"hull_distance", to_string(d)}, {"decimal", to_decimal(d)}}.dump(2)
                  << "\n";
    } else {
        std::cout << to_string(d) << (d.is_exact() ? "" : " ~ " + to_decimal(d)) << "\n";
    }
    return kOk;
}

int cmd_classify(const Globals& g, const std::string& text)
{
    const EvalOptions options = g.options();
    if (!looks_like_point(text)) {
        const LeviCivita x = parse_number(text, options);
        const char* kind = name_of(classify_magnitude(x));
        if (g.json) {
            std::cout << json{{"value", to_string(x)}, {"magnitude", kind}}.dump(2) << "\n";
        } else {
            std::cout << kind << "\n";
        }
        return kOk;
    }
    const auto coords = parse_point(text, options);
    if (coords.size() != 2) {
        throw InvalidPoint("a cover point has two coordinates (r, zeta)");
    }
    const cover::CoverPoint p(coords[0], coords[1]);
    const auto c = cover::classify_point(p);
    json out{{"point", cover::to_string(p)}, {"kind", cover::name_of(c.kind)}};
    if (c.standard_point) {
        out["standard_point"] = cover::to_string(*c.standard_point);
    }
    if (c.origin_bound) {
        out["origin_bound"] = to_string(*c.origin_bound);
    }
    if (g.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << cover::name_of(c.kind);
        if (c.standard_point) {
            std::cout << " " << cover::to_string(*c.standard_point);
        }
        if (c.origin_bound) {
            std::cout << " (d to (t, 0) <= " << to_string(*c.origin_bound) << ")";
        }
        std::cout << "\n";
    }
    return c.kind == cover::PointKind::Unknown ? kIndeterminate : kOk;
}

int cmd_verify(const Globals& g, const std::string& scenario)
{
    const ScenarioResult result = run_scenario(scenario, g.options(), g.seed);
    if (g.json) {
        std::cout << to_json(result).dump(2) << "\n";
    } else {
        std::cout << "scenario " << result.scenario << "\n";
        for (const auto& c : result.checks) {
            std::cout << "  [" << name_of(c.verdict) << "] " << c.name << ": " << c.details << "\n";
        }
        for (const auto& r : result.reports) {
            for (const auto& p : r.probes) {
                if (p.note == "finite_inapproachable" && p.point.find("t^-1)") != std::string::npos) {
                    std::cout << "  witness in " << r.space_id << ": " << p.point << " finite_inapproachable\n";
                    break;
                }
            }
        }
        std::cout << "summary: " << name_of(result.summary()) << "\n";
    }
    switch (result.summary()) {
        case Verdict::Pass:
            return kOk;
        case Verdict::Fail:
            return kCheckFailed;
        case Verdict::Unknown:
            return kIndeterminate;
    }
    return kCheckFailed;
}

grid::StandardPoint standard_point_of(const std::string& text, const EvalOptions& options)
{
    const auto coords = parse_point(text, options);
    if (coords.size() != 2) {
        throw InvalidPoint("oracle points have two coordinates (r, zeta)");
    }
    for (const auto& c : coords) {
        if (!(c.empty() || (c.terms().size() == 1 && c.terms().front().exponent == 0)) || c.truncation()) {
            throw NotStandard("oracle points must be standard, got " + to_string(c));
        }
    }
    const auto value = [](const LeviCivita& x) { return x.empty() ? 0.0 : to_double(x.terms().front().coeff.midpoint()); };
    return {value(coords[0]), value(coords[1])};
}

int cmd_oracle(const Globals& g, const std::string& p1, const std::string& p2, int n)
{
    const EvalOptions options = g.options();
    const auto a = standard_point_of(p1, options);
    const auto b = standard_point_of(p2, options);
    const auto pa = parse_point(p1, options);
    const auto pb = parse_point(p2, options);
    const LeviCivita exact =
        cover::cover_distance(cover::CoverPoint(pa[0], pa[1]), cover::CoverPoint(pb[0], pb[1]), options.order,
                              options.precision);
    const double closed = to_double(standard_part(exact).midpoint());
    const grid::GridConfig cfg = grid::fit_window(a, b, n);
    const double oracle = grid::oracle_distance(cfg, a, b);
    const double rel = closed > 0.0 ? std::abs(oracle - closed) / closed : std::abs(oracle);
    if (g.json) {
        std::cout << json{{"oracle", oracle},
                          {"closed_form", to_string(exact)},
                          {"closed_form_decimal", closed},
                          {"relative_error", rel},
                          {"grid", n},
                          {"window",
                           {{"r_min", cfg.r_min}, {"r_max", cfg.r_max}, {"zeta_min", cfg.zeta_min}, {"zeta_max", cfg.zeta_max}}}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "oracle      " << oracle << "\n"
                  << "closed form " << to_string(exact) << " ~ " << closed << "\n"
                  << "rel. error  " << rel << "\n";
    }
    return kOk;
}

int cmd_net(const Globals& g, int n)
{
    const EvalOptions options = g.options();
    const auto net = cover::separated_net(n);
    bool ok = true;
    json points = json::array();
    for (const auto& p : net) {
        const LeviCivita d = cover::completion_distance(cover::CompletionPoint::origin(), p, options.order, options.precision);
        ok = ok && identical(d, LeviCivita(1));
        points.push_back({{"point", cover::to_string(p)}, {"distance_to_origin", to_string(d)}});
    }
    std::size_t separated = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < net.size(); ++i) {
        for (std::size_t j = i + 1; j < net.size(); ++j) {
            ++pairs;
            separated += identical(cover::cover_distance(net[i], net[j], options.order, options.precision), LeviCivita(2)) ? 1 : 0;
        }
    }
    ok = ok && separated == pairs;
    if (g.json) {
        std::cout << json{{"points", points}, {"pairs", pairs}, {"pairs_at_distance_2", separated}}.dump(2) << "\n";
    } else {
        for (const auto& p : points) {
            std::cout << p["point"].get<std::string>() << "  d(origin) = " << p["distance_to_origin"].get<std::string>()
                      << "\n";
        }
        std::cout << separated << " of " << pairs << " pairs at distance 2\n";
    }
    return ok ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact nonstandard-hull computations over a truncated Levi-Civita field"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--order", g.order, "truncation order for series operations (rational)")->capture_default_str();
    app.add_option("--precision", g.precision, "bits for sqrt/cos/sin/pi enclosures")->capture_default_str();
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "seed for generated probes")->capture_default_str();

    std::string a1;
    std::string a2;
    std::string a3;
    int grid_n = 256;
    int net_n = 10;

    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", a1)->required();
    auto* dist = app.add_subcommand("dist", "extended distance and its standard part");
    dist->add_option("space", a1)->required();
    dist->add_option("p1", a2)->required();
    dist->add_option("p2", a3)->required();
    auto* classify = app.add_subcommand("classify", "magnitude class of a number or classification of a cover point");
    classify->add_option("p", a1)->required();
    auto* hull = app.add_subcommand("hull-dist", "distance between halos in the nonstandard hull");
    hull->add_option("space", a1)->required();
    hull->add_option("p1", a2)->required();
    hull->add_option("p2", a3)->required();
    auto* verify = app.add_subcommand("verify", "run a named scenario");
    verify->add_option("scenario", a1)->required()->check(CLI::IsMember(scenario_names()));
    auto* oracle = app.add_subcommand("oracle", "grid shortest path vs closed-form cover distance");
    oracle->add_option("p1", a1)->required();
    oracle->add_option("p2", a2)->required();
    oracle->add_option("--grid", grid_n, "nodes per axis")->capture_default_str()->check(CLI::Range(16, 4096));
    auto* net = app.add_subcommand("net", "2-separated net in the closed unit ball of the completion");
    net->add_option("n", net_n)->required()->check(CLI::Range(2, 10000));

    for (auto* sub : {eval, dist, classify, hull, verify, oracle, net}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) {
            return cmd_eval(g, a1);
        }
        if (*dist) {
            return cmd_dist(g, a1, a2, a3);
        }
        if (*classify) {
            return cmd_classify(g, a1);
        }
        if (*hull) {
            return cmd_hull_dist(g, a1, a2, a3);
        }
        if (*verify) {
            return cmd_verify(g, a1);
        }
        if (*oracle) {
            return cmd_oracle(g, a1, a2, grid_n);
        }
        if (*net) {
            return cmd_net(g, net_n);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Indeterminate& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return kIndeterminate;
    } catch (const SpaceMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
