#ifndef IHULL_GRID_ORACLE_HPP
#define IHULL_GRID_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "ihull/errors.hpp"

// Brute-force shortest paths on a discretised window of the punctured-plane
// cover, used to validate the closed-form distance. Plain doubles on purpose:
// this shares no code with the exact library.
//
// Radial nodes are spaced geometrically. In (log r, zeta) the metric
// dr^2 + r^2 dzeta^2 is conformal to the flat one, so a window whose log-r
// and zeta spans match gives square cells and uniform metrication error.

namespace ihull::grid {

enum class Connectivity { FourNeighbor, EightNeighborKnight };

struct GridConfig {
    double r_min = 0.01;
    double r_max = 2.5;
    double zeta_min = -1.0;
    double zeta_max = 1.0;
    int n_r = 256;
    int n_zeta = 256;
    Connectivity connectivity = Connectivity::EightNeighborKnight;
};

struct StandardPoint {
    double r;
    double zeta;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Edge length sqrt(dr^2 + rbar^2 dzeta^2), rbar the midpoint radius.
inline double edge_length(double r1, double z1, double r2, double z2)
{
    const double dr = r2 - r1;
    const double rbar = 0.5 * (r1 + r2);
    const double dz = z2 - z1;
    return std::sqrt(dr * dr + rbar * rbar * dz * dz);
}

namespace detail {

inline void validate(const GridConfig& cfg)
{
    if (!(cfg.r_min > 0.0) || !(cfg.r_max > cfg.r_min)) {
        throw InvalidConfig("grid window needs 0 < r_min < r_max");
    }
    if (!(cfg.zeta_max > cfg.zeta_min)) {
        throw InvalidConfig("grid window needs zeta_min < zeta_max");
    }
    if (cfg.n_r < 16 || cfg.n_zeta < 16) {
        throw InvalidConfig("grid needs at least 16 nodes per axis");
    }
}

// Margin of at least 10% of the window span on every side, in grid coordinates.
inline void check_inside(const GridConfig& cfg, const StandardPoint& p)
{
    const double s_span = std::log(cfg.r_max / cfg.r_min);
    const double z_span = cfg.zeta_max - cfg.zeta_min;
    const double s = std::log(p.r / cfg.r_min);
    const double slack = 1e-12;
    if (!(p.r > 0.0) || s < 0.1 * s_span - slack || s > 0.9 * s_span + slack ||
        p.zeta - cfg.zeta_min < 0.1 * z_span - slack || cfg.zeta_max - p.zeta < 0.1 * z_span - slack) {
        throw OutOfWindow("point (" + std::to_string(p.r) + ", " + std::to_string(p.zeta) +
                          ") is not inside the grid window with a 10% margin");
    }
}

struct Offset {
    int di;
    int dj;
};

inline std::vector<Offset> offsets(Connectivity c)
{
    std::vector<Offset> out{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    if (c == Connectivity::EightNeighborKnight) {
        const Offset extra[] = {{1, 1},  {1, -1}, {-1, 1},  {-1, -1}, {1, 2},  {1, -2},
                                {-1, 2}, {-1, -2}, {2, 1}, {2, -1},  {-2, 1}, {-2, -1}};
        out.insert(out.end(), std::begin(extra), std::end(extra));
    }
    return out;
}

} // namespace detail

class Grid {
public:
    explicit Grid(GridConfig cfg) : cfg_(std::move(cfg))
    {
        detail::validate(cfg_);
        radii_.resize(static_cast<std::size_t>(cfg_.n_r));
        const double ratio = std::log(cfg_.r_max / cfg_.r_min);
        for (int i = 0; i < cfg_.n_r; ++i) {
            radii_[static_cast<std::size_t>(i)] = cfg_.r_min * std::exp(ratio * i / (cfg_.n_r - 1));
        }
        zetas_.resize(static_cast<std::size_t>(cfg_.n_zeta));
        for (int j = 0; j < cfg_.n_zeta; ++j) {
            zetas_[static_cast<std::size_t>(j)] =
                cfg_.zeta_min + (cfg_.zeta_max - cfg_.zeta_min) * j / (cfg_.n_zeta - 1);
        }
        offsets_ = detail::offsets(cfg_.connectivity);
    }

    const GridConfig& config() const noexcept { return cfg_; }

    /// Shortest grid-path length between two off-grid points. Each query point
    /// is joined to the 4x4 block of nodes around it.
    double distance(StandardPoint a, StandardPoint b) const
    {
        detail::check_inside(cfg_, a);
        detail::check_inside(cfg_, b);
        // Canonical direction keeps the result bitwise symmetric.
        if (std::make_pair(b.r, b.zeta) < std::make_pair(a.r, a.zeta)) {
            std::swap(a, b);
        }
        const auto source = anchors(a);
        const auto target = anchors(b);

        double best = std::numeric_limits<double>::infinity();
        if (blocks_overlap(a, b)) {
            best = edge_length(a.r, a.zeta, b.r, b.zeta);
        }
        const std::size_t n = static_cast<std::size_t>(cfg_.n_r) * static_cast<std::size_t>(cfg_.n_zeta);
        std::vector<double> dist(n, std::numeric_limits<double>::infinity());
        std::vector<double> exit_cost(n, std::numeric_limits<double>::infinity());
        for (const auto& [node, w] : target) {
            exit_cost[node] = w;
        }
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        for (const auto& [node, w] : source) {
            if (w < dist[node]) {
                dist[node] = w;
                queue.emplace(w, node);
            }
        }
        while (!queue.empty()) {
            const auto [d, u] = queue.top();
            queue.pop();
            if (d > dist[u]) {
                continue;
            }
            if (d >= best) {
                break;
            }
            best = std::min(best, d + exit_cost[u]);
            const int i = static_cast<int>(u / static_cast<std::size_t>(cfg_.n_zeta));
            const int j = static_cast<int>(u % static_cast<std::size_t>(cfg_.n_zeta));
            for (const auto& off : offsets_) {
                const int ni = i + off.di;
                const int nj = j + off.dj;
                if (ni < 0 || nj < 0 || ni >= cfg_.n_r || nj >= cfg_.n_zeta) {
                    continue;
                }
                const std::size_t v = index(ni, nj);
                const double nd = d + edge_length(r_at(i), z_at(j), r_at(ni), z_at(nj));
                if (nd < dist[v]) {
                    dist[v] = nd;
                    queue.emplace(nd, v);
                }
            }
        }
        return best;
    }

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cfg_.n_zeta) + static_cast<std::size_t>(j);
    }
    double r_at(int i) const { return radii_[static_cast<std::size_t>(i)]; }
    double z_at(int j) const { return zetas_[static_cast<std::size_t>(j)]; }

    std::pair<int, int> cell_of(const StandardPoint& p) const
    {
        const double s = std::log(p.r / cfg_.r_min) / std::log(cfg_.r_max / cfg_.r_min) * (cfg_.n_r - 1);
        const double z = (p.zeta - cfg_.zeta_min) / (cfg_.zeta_max - cfg_.zeta_min) * (cfg_.n_zeta - 1);
        return {static_cast<int>(std::floor(s)), static_cast<int>(std::floor(z))};
    }

    std::vector<std::pair<std::size_t, double>> anchors(const StandardPoint& p) const
    {
        const auto [ci, cj] = cell_of(p);
        std::vector<std::pair<std::size_t, double>> out;
        for (int i = ci - 1; i <= ci + 2; ++i) {
            for (int j = cj - 1; j <= cj + 2; ++j) {
                if (i < 0 || j < 0 || i >= cfg_.n_r || j >= cfg_.n_zeta) {
                    continue;
                }
                out.emplace_back(index(i, j), edge_length(p.r, p.zeta, r_at(i), z_at(j)));
            }
        }
        return out;
    }

    bool blocks_overlap(const StandardPoint& a, const StandardPoint& b) const
    {
        const auto [ai, aj] = cell_of(a);
        const auto [bi, bj] = cell_of(b);
        return std::abs(ai - bi) <= 3 && std::abs(aj - bj) <= 3;
    }

    GridConfig cfg_;
    std::vector<double> radii_;
    std::vector<double> zetas_;
    std::vector<detail::Offset> offsets_;
};

inline double oracle_distance(const GridConfig& cfg, const StandardPoint& a, const StandardPoint& b)
{
    return Grid(cfg).distance(a, b);
}

/// A square-celled window around two points, with `n` nodes per axis.
///
/// Pairs more than ~2.5 rad apart may have through-origin geodesics, so the
/// window then reaches down to 1/1000 of the smaller radius; otherwise it
/// reaches below the closest approach of the planar segment to the origin.
inline GridConfig fit_window(const StandardPoint& a, const StandardPoint& b, int n = 256,
                             Connectivity connectivity = Connectivity::EightNeighborKnight)
{
    const double dz = std::fabs(a.zeta - b.zeta);
    const double r_small = std::min(a.r, b.r);
    const double r_large = std::max(a.r, b.r);
    double floor_r = r_small;
    if (dz > 2.5) {
        floor_r = 1e-3 * r_small;
    } else {
        // Distance from the origin to the planar segment between the two points.
        const double ax = a.r;
        const double bx = b.r * std::cos(dz);
        const double by = b.r * std::sin(dz);
        const double ex = bx - ax;
        const double len2 = ex * ex + by * by;
        const double s = len2 > 0.0 ? std::clamp(-(ax * ex) / len2, 0.0, 1.0) : 0.0;
        floor_r = 0.5 * std::hypot(ax + s * ex, s * by);
    }
    // Core extents in grid coordinates, then a 12.5% margin each side and square cells.
    const double s_lo = std::log(floor_r);
    const double s_hi = std::log(r_large);
    const double z_lo = std::min(a.zeta, b.zeta);
    const double z_hi = std::max(a.zeta, b.zeta);
    const double core = std::max({s_hi - s_lo, z_hi - z_lo, 0.05});
    const double span = core / 0.75;
    const double s_mid = 0.5 * (s_lo + s_hi);
    const double z_mid = 0.5 * (z_lo + z_hi);
    GridConfig cfg;
    cfg.r_min = std::exp(s_mid - 0.5 * span);
    cfg.r_max = std::exp(s_mid + 0.5 * span);
    cfg.zeta_min = z_mid - 0.5 * span;
    cfg.zeta_max = z_mid + 0.5 * span;
    cfg.n_r = n;
    cfg.n_zeta = n;
    cfg.connectivity = connectivity;
    return cfg;
}

} // namespace ihull::grid

#endif
