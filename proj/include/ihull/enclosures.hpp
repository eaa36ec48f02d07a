#ifndef IHULL_ENCLOSURES_HPP
#define IHULL_ENCLOSURES_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <utility>

#include "ihull/errors.hpp"
#include "ihull/interval.hpp"
#include "ihull/rational.hpp"

// Rigorous rational enclosures of sqrt, pi, cos and sin.
//
// Every public routine returns [floor_g(x), ceil_g(x)] on the dyadic grid
// g = 2^-precision (or the exact value when it is representable), so raising
// the precision always yields a nested, never wider, enclosure.

namespace ihull {

namespace detail {

inline unsigned bit_length(const Integer& n)
{
    if (n == 0) {
        return 0;
    }
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(n))) + 1;
}

inline bool exact_square_root(const Integer& n, Integer& root)
{
    if (n < 0) {
        return false;
    }
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

inline std::optional<Rational> rational_sqrt(const Rational& x)
{
    Integer num_root;
    Integer den_root;
    if (exact_square_root(numerator_of(x), num_root) && exact_square_root(denominator_of(x), den_root)) {
        return Rational(num_root, den_root);
    }
    return std::nullopt;
}

// floor_g(sqrt(x)) for x >= 0: floor(sqrt(floor(y))) = floor(sqrt(y)).
inline Rational sqrt_down(const Rational& x, unsigned bits)
{
    if (auto r = rational_sqrt(x)) {
        return *r;
    }
    const Integer scaled = floor_of(x * pow2(2 * bits));
    return Rational(boost::multiprecision::sqrt(scaled), pow2(bits));
}

inline Rational sqrt_up(const Rational& x, unsigned bits)
{
    if (auto r = rational_sqrt(x)) {
        return *r;
    }
    const Integer scaled = ceil_of(x * pow2(2 * bits));
    Integer root = boost::multiprecision::sqrt(scaled);
    if (root * root < scaled) {
        root += 1;
    }
    return Rational(root, pow2(bits));
}

// Tight enclosure of x supplied at internal precision k (width <= 2^-k).
using TightEnclosure = std::function<Interval(unsigned)>;

// [floor_g(x), ceil_g(x)] by refining until both grid neighbours are decided.
inline Interval directed_enclosure(const TightEnclosure& tight, unsigned bits)
{
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    Interval last;
    for (unsigned k = bits + 8; k <= bits + 520; k += 32) {
        last = tight(k);
        if (last.is_exact()) {
            return last;
        }
        if (!lo) {
            const Rational a = floor_to_grid(last.lo(), bits);
            if (a == floor_to_grid(last.hi(), bits)) {
                lo = a;
            }
        }
        if (!hi) {
            const Rational b = ceil_to_grid(last.hi(), bits);
            if (b == ceil_to_grid(last.lo(), bits)) {
                hi = b;
            }
        }
        if (lo && hi) {
            return Interval(*lo, *hi);
        }
    }
    // x sits on a grid point that the enclosures never isolate; round outward.
    return Interval(lo ? *lo : floor_to_grid(last.lo(), bits), hi ? *hi : ceil_to_grid(last.hi(), bits));
}

// arctan(1/x) for integer x >= 2 as an alternating-series bracket of width <= 2^-bits.
inline Interval arctan_inverse(long x, unsigned bits)
{
    const Rational tol(Integer(1), pow2(bits));
    const Rational x2 = Rational(x) * Rational(x);
    Rational power = Rational(1) / Rational(x); // x^-(2k+1)
    Rational sum = 0;
    for (long k = 0;; ++k) {
        const Rational term = power / Rational(2 * k + 1);
        sum += (k % 2 == 0) ? term : Rational(-term);
        power /= x2;
        const Rational next = power / Rational(2 * k + 3);
        if (next <= tol) {
            // The true value lies between sum and sum -/+ next.
            const Rational other = (k % 2 == 0) ? Rational(sum - next) : Rational(sum + next);
            return Interval(std::min(sum, other), std::max(sum, other));
        }
    }
}

// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
inline Interval pi_tight(unsigned bits)
{
    const Interval pi = Interval(16) * arctan_inverse(5, bits + 6) - Interval(4) * arctan_inverse(239, bits + 4);
    return pi.rounded_out(bits + 2);
}

} // namespace detail

/// Rational enclosure of pi of width <= 2^-precision.
inline Interval pi_enclosure(unsigned precision)
{
    return detail::directed_enclosure(detail::pi_tight, precision);
}

/// Enclosure of sqrt(c) for c >= 0, endpoints on the 2^-precision grid (or exact).
inline Interval sqrt_interval(const Interval& c, unsigned precision)
{
    if (c.lo() < 0) {
        throw NotPositive("sqrt of an interval reaching below 0");
    }
    return Interval(detail::sqrt_down(c.lo(), precision), detail::sqrt_up(c.hi(), precision));
}

namespace detail {

struct CosSin {
    Interval cos;
    Interval sin;
};

// cos and sin of an exact rational x, each of width <= 2^-bits.
inline CosSin cos_sin_tight(const Rational& x, unsigned bits)
{
    const unsigned work = bits + 8;
    Interval arg(x);
    const double approx = to_double(x);
    const double turns = std::nearbyint(approx / (2.0 * M_PI));
    if (std::fabs(approx) > 3.0 && turns != 0.0) {
        const Integer m(static_cast<long long>(turns));
        const Interval pi = pi_tight(work + bit_length(m) + 4);
        arg = Interval(x) - Interval(Rational(2 * m)) * pi;
    }
    const Rational mid = arg.is_exact() ? arg.lo() : Rational(ceil_to_grid(arg.midpoint(), work + 4));
    const Rational radius = std::max(abs_of(Rational(arg.hi() - mid)), abs_of(Rational(mid - arg.lo())));

    // Taylor sums at `mid`; Lagrange remainder |mid|^(n+1)/(n+1)! since |cos^(n)|, |sin^(n)| <= 1.
    const Rational tol(Integer(1), pow2(work));
    Rational c_sum = 0;
    Rational s_sum = 0;
    Rational term = 1; // mid^n / n!
    Rational remainder;
    for (unsigned n = 0;; ++n) {
        switch (n % 4) {
            case 0:
                c_sum += term;
                break;
            case 1:
                s_sum += term;
                break;
            case 2:
                c_sum -= term;
                break;
            default:
                s_sum -= term;
                break;
        }
        term = term * mid / Rational(n + 1);
        remainder = abs_of(term);
        if (n > 2 && remainder <= tol) {
            break;
        }
    }
    const Rational slack = remainder + radius;
    auto clamp = [](const Rational& lo, const Rational& hi) {
        return Interval(std::max(lo, Rational(-1)), std::min(hi, Rational(1)));
    };
    return CosSin{clamp(c_sum - slack, c_sum + slack).rounded_out(work), clamp(s_sum - slack, s_sum + slack).rounded_out(work)};
}

// Range enclosure of a 2pi-periodic f over [lo, hi]: endpoint values plus
// every extremum phase + k*pi that the pi enclosure cannot exclude.
inline Interval periodic_range(const Interval& x, unsigned precision, bool is_cos)
{
    const auto endpoint = [&](const Rational& p) {
        return directed_enclosure(
            [&](unsigned k) {
                const CosSin cs = cos_sin_tight(p, k);
                return is_cos ? cs.cos : cs.sin;
            },
            precision);
    };
    const Interval a = endpoint(x.lo());
    const Interval b = endpoint(x.hi());
    Rational lo = std::min(a.lo(), b.lo());
    Rational hi = std::max(a.hi(), b.hi());

    const Interval pi = pi_enclosure(precision);
    // Extrema sit at phase + k*pi with value (-1)^k: phase 0 for cos, pi/2 for sin.
    const Interval phase = is_cos ? Interval(0) : pi * Interval(Rational(1, 2));
    const Integer k_lo = floor_of((x.lo() - phase.hi()) / pi.hi()) - 1;
    const Integer k_hi = ceil_of((x.hi() - phase.lo()) / pi.lo()) + 1;
    if (k_hi - k_lo > 4) {
        return Interval(-1, 1);
    }
    for (Integer k = k_lo; k <= k_hi; ++k) {
        const Interval crit = phase + Interval(Rational(k)) * pi;
        if (intersect(crit, x)) {
            if (k % 2 == 0) {
                hi = 1;
            } else {
                lo = -1;
            }
        }
    }
    return Interval(lo, hi);
}

} // namespace detail

/// Enclosure of cos over a rational interval, endpoints on the 2^-precision grid.
inline Interval cos_interval(const Interval& x, unsigned precision)
{
    if (x.is_zero()) {
        return Interval(1);
    }
    return detail::periodic_range(x, precision, true);
}

inline Interval sin_interval(const Interval& x, unsigned precision)
{
    if (x.is_zero()) {
        return Interval(0);
    }
    return detail::periodic_range(x, precision, false);
}

} // namespace ihull

#endif
