#pragma once

#include <cstdint>
#include <random>

#include "ihull/series.hpp"

// Small seeded generators for property tests.

namespace gen {

using ihull::Interval;
using ihull::LeviCivita;
using ihull::Rational;

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(int lo = -9, int hi = 9, int den_max = 8)
    {
        const int d = integer(1, den_max);
        return Rational(integer(lo * d, hi * d), d);
    }

    Rational nonzero_rational(int lo = -9, int hi = 9, int den_max = 8)
    {
        for (;;) {
            Rational q = rational(lo, hi, den_max);
            if (q != 0) {
                return q;
            }
        }
    }

    // Exponents k/2 in [lo/2, hi/2].
    Rational half_exponent(int lo, int hi) { return Rational(integer(lo, hi), 2); }

    /// Exact series with 1..terms terms, exponents in [-1, 3] on a half-integer grid.
    LeviCivita exact_series(int terms = 3, int min_half_exp = -2, int max_half_exp = 6)
    {
        LeviCivita x;
        const int n = integer(1, terms);
        for (int i = 0; i < n; ++i) {
            x += LeviCivita::monomial(Interval(nonzero_rational(-5, 5, 6)), half_exponent(min_half_exp, max_half_exp));
        }
        return x;
    }

    /// Exact finite series: standard part plus positive-exponent terms.
    LeviCivita exact_finite(bool allow_zero_standard = true)
    {
        LeviCivita x = (allow_zero_standard && integer(0, 3) == 0) ? LeviCivita() : LeviCivita(nonzero_rational(-5, 5, 6));
        const int n = integer(0, 3);
        for (int i = 0; i < n; ++i) {
            x += LeviCivita::monomial(Interval(nonzero_rational(-5, 5, 6)), half_exponent(1, 6));
        }
        return x;
    }

    /// Exact series with a nonzero exactly known leading term.
    LeviCivita exact_nonzero()
    {
        for (;;) {
            LeviCivita x = exact_series();
            if (!x.empty()) {
                return x;
            }
        }
    }

    /// Interval around a rational with a small dyadic radius.
    Interval interval_around(const Rational& c, int bits = 20)
    {
        const Rational r = Rational(integer(0, 3)) / Rational(ihull::pow2(static_cast<unsigned>(bits)));
        return Interval(c - r, c + r);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace gen
