#ifndef IHULL_ELEMENTARY_HPP
#define IHULL_ELEMENTARY_HPP

#include "ihull/enclosures.hpp"
#include "ihull/series.hpp"

namespace ihull {

/// Default truncation order and coefficient precision (bits).
inline const Rational kDefaultOrder{8};
inline constexpr unsigned kDefaultPrecision = 64;

/// Square root of a value with strictly positive leading coefficient.
///
/// Writes a = c t^q (1 + u) and returns sqrt(c) t^(q/2) sum binom(1/2, k) u^k.
/// The series is carried far enough that the square of the result agrees
/// with a up to O(t^order).
inline LeviCivita sqrt(const LeviCivita& a, const Rational& order, unsigned precision)
{
    const Term* lead = a.leading();
    if (lead == nullptr || !lead->coeff.strictly_positive()) {
        throw NotPositive("sqrt: leading coefficient is not strictly positive");
    }
    const Rational q = lead->exponent;
    const Interval root = sqrt_interval(lead->coeff, precision);
    const LeviCivita u = a.tail_above(q).shifted(-q).scaled(lead->coeff.reciprocal());

    // binom(1/2, k) = prod_{j<k} (1/2 - j) / k!
    std::vector<Rational> binom{Rational(1)};
    const auto coeff = [&binom](unsigned k) {
        while (binom.size() <= k) {
            const auto j = static_cast<long>(binom.size());
            binom.push_back(binom.back() * (Rational(1, 2) - Rational(j - 1)) / Rational(j));
        }
        return binom[k];
    };
    const LeviCivita series = power_series_in(u, coeff, Rational(order - q));
    return series.shifted(q / 2).scaled(root);
}

/// sqrt for quantities known to be nonnegative, such as squared distances:
/// also accepts exact zero, 0 + O(t^T) and a leading coefficient touching zero.
inline LeviCivita sqrt_nonneg(const LeviCivita& a, const Rational& order, unsigned precision)
{
    if (a.empty()) {
        if (!a.truncation()) {
            return LeviCivita();
        }
        return LeviCivita::big_o(*a.truncation() / 2);
    }
    const Term& lead = a.terms().front();
    if (lead.coeff.hi() < 0) {
        throw NotPositive("sqrt: value is negative");
    }
    if (lead.coeff.lo() <= 0) {
        // The caller vouches that a >= 0, so the leading coefficient lies in
        // [0, hi]; whatever follows it only moves the result by O(t^(next/2)).
        const Order next = a.terms().size() > 1 ? Order(a.terms()[1].exponent) : a.truncation();
        const Interval root = sqrt_interval(Interval(lead.coeff.hi()), precision);
        return LeviCivita::from_terms({Term{lead.exponent / 2, Interval(0, root.hi())}},
                                      next ? Order(*next / 2) : Order());
    }
    return sqrt(a, order, precision);
}

namespace detail {

struct FiniteSplit {
    Interval standard;
    LeviCivita tail;
};

inline FiniteSplit split_finite(const LeviCivita& a, const char* who)
{
    const auto m = classify_magnitude(a);
    if (!is_finite(m)) {
        throw NotFinite(std::string(who) + ": argument classified " + name_of(m));
    }
    return FiniteSplit{a.coefficient_at(Rational(0)), a.tail_above(Rational(0))};
}

inline LeviCivita taylor_cos(const LeviCivita& u, const Rational& order)
{
    std::vector<Rational> c{Rational(1)};
    return power_series_in(
        u,
        [&c](unsigned k) {
            while (c.size() <= k) {
                c.push_back(c.back() / Rational(static_cast<long>(c.size())));
            }
            // u^k / k! with the cosine sign pattern on even k.
            if (k % 2 == 1) {
                return Rational(0);
            }
            return (k % 4 == 0) ? c[k] : Rational(-c[k]);
        },
        order);
}

inline LeviCivita taylor_sin(const LeviCivita& u, const Rational& order)
{
    std::vector<Rational> c{Rational(1)};
    return power_series_in(
        u,
        [&c](unsigned k) {
            while (c.size() <= k) {
                c.push_back(c.back() / Rational(static_cast<long>(c.size())));
            }
            if (k % 2 == 0) {
                return Rational(0);
            }
            return (k % 4 == 1) ? c[k] : Rational(-c[k]);
        },
        order);
}

} // namespace detail

/// cos(s + u) = cos s cos u - sin s sin u for a finite argument split into
/// its standard part s and infinitesimal tail u.
inline LeviCivita cos_enclosure(const LeviCivita& a, const Rational& order, unsigned precision)
{
    const auto [s, u] = detail::split_finite(a, "cos_enclosure");
    const LeviCivita cos_u = detail::taylor_cos(u, order);
    const LeviCivita sin_u = detail::taylor_sin(u, order);
    return cos_u.scaled(cos_interval(s, precision)) - sin_u.scaled(sin_interval(s, precision));
}

/// sin(s + u) = sin s cos u + cos s sin u.
inline LeviCivita sin_enclosure(const LeviCivita& a, const Rational& order, unsigned precision)
{
    const auto [s, u] = detail::split_finite(a, "sin_enclosure");
    const LeviCivita cos_u = detail::taylor_cos(u, order);
    const LeviCivita sin_u = detail::taylor_sin(u, order);
    return cos_u.scaled(sin_interval(s, precision)) + sin_u.scaled(cos_interval(s, precision));
}

/// pi as a constant series.
inline LeviCivita pi_constant(unsigned precision) { return LeviCivita(pi_enclosure(precision)); }

} // namespace ihull

#endif
