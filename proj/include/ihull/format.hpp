#ifndef IHULL_FORMAT_HPP
#define IHULL_FORMAT_HPP

#include <ostream>
#include <string>

#include "ihull/series.hpp"

namespace ihull {

namespace detail {

inline std::string monomial_suffix(const Rational& exponent)
{
    if (exponent == 0) {
        return "";
    }
    if (exponent == 1) {
        return "t";
    }
    return "t^" + to_string(exponent);
}

} // namespace detail

/// Renders in the literal grammar, e.g. "1 - t^2", "t^-1", "3/2 + 5t^1/2",
/// "1 + t + O(t^3)". Inexact coefficients print as "[lo, hi]".
inline std::string to_string(const LeviCivita& x)
{
    std::string out;
    bool first = true;
    for (const auto& term : x.terms()) {
        const std::string suffix = detail::monomial_suffix(term.exponent);
        if (term.coeff.is_exact()) {
            const Rational& v = term.coeff.lo();
            const bool negative = v < 0;
            const Rational mag = abs_of(v);
            if (first) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            if (mag != 1 || suffix.empty()) {
                out += to_string(mag);
            }
            out += suffix;
        } else {
            out += first ? "" : " + ";
            out += to_string(term.coeff) + suffix;
        }
        first = false;
    }
    if (x.truncation()) {
        out += first ? "" : " + ";
        out += "O(" + (*x.truncation() == 0 ? std::string("1") : detail::monomial_suffix(*x.truncation())) + ")";
        first = false;
    }
    return first ? std::string("0") : out;
}

/// Human-oriented rendering with decimal coefficients.
inline std::string to_decimal(const LeviCivita& x, unsigned digits = 12)
{
    std::string out;
    bool first = true;
    for (const auto& term : x.terms()) {
        out += first ? "" : " + ";
        const std::string suffix = detail::monomial_suffix(term.exponent);
        out += to_decimal(term.coeff, digits);
        if (!suffix.empty()) {
            out += "*" + suffix;
        }
        first = false;
    }
    if (x.truncation()) {
        out += first ? "" : " + ";
        out += "O(" + (*x.truncation() == 0 ? std::string("1") : detail::monomial_suffix(*x.truncation())) + ")";
        first = false;
    }
    return first ? std::string("0") : out;
}

inline std::ostream& operator<<(std::ostream& os, const LeviCivita& x) { return os << to_string(x); }

inline std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

} // namespace ihull

#endif
