#ifndef IHULL_RATIONAL_HPP
#define IHULL_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace ihull {

/// Arbitrary-precision integer and rational scalars. The GMP backend keeps
/// every fraction in lowest terms with a positive denominator.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        q -= 1;
    }
    return q;
}

inline Integer floor_of(const Rational& q) { return floor_div(numerator_of(q), denominator_of(q)); }

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

inline Integer pow2(unsigned bits) { return Integer(1) << bits; }

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Largest multiple of 2^-bits that is <= q.
inline Rational floor_to_grid(const Rational& q, unsigned bits)
{
    const Integer scale = pow2(bits);
    return Rational(floor_of(q * scale), scale);
}

// Smallest multiple of 2^-bits that is >= q.
inline Rational ceil_to_grid(const Rational& q, unsigned bits)
{
    const Integer scale = pow2(bits);
    return Rational(ceil_of(q * scale), scale);
}

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Prints "n" or "n/d".
inline std::string to_string(const Rational& q)
{
    return q.str();
}

/// Decimal rendering with `digits` fractional digits, truncated toward zero.
inline std::string to_decimal(const Rational& q, unsigned digits = 12)
{
    const bool neg = q < 0;
    const Rational a = abs_of(q);
    Integer scale = 1;
    for (unsigned i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const Integer scaled = floor_of(a * scale);
    const Integer whole = scaled / scale;
    std::string frac = Integer(scaled % scale).str();
    if (frac.size() < digits) {
        frac.insert(0, digits - frac.size(), '0');
    }
    std::string out = neg ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        out += "." + frac;
    }
    return out;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion of a finite double.
inline Rational from_double(double x) { return Rational(x); }

} // namespace ihull

#endif
