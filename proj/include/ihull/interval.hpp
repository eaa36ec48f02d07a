#ifndef IHULL_INTERVAL_HPP
#define IHULL_INTERVAL_HPP

#include <algorithm>
#include <optional>
#include <string>

#include "ihull/errors.hpp"
#include "ihull/rational.hpp"

namespace ihull {

/// Closed rational interval [lo, hi]. A degenerate interval is an exact value.
class Interval {
public:
    Interval() = default;
    Interval(const Rational& value) : lo_(value), hi_(value) {} // NOLINT(implicit)
    Interval(long value) : lo_(value), hi_(value) {}             // NOLINT(implicit)
    Interval(int value) : lo_(value), hi_(value) {}              // NOLINT(implicit)

    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
    {
        if (hi_ < lo_) {
            throw PreconditionViolated("interval with lo > hi");
        }
    }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }

    bool is_exact() const { return lo_ == hi_; }
    bool is_zero() const { return lo_ == 0 && hi_ == 0; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return contains(Rational(0)); }
    /// Contains zero without being exactly zero.
    bool straddles_zero() const { return contains_zero() && !is_zero(); }
    bool strictly_positive() const { return lo_ > 0; }
    bool strictly_negative() const { return hi_ < 0; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    Rational magnitude() const { return std::max(abs_of(lo_), abs_of(hi_)); }

    /// +1 / -1 when the sign is decided, 0 for exact zero, nullopt when straddling.
    std::optional<int> sign() const
    {
        if (is_zero()) {
            return 0;
        }
        if (strictly_positive()) {
            return 1;
        }
        if (strictly_negative()) {
            return -1;
        }
        return std::nullopt;
    }

    Interval operator-() const { return Interval(-hi_, -lo_); }

    friend Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_); }
    friend Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_); }

    friend Interval operator*(const Interval& a, const Interval& b)
    {
        if (a.is_exact() && b.is_exact()) {
            return Interval(Rational(a.lo_ * b.lo_));
        }
        Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
        return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
    }

    /// Reciprocal; the interval must exclude zero.
    Interval reciprocal() const
    {
        if (contains_zero()) {
            throw ZeroOrUnknownLeading("reciprocal of an interval containing 0");
        }
        return Interval(Rational(1 / hi_), Rational(1 / lo_));
    }

    friend Interval operator/(const Interval& a, const Interval& b) { return a * b.reciprocal(); }

    Interval& operator+=(const Interval& b) { return *this = *this + b; }
    Interval& operator-=(const Interval& b) { return *this = *this - b; }
    Interval& operator*=(const Interval& b) { return *this = *this * b; }

    /// Square with the tighter even-power enclosure.
    Interval square() const
    {
        if (is_exact()) {
            return Interval(Rational(lo_ * lo_));
        }
        const Rational a = lo_ * lo_;
        const Rational b = hi_ * hi_;
        if (contains_zero()) {
            return Interval(Rational(0), std::max(a, b));
        }
        return Interval(std::min(a, b), std::max(a, b));
    }

    /// Outward rounding of both endpoints to the dyadic grid 2^-bits; exact values are kept.
    Interval rounded_out(unsigned bits) const
    {
        if (is_exact()) {
            return *this;
        }
        return Interval(floor_to_grid(lo_, bits), ceil_to_grid(hi_, bits));
    }

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
    Rational lo_{0};
    Rational hi_{0};
};

inline std::optional<Interval> intersect(const Interval& a, const Interval& b)
{
    const Rational lo = std::max(a.lo(), b.lo());
    const Rational hi = std::min(a.hi(), b.hi());
    if (hi < lo) {
        return std::nullopt;
    }
    return Interval(lo, hi);
}

inline Interval hull_of(const Interval& a, const Interval& b)
{
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline std::string to_string(const Interval& x)
{
    if (x.is_exact()) {
        return to_string(x.lo());
    }
    return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

inline std::string to_decimal(const Interval& x, unsigned digits = 12)
{
    if (x.is_exact()) {
        return to_decimal(x.lo(), digits);
    }
    return "[" + to_decimal(x.lo(), digits) + ", " + to_decimal(x.hi(), digits) + "]";
}

} // namespace ihull

#endif
