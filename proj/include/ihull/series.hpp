#ifndef IHULL_SERIES_HPP
#define IHULL_SERIES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ihull/errors.hpp"
#include "ihull/interval.hpp"
#include "ihull/rational.hpp"

namespace ihull {

/// Extended exponent: a rational or +infinity (nullopt).
using Order = std::optional<Rational>;

inline Order order_min(const Order& a, const Order& b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::min(*a, *b);
}

inline Order order_add(const Order& a, const Order& b)
{
    if (!a || !b) {
        return std::nullopt;
    }
    return Rational(*a + *b);
}

inline bool order_less(const Rational& e, const Order& bound) { return !bound || e < *bound; }

struct Term {
    Rational exponent;
    Interval coeff;
};

/// A truncated Levi-Civita series  sum_i c_i t^{q_i} + O(t^T)  in one fixed
/// positive infinitesimal t, with rational exponents and rational-interval
/// coefficients.
///
/// Stored terms are sorted by strictly increasing exponent, all below the
/// truncation order T, and none has coefficient exactly zero. Only the
/// leading term may have a coefficient interval that straddles zero; a later
/// straddling term is absorbed into the truncation (the value is then known
/// only up to O(t^e) at that exponent).
class LeviCivita {
public:
    LeviCivita() = default;
    LeviCivita(const Rational& c) : LeviCivita(monomial(Interval(c), Rational(0))) {} // NOLINT(implicit)
    LeviCivita(const Interval& c) : LeviCivita(monomial(c, Rational(0))) {}           // NOLINT(implicit)
    LeviCivita(long c) : LeviCivita(Rational(c)) {}                                  // NOLINT(implicit)
    LeviCivita(int c) : LeviCivita(Rational(c)) {}                                   // NOLINT(implicit)

    static LeviCivita monomial(const Interval& coeff, const Rational& exponent)
    {
        return from_terms({Term{exponent, coeff}}, std::nullopt);
    }

    /// t^exponent.
    static LeviCivita t(const Rational& exponent = Rational(1)) { return monomial(Interval(1), exponent); }

    /// 0 + O(t^order).
    static LeviCivita big_o(const Rational& order)
    {
        LeviCivita x;
        x.truncation_ = order;
        return x;
    }

    /// Builds a canonical value from arbitrary terms (any order, duplicates merged).
    static LeviCivita from_terms(std::vector<Term> terms, Order truncation)
    {
        std::map<Rational, Interval> merged;
        for (auto& term : terms) {
            auto it = merged.find(term.exponent);
            if (it == merged.end()) {
                merged.emplace(term.exponent, term.coeff);
            } else {
                it->second += term.coeff;
            }
        }
        return from_map(std::move(merged), std::move(truncation));
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Order& truncation() const noexcept { return truncation_; }

    bool empty() const noexcept { return terms_.empty(); }

    /// No truncation and every coefficient exact.
    bool is_exact() const
    {
        return !truncation_ &&
               std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.coeff.is_exact(); });
    }

    bool is_exact_zero() const { return terms_.empty() && !truncation_; }

    /// Smallest stored exponent, or the truncation order when empty (+inf for exact zero).
    Order lead_order() const
    {
        if (!terms_.empty()) {
            return terms_.front().exponent;
        }
        return truncation_;
    }

    const Term* leading() const { return terms_.empty() ? nullptr : &terms_.front(); }

    Interval coefficient_at(const Rational& exponent) const
    {
        for (const auto& term : terms_) {
            if (term.exponent == exponent) {
                return term.coeff;
            }
        }
        return Interval(0);
    }

    /// Drops all terms at exponent >= order and lowers the truncation to it.
    LeviCivita truncated(const Rational& order) const
    {
        std::vector<Term> kept;
        for (const auto& term : terms_) {
            if (term.exponent < order) {
                kept.push_back(term);
            }
        }
        return from_sorted(std::move(kept), order_min(truncation_, order));
    }

    /// Same terms with the O(t^T) remainder removed.
    LeviCivita without_truncation() const { return from_sorted(terms_, std::nullopt); }

    /// Terms with exponent strictly above `exponent`, keeping the truncation.
    LeviCivita tail_above(const Rational& exponent) const
    {
        std::vector<Term> kept;
        for (const auto& term : terms_) {
            if (term.exponent > exponent) {
                kept.push_back(term);
            }
        }
        return from_sorted(std::move(kept), truncation_);
    }

    /// x * t^delta.
    LeviCivita shifted(const Rational& delta) const
    {
        std::vector<Term> moved = terms_;
        for (auto& term : moved) {
            term.exponent += delta;
        }
        return from_sorted(std::move(moved), truncation_ ? Order(Rational(*truncation_ + delta)) : std::nullopt);
    }

    LeviCivita scaled(const Interval& factor) const
    {
        if (factor.is_zero()) {
            return LeviCivita();
        }
        std::vector<Term> out = terms_;
        for (auto& term : out) {
            term.coeff = term.coeff * factor;
        }
        return from_sorted(std::move(out), truncation_);
    }

    LeviCivita operator-() const { return scaled(Interval(-1)); }

    friend LeviCivita operator+(const LeviCivita& a, const LeviCivita& b)
    {
        const Order trunc = order_min(a.truncation_, b.truncation_);
        std::map<Rational, Interval> merged;
        for (const auto* side : {&a, &b}) {
            for (const auto& term : side->terms_) {
                if (!order_less(term.exponent, trunc)) {
                    continue;
                }
                auto it = merged.find(term.exponent);
                if (it == merged.end()) {
                    merged.emplace(term.exponent, term.coeff);
                } else {
                    it->second += term.coeff;
                }
            }
        }
        return from_map(std::move(merged), trunc);
    }

    friend LeviCivita operator-(const LeviCivita& a, const LeviCivita& b) { return a + (-b); }

    friend LeviCivita operator*(const LeviCivita& a, const LeviCivita& b)
    {
        // An O(t^T) remainder of one factor meets the leading part of the other.
        const Order trunc = order_min(order_add(a.truncation_, b.lead_order()), order_add(b.truncation_, a.lead_order()));
        std::map<Rational, Interval> merged;
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                Rational e = x.exponent + y.exponent;
                if (!order_less(e, trunc)) {
                    continue;
                }
                Interval c = x.coeff * y.coeff;
                auto it = merged.find(e);
                if (it == merged.end()) {
                    merged.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                }
            }
        }
        return from_map(std::move(merged), trunc);
    }

    LeviCivita& operator+=(const LeviCivita& b) { return *this = *this + b; }
    LeviCivita& operator-=(const LeviCivita& b) { return *this = *this - b; }
    LeviCivita& operator*=(const LeviCivita& b) { return *this = *this * b; }

    /// Structural identity: same terms, same coefficient intervals, same truncation.
    friend bool identical(const LeviCivita& a, const LeviCivita& b)
    {
        if (a.truncation_ != b.truncation_ || a.terms_.size() != b.terms_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) {
                return false;
            }
        }
        return true;
    }

private:
    static LeviCivita from_map(std::map<Rational, Interval> merged, Order truncation)
    {
        std::vector<Term> sorted;
        sorted.reserve(merged.size());
        for (auto& [e, c] : merged) {
            sorted.push_back(Term{e, std::move(c)});
        }
        return from_sorted(std::move(sorted), std::move(truncation));
    }

    static LeviCivita from_sorted(std::vector<Term> sorted, Order truncation)
    {
        LeviCivita x;
        x.truncation_ = std::move(truncation);
        for (auto& term : sorted) {
            if (!order_less(term.exponent, x.truncation_)) {
                break;
            }
            if (term.coeff.is_zero()) {
                continue;
            }
            if (!x.terms_.empty() && term.coeff.straddles_zero()) {
                x.truncation_ = term.exponent;
                break;
            }
            x.terms_.push_back(std::move(term));
        }
        return x;
    }

    std::vector<Term> terms_;
    Order truncation_;
};

enum class Ordering { LT, EQ, GT };

enum class Tri { False, True, Unknown };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

enum class MagnitudeClass { Infinitesimal, Appreciable, Infinite, Unknown };

inline const char* name_of(MagnitudeClass m)
{
    switch (m) {
        case MagnitudeClass::Infinitesimal:
            return "infinitesimal";
        case MagnitudeClass::Appreciable:
            return "appreciable";
        case MagnitudeClass::Infinite:
            return "infinite";
        case MagnitudeClass::Unknown:
            return "unknown";
    }
    return "unknown";
}

inline const char* name_of(Tri v)
{
    switch (v) {
        case Tri::True:
            return "true";
        case Tri::False:
            return "false";
        case Tri::Unknown:
            return "unknown";
    }
    return "unknown";
}

inline const char* name_of(Ordering o)
{
    switch (o) {
        case Ordering::LT:
            return "LT";
        case Ordering::EQ:
            return "EQ";
        case Ordering::GT:
            return "GT";
    }
    return "?";
}

/// Sign of x: -1, 0 (exact zero only) or +1. Throws Indeterminate when the
/// value is 0 + O(t^T) or its leading coefficient straddles zero.
inline int sign_of(const LeviCivita& x)
{
    if (x.empty()) {
        if (!x.truncation()) {
            return 0;
        }
        throw Indeterminate("sign of 0 + O(t^T) is undecidable", *x.truncation());
    }
    const Term& lead = x.terms().front();
    const auto s = lead.coeff.sign();
    if (!s) {
        throw Indeterminate("leading coefficient straddles zero", lead.exponent);
    }
    return *s;
}

inline Ordering compare(const LeviCivita& a, const LeviCivita& b)
{
    const LeviCivita diff = a - b;
    if (diff.empty()) {
        if (!diff.truncation() && a.is_exact() && b.is_exact()) {
            return Ordering::EQ;
        }
        throw Indeterminate("difference is 0 + O(t^T)", diff.truncation());
    }
    return sign_of(diff) > 0 ? Ordering::GT : Ordering::LT;
}

/// compare() folded into a three-valued "a > b".
inline Tri greater_than(const LeviCivita& a, const LeviCivita& b)
{
    try {
        return tri_of(compare(a, b) == Ordering::GT);
    } catch (const Indeterminate&) {
        return Tri::Unknown;
    }
}

/// |x|. When the leading coefficient c straddles zero the result is
/// [0, |c|] t^e + O(t^e'), e' the next exponent present in x.
inline LeviCivita abs(const LeviCivita& x)
{
    if (x.empty()) {
        return x;
    }
    const Term& lead = x.terms().front();
    if (lead.coeff.straddles_zero()) {
        const Order next = x.terms().size() > 1 ? Order(x.terms()[1].exponent) : x.truncation();
        return LeviCivita::from_terms({Term{lead.exponent, Interval(0, lead.coeff.magnitude())}}, next);
    }
    return sign_of(x) < 0 ? -x : x;
}

inline MagnitudeClass classify_magnitude(const LeviCivita& x)
{
    if (x.empty()) {
        if (!x.truncation() || *x.truncation() > 0) {
            return MagnitudeClass::Infinitesimal;
        }
        return MagnitudeClass::Unknown;
    }
    const Term& lead = x.terms().front();
    if (lead.exponent > 0) {
        return MagnitudeClass::Infinitesimal;
    }
    if (lead.coeff.straddles_zero()) {
        return MagnitudeClass::Unknown;
    }
    return lead.exponent < 0 ? MagnitudeClass::Infinite : MagnitudeClass::Appreciable;
}

inline bool is_finite(MagnitudeClass m)
{
    return m == MagnitudeClass::Infinitesimal || m == MagnitudeClass::Appreciable;
}

/// Three-valued finiteness: unknown magnitudes give Tri::Unknown.
inline Tri finite_tri(const LeviCivita& x)
{
    const auto m = classify_magnitude(x);
    if (m == MagnitudeClass::Unknown) {
        return Tri::Unknown;
    }
    return tri_of(is_finite(m));
}

/// The real infinitely close to a finite x: its exponent-0 coefficient.
inline Interval standard_part(const LeviCivita& x)
{
    const auto m = classify_magnitude(x);
    if (!is_finite(m)) {
        throw NotFinite(std::string("standard part of a value classified ") + name_of(m));
    }
    return x.coefficient_at(Rational(0));
}

inline Tri halo_equal(const LeviCivita& a, const LeviCivita& b)
{
    switch (classify_magnitude(a - b)) {
        case MagnitudeClass::Infinitesimal:
            return Tri::True;
        case MagnitudeClass::Appreciable:
        case MagnitudeClass::Infinite:
            return Tri::False;
        case MagnitudeClass::Unknown:
            break;
    }
    return Tri::Unknown;
}

/// sum_k coeff(k) u^k truncated at `order`, for u with positive leading
/// exponent. `coeff` returns the exact k-th series coefficient.
inline LeviCivita power_series_in(const LeviCivita& u, const std::function<Rational(unsigned)>& coeff,
                                  const Rational& order)
{
    if (u.empty() && !u.truncation()) {
        return LeviCivita(coeff(0));
    }
    if (auto lead = u.lead_order(); lead && *lead <= 0) {
        throw PreconditionViolated("power series argument must be infinitesimal");
    }
    LeviCivita sum(coeff(0));
    LeviCivita power(1);
    for (unsigned k = 1;; ++k) {
        power = (power * u).truncated(order);
        const Rational c = coeff(k);
        if (c != 0) {
            sum += power.scaled(Interval(c));
        }
        if (power.empty()) {
            break;
        }
    }
    return sum.truncated(order);
}

/// Multiplicative inverse. With a = c t^q (1 + u), returns
/// c^-1 t^-q sum (-u)^k, expanded far enough that a * inverse(a) = 1 + O(t^order).
inline LeviCivita inverse(const LeviCivita& a, const Rational& order)
{
    const Term* lead = a.leading();
    if (lead == nullptr) {
        throw ZeroOrUnknownLeading("inverse of a value with no leading term");
    }
    if (lead->coeff.contains_zero()) {
        throw ZeroOrUnknownLeading("inverse: leading coefficient " + to_string(lead->coeff) + " contains 0");
    }
    const Rational q = lead->exponent;
    const Interval c_inv = lead->coeff.reciprocal();
    const LeviCivita u = a.tail_above(q).shifted(-q).scaled(c_inv);

    if (u.empty() && !u.truncation()) {
        return LeviCivita::monomial(c_inv, -q);
    }
    const LeviCivita neg_u = -u;
    const LeviCivita series = power_series_in(neg_u, [](unsigned) { return Rational(1); }, order);
    return series.shifted(-q).scaled(c_inv);
}

namespace detail {

// Simplest rational strictly inside (a, b); `b` absent means +infinity.
inline Rational simplest_between(const Rational& a, const std::optional<Rational>& b)
{
    if (a < 0 && (!b || *b > 0)) {
        return Rational(0);
    }
    if (b && *b <= 0) {
        return -simplest_between(Rational(-*b), Rational(-a));
    }
    const Integer n = floor_of(a);
    const Rational next(n + 1);
    if (!b || next < *b) {
        return next;
    }
    // No integer strictly inside: a and b share the integer part n (b may equal n+1).
    const Rational lo_frac = a - Rational(n);
    const Rational hi_frac = *b - Rational(n);
    // 1/x maps (lo_frac, hi_frac) to (1/hi_frac, 1/lo_frac).
    const std::optional<Rational> upper = lo_frac == 0 ? std::nullopt : std::optional<Rational>(Rational(1 / lo_frac));
    const Rational inner = simplest_between(Rational(1 / hi_frac), upper);
    return Rational(n) + 1 / inner;
}

} // namespace detail

/// Finds an exact value q (rational coefficients, no truncation) with
/// |y - q| < eps. Throws Indeterminate when eps > 0 cannot be decided or y is
/// not known precisely enough below the leading exponent of eps.
inline LeviCivita approximate_within(const LeviCivita& y, const LeviCivita& eps)
{
    if (compare(eps, LeviCivita()) != Ordering::GT) {
        throw PreconditionViolated("approximate_within: eps must be positive");
    }
    const Term& lead = eps.terms().front();
    const Rational& e = lead.exponent;
    const Rational& margin = lead.coeff.lo();

    if (y.truncation() && *y.truncation() <= e) {
        throw Indeterminate("approximate_within: value truncated before the tolerance exponent", *y.truncation());
    }
    std::vector<Term> exact;
    for (const auto& term : y.terms()) {
        if (term.exponent < e) {
            if (!term.coeff.is_exact()) {
                throw Indeterminate("approximate_within: inexact coefficient above the tolerance", term.exponent);
            }
            exact.push_back(term);
        } else if (term.exponent == e) {
            const Interval& k = term.coeff;
            if (k.is_exact()) {
                exact.push_back(term);
                continue;
            }
            // Any m with |m - x| < margin for every x in k.
            const Rational lo = k.hi() - margin;
            const Rational hi = k.lo() + margin;
            if (!(lo < hi)) {
                throw Indeterminate("approximate_within: coefficient enclosure wider than the tolerance", e);
            }
            exact.push_back(Term{e, Interval(detail::simplest_between(lo, hi))});
        }
    }
    return LeviCivita::from_terms(std::move(exact), std::nullopt);
}

/// x^n for integer n (negative powers go through inverse at `order`).
inline LeviCivita pow(const LeviCivita& x, long n, const Rational& order)
{
    if (n < 0) {
        return pow(inverse(x, order), -n, order);
    }
    LeviCivita result(1);
    LeviCivita base = x;
    auto k = static_cast<unsigned long>(n);
    while (k != 0) {
        if ((k & 1UL) != 0) {
            result *= base;
        }
        k >>= 1;
        if (k != 0) {
            base *= base;
        }
    }
    return result;
}

} // namespace ihull

#endif
