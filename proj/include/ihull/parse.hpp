#ifndef IHULL_PARSE_HPP
#define IHULL_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ihull/elementary.hpp"
#include "ihull/errors.hpp"
#include "ihull/series.hpp"

// Number literals and arithmetic expressions over them.
//
//   number   := term (("+"|"-") term)*
//   term     := coeff | coeff "t" ("^" exponent)? | "t" ("^" exponent)?
//   coeff    := integer ("/" integer)?
//   exponent := integer ("/" integer)?
//
// The expression layer adds parentheses, "*", "/", integer powers of
// arbitrary sub-expressions, implicit multiplication ("2(1+t)"), interval
// coefficients "[lo, hi]", remainders "O(t^q)", the constant "pi" and the
// functions sqrt, cos, sin and inv. A literal "a/b" written without spaces is
// a single rational coefficient, so "3/2t" is (3/2)t as in the grammar above.

namespace ihull {

struct EvalOptions {
    Rational order = kDefaultOrder;
    unsigned precision = kDefaultPrecision;
};

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, EvalOptions options) : text_(text), options_(std::move(options)) {}

    LeviCivita parse_all()
    {
        LeviCivita value = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool peek_digit()
    {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0;
    }

    bool peek_identifier()
    {
        skip_space();
        return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0;
    }

    Integer integer_token()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    // integer ("/" integer)? with no whitespace around the slash.
    Rational rational_token()
    {
        const Integer num = integer_token();
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0) {
            ++pos_;
            const std::size_t at = pos_;
            const Integer den = integer_token();
            if (den == 0) {
                pos_ = at;
                fail("zero denominator");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    Rational signed_rational()
    {
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        const Rational r = rational_token();
        return negative ? Rational(-r) : r;
    }

    std::string identifier()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    LeviCivita expression()
    {
        LeviCivita value = product();
        for (;;) {
            if (accept('+')) {
                value += product();
            } else if (accept('-')) {
                value -= product();
            } else {
                return value;
            }
        }
    }

    bool starts_implicit_factor() { return peek('(') || peek('[') || peek_identifier(); }

    LeviCivita product()
    {
        LeviCivita value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                const LeviCivita divisor = unary();
                try {
                    value *= inverse(divisor, options_.order);
                } catch (const ZeroOrUnknownLeading&) {
                    pos_ = at;
                    fail("division by zero or by a value with unknown leading sign");
                }
            } else if (starts_implicit_factor()) {
                value *= power();
            } else {
                return value;
            }
        }
    }

    LeviCivita unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    LeviCivita power()
    {
        bool is_monomial_t = false;
        LeviCivita base = atom(is_monomial_t);
        if (!accept('^')) {
            return base;
        }
        const std::size_t at = pos_;
        const Rational exponent = peek('(') ? parenthesised_exponent() : signed_rational();
        if (is_monomial_t) {
            return LeviCivita::t(exponent);
        }
        if (!is_integer(exponent)) {
            pos_ = at;
            fail("fractional power of an expression other than t");
        }
        const long n = numerator_of(exponent).convert_to<long>();
        return pow(base, n, options_.order);
    }

    Rational parenthesised_exponent()
    {
        expect('(');
        const Rational r = signed_rational();
        expect(')');
        return r;
    }

    LeviCivita atom(bool& is_monomial_t)
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        if (peek_digit()) {
            return LeviCivita(rational_token());
        }
        if (accept('(')) {
            LeviCivita inner = expression();
            expect(')');
            return inner;
        }
        if (accept('[')) {
            const Rational lo = signed_rational();
            expect(',');
            const Rational hi = signed_rational();
            expect(']');
            if (hi < lo) {
                fail("interval with lo > hi");
            }
            return LeviCivita(Interval(lo, hi));
        }
        if (peek_identifier()) {
            const std::size_t at = pos_;
            const std::string name = identifier();
            if (name == "t") {
                is_monomial_t = true;
                return LeviCivita::t();
            }
            if (name == "pi") {
                return pi_constant(options_.precision);
            }
            if (name == "O") {
                return remainder_term();
            }
            if (name == "sqrt" || name == "cos" || name == "sin" || name == "inv") {
                expect('(');
                const LeviCivita arg = expression();
                expect(')');
                try {
                    if (name == "sqrt") {
                        return sqrt_nonneg(arg, options_.order, options_.precision);
                    }
                    if (name == "cos") {
                        return cos_enclosure(arg, options_.order, options_.precision);
                    }
                    if (name == "sin") {
                        return sin_enclosure(arg, options_.order, options_.precision);
                    }
                    return inverse(arg, options_.order);
                } catch (const Indeterminate&) {
                    throw;
                } catch (const Error& e) {
                    pos_ = at;
                    fail(name + ": " + e.what());
                }
            }
            pos_ = at;
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    // O(1), O(t), O(t^q)
    LeviCivita remainder_term()
    {
        expect('(');
        Rational order;
        if (peek_digit()) {
            const std::size_t at = pos_;
            if (rational_token() != 1) {
                pos_ = at;
                fail("O(...) takes 1, t or t^q");
            }
            order = 0;
        } else {
            const std::size_t at = pos_;
            if (identifier() != "t") {
                pos_ = at;
                fail("O(...) takes 1, t or t^q");
            }
            order = accept('^') ? (peek('(') ? parenthesised_exponent() : signed_rational()) : Rational(1);
        }
        expect(')');
        return LeviCivita::big_o(order);
    }

    std::string_view text_;
    EvalOptions options_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses and evaluates a number literal or expression.
inline LeviCivita parse_number(std::string_view text, const EvalOptions& options = {})
{
    return detail::ExpressionParser(text, options).parse_all();
}

/// Parses "(EXPR, EXPR, ...)" into its coordinates.
inline std::vector<LeviCivita> parse_point(std::string_view text, const EvalOptions& options = {})
{
    std::size_t begin = 0;
    while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin])) != 0) {
        ++begin;
    }
    std::size_t end = text.size();
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])) != 0) {
        --end;
    }
    if (begin >= end || text[begin] != '(' || text[end - 1] != ')') {
        throw ParseError("a point must look like \"(x, y)\"", begin);
    }
    std::vector<LeviCivita> coords;
    int depth = 0;
    std::size_t field = begin + 1;
    for (std::size_t i = begin + 1; i + 1 < end; ++i) {
        const char c = text[i];
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
            if (depth < 0) {
                throw ParseError("unbalanced ')'", i);
            }
        } else if (c == ',' && depth == 0) {
            try {
                coords.push_back(parse_number(text.substr(field, i - field), options));
            } catch (const ParseError& e) {
                throw ParseError(std::string("coordinate ") + std::to_string(coords.size() + 1) + ": " + e.message(),
                                 field + e.position());
            }
            field = i + 1;
        }
    }
    if (depth != 0) {
        throw ParseError("unbalanced brackets", end - 1);
    }
    try {
        coords.push_back(parse_number(text.substr(field, end - 1 - field), options));
    } catch (const ParseError& e) {
        throw ParseError(std::string("coordinate ") + std::to_string(coords.size() + 1) + ": " + e.message(),
                         field + e.position());
    }
    if (coords.size() < 2) {
        throw ParseError("a point needs at least two coordinates", begin);
    }
    return coords;
}

} // namespace ihull

#endif
