#include "hyperint/parser.hpp"

#include <cctype>
#include <optional>

namespace hyperint {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return !done() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) { ++pos_; return true; }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(std::string("expected ") + what, pos_);
    }

    bool accept_literal(std::string_view lit) {
        skip_ws();
        if (text_.substr(pos_, lit.size()) == lit) { pos_ += lit.size(); return true; }
        return false;
    }

    std::int64_t digits(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        std::int64_t value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int d = text_[pos_] - '0';
            if (value > (INT64_MAX - d) / 10) throw parse_error("number too large", start);
            value = value * 10 + d;
            ++pos_;
        }
        if (pos_ == start) throw parse_error(std::string("expected ") + what, pos_);
        return value;
    }

    // ["-"] digits ["/" digits]
    Rational rational() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = accept('-');
        std::int64_t num = digits("a number");
        std::int64_t den = 1;
        if (accept('/')) {
            den = digits("a denominator");
            if (den == 0) throw parse_error("zero denominator", start);
        }
        return Rational(negative ? -num : num, den);
    }

    // "sqrt(" [-] digits ")"
    std::int64_t sqrt_argument() {
        skip_ws();
        std::size_t start = pos_;
        if (!accept_literal("sqrt(")) throw parse_error("expected sqrt(", start);
        bool negative = accept('-');
        std::int64_t value = digits("an integer under sqrt");
        expect(')', "')'");
        return negative ? -value : value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

QuadraticNumber parse_term(Cursor& cur) {
    std::size_t start = cur.pos();
    Rational first = cur.rational();
    Rational rational_part(0), coeff(0);
    std::optional<std::int64_t> D;

    if (cur.accept('*')) {
        // rational*sqrt(D)
        coeff = first;
        D = cur.sqrt_argument();
    } else if (cur.peek_is('+') || cur.peek_is('-')) {
        bool minus = cur.accept('-');
        if (!minus) cur.expect('+', "'+'");
        rational_part = first;
        Rational magnitude = cur.rational();
        coeff = minus ? -magnitude : magnitude;
        cur.expect('*', "'*' before sqrt");
        D = cur.sqrt_argument();
    } else {
        rational_part = first;
    }

    if (!D) return QuadraticNumber(rational_part);
    if (coeff.is_zero()) return QuadraticNumber(rational_part);
    try {
        return QuadraticNumber(rational_part, coeff, *D);
    } catch (const std::domain_error& e) {
        throw parse_error(e.what(), start);
    }
}

} // namespace

std::vector<QuadraticNumber> parse_parameters(std::string_view text) {
    Cursor cur(text);
    std::vector<QuadraticNumber> out;
    std::optional<std::int64_t> D;
    for (;;) {
        std::size_t start = cur.pos();
        QuadraticNumber term = parse_term(cur);
        if (term.in_nonpositive_integers())
            throw parse_error("entry " + term.str() + " is a nonpositive integer", start);
        if (!term.is_rational()) {
            if (D && *D != term.D)
                throw parse_error("mixed sqrt arguments " + std::to_string(*D) + " and " +
                                      std::to_string(term.D),
                                  start);
            D = term.D;
        }
        out.push_back(term);
        if (!cur.accept(',')) break;
    }
    cur.skip_ws();
    if (!cur.done()) throw parse_error("unexpected trailing input", cur.pos());
    if (out.empty()) throw parse_error("empty parameter list", 0);
    return out;
}

Rational parse_rational(std::string_view text) {
    Cursor cur(text);
    Rational value = cur.rational();
    cur.skip_ws();
    if (!cur.done()) throw parse_error("unexpected trailing input", cur.pos());
    return value;
}

} // namespace hyperint
