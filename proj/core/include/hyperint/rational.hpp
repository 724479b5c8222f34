#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperint {

/// Exact fraction over int64 with checked __int128 intermediates.
///
/// Every value is kept reduced with a positive denominator.  All arithmetic
/// and comparisons are exact; anything that would not fit back into int64
/// after reduction throws std::overflow_error.  Floating point never appears.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    /// Largest integer <= *this.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_, r = num_ % den_;
        return (r < 0) ? q - 1 : q;
    }
    /// Smallest integer >= *this.
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_, r = num_ % den_;
        return (r > 0) ? q + 1 : q;
    }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    /// Canonical "num/den" form, e.g. "3/4", "-7/1".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    static std::int64_t narrow(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        return static_cast<std::int64_t>(v);
    }

    static Rational from_i128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        if (num == 0) den = 1;
        i128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
        Rational r;
        r.num_ = narrow(num);
        r.den_ = narrow(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) {
        *this = from_i128(num, den);
    }
};

/// The unique value in (0,1] congruent to x modulo the integers.
inline Rational frac_bracket(const Rational& x) {
    return x - Rational(x.ceil() - 1);
}

/// Total order on the rationals: x comes before y when its bracket value is
/// smaller, with ties broken by x >= y.
inline bool christol_leq(const Rational& x, const Rational& y) {
    Rational bx = frac_bracket(x), by = frac_bracket(y);
    return bx < by || (bx == by && x >= y);
}

/// lcm of the (reduced) denominators.  Throws on an empty list.
inline std::int64_t lcm_denominators(const std::vector<Rational>& xs) {
    if (xs.empty()) throw std::invalid_argument("lcm_denominators: empty list");
    __int128 acc = 1;
    for (const Rational& x : xs) {
        std::int64_t g = std::gcd(static_cast<std::int64_t>(acc % x.den()), x.den());
        acc = acc / g * x.den();
        if (acc > INT64_MAX) throw std::overflow_error("lcm_denominators: lcm exceeds 64 bits");
    }
    return static_cast<std::int64_t>(acc);
}

} // namespace hyperint
