#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hyperint/rational.hpp"

namespace hyperint {

inline bool is_square_free(std::int64_t d) {
    if (d == 0) return false;
    std::int64_t n = d < 0 ? -d : d;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        int e = 0;
        while (n % f == 0) { n /= f; ++e; }
        if (e >= 2) return false;
    }
    return true;
}

/// Element r1 + r2*sqrt(D) of a fixed real or imaginary quadratic field.
/// D is square-free and != 1; when r2 == 0 the value is rational and D is
/// normalized to 0.
struct QuadraticNumber {
    Rational r1;
    Rational r2;
    std::int64_t D = 0;

    QuadraticNumber() = default;
    QuadraticNumber(Rational rational_part) : r1(rational_part) {}
    QuadraticNumber(Rational r1_, Rational r2_, std::int64_t D_) : r1(r1_), r2(r2_), D(D_) {
        if (r2.is_zero()) {
            D = 0;
        } else if (D == 1 || !is_square_free(D)) {
            throw std::domain_error("QuadraticNumber: D must be square-free and != 1");
        }
    }

    bool is_rational() const { return r2.is_zero(); }

    bool in_nonpositive_integers() const {
        return is_rational() && r1.is_integer() && r1.sign() <= 0;
    }

    friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
        return a.r1 == b.r1 && a.r2 == b.r2 && a.D == b.D;
    }

    /// Canonical text form: "n/d" or "n/d+n/d*sqrt(D)" / "n/d-n/d*sqrt(D)".
    std::string str() const {
        if (is_rational()) return r1.str();
        std::string s = r1.str();
        s += (r2.sign() < 0) ? "-" : "+";
        s += r2.abs().str();
        s += "*sqrt(" + std::to_string(D) + ")";
        return s;
    }
};

/// Field norm r1^2 - D*r2^2; zero iff the number is zero.
inline Rational quad_norm(const QuadraticNumber& g) {
    return g.r1 * g.r1 - Rational(g.D) * g.r2 * g.r2;
}

} // namespace hyperint
