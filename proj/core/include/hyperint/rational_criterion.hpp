#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperint/rational.hpp"
#include "hyperint/report.hpp"

namespace hyperint {

/// Thrown by decide_at_prime when p is below max(height_bound, 3*s*denom_lcm):
/// the per-prime criterion refuses to guess outside its proven range.
struct prime_too_small_error : std::domain_error {
    std::int64_t bound;
    prime_too_small_error(const std::string& what, std::int64_t b)
        : std::domain_error(what), bound(b) {}
};

/// A hypergeometric parameter pair with rational entries plus the derived
/// constants the criteria consume.
struct RationalSystem {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    std::int64_t denom_lcm;  // lcm of all entry denominators
    Rational height_bound;   // denom_lcm * (2 + 2*max|entry|), integer-valued
    Rational min_shift;      // min over entries g of (g - <g>), an integer

    /// Validates: both lists nonempty, no entry a nonpositive integer.
    static RationalSystem make(std::vector<Rational> alpha, std::vector<Rational> beta);

    std::size_t r() const { return alpha.size(); }
    std::size_t s() const { return beta.size(); }

    /// Smallest prime the per-prime criterion accepts must exceed this.
    Rational prime_floor() const;
};

/// #{i : a*alpha_i comes before x} - #{j : a*beta_j comes before x} in the
/// bracket order.  Requires a >= 1 and gcd(a, denom_lcm) = 1.
int christol_delta(const Rational& x, std::int64_t a, const RationalSystem& sys);

/// Global N-integrality decision: delta >= 0 for every unit a mod denom_lcm,
/// with the for-all-x quantifier discharged at the finite set {a*beta_j}.
CriterionReport decide_global(const RationalSystem& sys);

/// Membership of the series in Z_p[[z]] for a single prime
/// p > max(height_bound, 3*s*denom_lcm); throws prime_too_small_error below
/// that bound and std::domain_error when p is not prime.
CriterionReport decide_at_prime(const RationalSystem& sys, std::int64_t p);

} // namespace hyperint
