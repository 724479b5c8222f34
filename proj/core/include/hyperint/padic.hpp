#pragma once

#include <cstdint>
#include <stdexcept>

#include "hyperint/rational.hpp"

namespace hyperint {

struct non_residue_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A prime power p^l used as working modulus.
struct PAdicContext {
    std::int64_t p;
    int l;
    std::int64_t modulus; // p^l

    PAdicContext(std::int64_t prime, int exponent);
};

// modular helpers over int64 moduli (products via __int128)
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m);
std::int64_t inv_mod(std::int64_t a, std::int64_t m); // gcd(a,m)=1 required
/// p^e with overflow check.
std::int64_t checked_pow(std::int64_t p, int e);

/// v_p of a nonzero rational (negative when p divides the denominator).
int vp_rational(const Rational& q, std::int64_t p);

/// Unique element of {0,...,p^l-1} congruent to -alpha; requires alpha to be
/// a p-adic integer (denominator prime to p).
std::int64_t t_operator(const Rational& alpha, const PAdicContext& ctx);

/// p^l - t_operator(alpha): the unique element of {1,...,p^l} congruent to alpha.
std::int64_t r_operator(const Rational& alpha, const PAdicContext& ctx);

/// One step of the Dwork map: the unique y with p*y - alpha in {0,...,p-1}.
Rational dwork_one_step(const Rational& alpha, std::int64_t p);

/// l-th Dwork iterate.  Uses the closed form <omega*alpha> (omega*p^l = 1
/// mod d(alpha)) once p^l >= d(alpha)*(|floor(1-alpha)| + <alpha>); below
/// that bound iterates the one-step definition.
Rational dwork_iterate(const Rational& alpha, const PAdicContext& ctx);

/// v_p of the rising factorial alpha*(alpha+1)*...*(alpha+n-1).
/// Requires alpha to be a p-adic integer outside the nonpositive integers.
/// The four evaluation routes below agree; pochhammer_vp is the floor/R form.
std::int64_t pochhammer_vp(const Rational& alpha, std::int64_t n, std::int64_t p);
std::int64_t pochhammer_vp_ceil_t(const Rational& alpha, std::int64_t n, std::int64_t p);
std::int64_t pochhammer_vp_ceil_dwork(const Rational& alpha, std::int64_t n, std::int64_t p);
std::int64_t pochhammer_vp_product(const Rational& alpha, std::int64_t n, std::int64_t p);

/// Square root of d modulo p^l (p odd, gcd(d,p)=1): Tonelli-Shanks at level 1
/// followed by Hensel lifting.  Returns the root in [0,p^l); the other root
/// is p^l - result.  Throws non_residue_error when d is not a square mod p.
std::int64_t sqrt_mod_prime_power(std::int64_t d, const PAdicContext& ctx);

/// Jacobi symbol (a/n) for odd positive n; Legendre symbol when n is prime.
int jacobi_symbol(std::int64_t a, std::int64_t n);

/// Least h >= 1 with a^h = 1 (mod m); requires gcd(a,m)=1.
std::int64_t mult_order(std::int64_t a, std::int64_t m);

} // namespace hyperint
