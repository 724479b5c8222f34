#include "hyperint/padic.hpp"

#include <numeric>
#include <string>

#include "hyperint/primes.hpp"

namespace hyperint {

using i64 = std::int64_t;
using i128 = __int128;

i64 mul_mod(i64 a, i64 b, i64 m) {
    i128 r = i128(a) * b % m;
    if (r < 0) r += m;
    return static_cast<i64>(r);
}

i64 pow_mod(i64 b, i64 e, i64 m) {
    if (e < 0) throw std::domain_error("pow_mod: negative exponent");
    i64 r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 m) {
    a %= m;
    if (a < 0) a += m;
    i64 g = m, x = 0, x1 = 1, a1 = a;
    while (a1 != 0) {
        i64 q = g / a1;
        g -= q * a1; std::swap(g, a1);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("inv_mod: arguments are not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

i64 checked_pow(i64 p, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= p;
        if (r > INT64_MAX) throw std::overflow_error("checked_pow: p^e exceeds 64 bits");
    }
    return static_cast<i64>(r);
}

PAdicContext::PAdicContext(i64 prime, int exponent) : p(prime), l(exponent) {
    if (!is_prime(p)) throw std::domain_error("PAdicContext: p = " + std::to_string(p) + " is not prime");
    if (l < 1) throw std::domain_error("PAdicContext: l must be >= 1");
    modulus = checked_pow(p, l);
}

int vp_rational(const Rational& q, i64 p) {
    if (q.is_zero()) throw std::domain_error("vp_rational: valuation of zero is undefined");
    int v = 0;
    i64 n = q.num() < 0 ? -q.num() : q.num();
    while (n % p == 0) { n /= p; ++v; }
    i64 d = q.den();
    while (d % p == 0) { d /= p; --v; }
    return v;
}

namespace {

void require_padic_integer(const Rational& alpha, i64 p, const char* who) {
    if (alpha.den() % p == 0)
        throw std::domain_error(std::string(who) + ": denominator divisible by p");
}

// alpha as residue modulo m (denominator must be prime to m)
i64 residue_of(const Rational& alpha, i64 m) {
    i64 n = alpha.num() % m;
    if (n < 0) n += m;
    return mul_mod(n, inv_mod(alpha.den() % m, m), m);
}

} // namespace

i64 t_operator(const Rational& alpha, const PAdicContext& ctx) {
    require_padic_integer(alpha, ctx.p, "t_operator");
    i64 r = residue_of(alpha, ctx.modulus);
    return r == 0 ? 0 : ctx.modulus - r;
}

i64 r_operator(const Rational& alpha, const PAdicContext& ctx) {
    return ctx.modulus - t_operator(alpha, ctx);
}

Rational dwork_one_step(const Rational& alpha, i64 p) {
    PAdicContext ctx(p, 1);
    return (alpha + Rational(t_operator(alpha, ctx))) / Rational(p);
}

Rational dwork_iterate(const Rational& alpha, const PAdicContext& ctx) {
    require_padic_integer(alpha, ctx.p, "dwork_iterate");
    Rational bracket = frac_bracket(alpha);
    // |floor(1-alpha)| + <alpha>
    Rational hypothesis_bound =
        Rational(ctx.modulus) - Rational(alpha.den()) * (Rational(std::abs((Rational(1) - alpha).floor())) + bracket);
    Rational result;
    if (hypothesis_bound.sign() >= 0) {
        i64 d = alpha.den();
        i64 omega = d == 1 ? 1 : inv_mod(ctx.modulus % d, d);
        result = frac_bracket(Rational(omega) * alpha);
    } else {
        result = alpha;
        for (int i = 0; i < ctx.l; ++i) result = dwork_one_step(result, ctx.p);
    }
    // defining property: p^l * result - alpha in {0,...,p^l-1}
    Rational shift = Rational(ctx.modulus) * result - alpha;
    if (!shift.is_integer() || shift.sign() < 0 || shift >= Rational(ctx.modulus))
        throw std::logic_error("dwork_iterate: defining property violated");
    return result;
}

namespace {

void require_pochhammer_ok(const Rational& alpha, i64 n, i64 p, const char* who) {
    require_padic_integer(alpha, p, who);
    if (alpha.is_integer() && alpha.sign() <= 0)
        throw std::domain_error(std::string(who) + ": alpha is a nonpositive integer");
    if (n < 0) throw std::domain_error(std::string(who) + ": n must be >= 0");
}

// Levels beyond this contribute nothing: once p^l > den*(n + 2|alpha| + 2)
// the summand at level l is zero.
i64 level_cutoff(const Rational& alpha, i64 n) {
    return alpha.den() * (n + 2) + 2 * std::abs(alpha.num());
}

} // namespace

i64 pochhammer_vp(const Rational& alpha, i64 n, i64 p) {
    require_pochhammer_ok(alpha, n, p, "pochhammer_vp");
    i64 cutoff = level_cutoff(alpha, n), total = 0;
    for (int l = 1;; ++l) {
        i64 pl = checked_pow(p, l);
        i64 r = r_operator(alpha, PAdicContext(p, l));
        total += (n - 1 + r) / pl; // arguments are nonnegative, plain division is floor
        if (pl > cutoff) break;
    }
    return total;
}

i64 pochhammer_vp_ceil_t(const Rational& alpha, i64 n, i64 p) {
    require_pochhammer_ok(alpha, n, p, "pochhammer_vp_ceil_t");
    i64 cutoff = level_cutoff(alpha, n), total = 0;
    for (int l = 1;; ++l) {
        i64 pl = checked_pow(p, l);
        i64 t = t_operator(alpha, PAdicContext(p, l));
        i64 diff = n - t;
        total += diff > 0 ? (diff + pl - 1) / pl : 0; // ceil(diff / pl), diff > -pl
        if (pl > cutoff) break;
    }
    return total;
}

i64 pochhammer_vp_ceil_dwork(const Rational& alpha, i64 n, i64 p) {
    require_pochhammer_ok(alpha, n, p, "pochhammer_vp_ceil_dwork");
    i64 cutoff = level_cutoff(alpha, n), total = 0;
    for (int l = 1;; ++l) {
        i64 pl = checked_pow(p, l);
        Rational term = (Rational(n) + alpha) / Rational(pl) - dwork_iterate(alpha, PAdicContext(p, l));
        total += term.ceil();
        if (pl > cutoff) break;
    }
    return total;
}

i64 pochhammer_vp_product(const Rational& alpha, i64 n, i64 p) {
    require_pochhammer_ok(alpha, n, p, "pochhammer_vp_product");
    i64 total = 0;
    for (i64 k = 0; k < n; ++k)
        total += vp_rational(alpha + Rational(k), p);
    return total;
}

i64 sqrt_mod_prime_power(i64 d, const PAdicContext& ctx) {
    if (ctx.p == 2) throw std::domain_error("sqrt_mod_prime_power: p must be odd");
    i64 p = ctx.p;
    i64 a = d % p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("sqrt_mod_prime_power: d divisible by p");
    if (jacobi_symbol(a, p) != 1)
        throw non_residue_error("sqrt_mod_prime_power: " + std::to_string(d) +
                                " is not a quadratic residue mod " + std::to_string(p));

    // Tonelli-Shanks modulo p
    i64 root;
    if (p % 4 == 3) {
        root = pow_mod(a, (p + 1) / 4, p);
    } else {
        i64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        i64 z = 2;
        while (jacobi_symbol(z, p) != -1) ++z;
        i64 m = s;
        i64 c = pow_mod(z, q, p);
        i64 t = pow_mod(a, q, p);
        root = pow_mod(a, (q + 1) / 2, p);
        while (t != 1) {
            i64 tt = t;
            i64 i = 0;
            while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
            i64 b = pow_mod(c, checked_pow(2, static_cast<int>(m - i - 1)), p);
            root = mul_mod(root, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }

    // Hensel: lift the level-j root to level j+1
    i64 mod_j = p;
    for (int j = 1; j < ctx.l; ++j) {
        i64 mod_next = mod_j * p;
        i64 dn = d % mod_next;
        if (dn < 0) dn += mod_next;
        i64 defect = (dn - mul_mod(root, root, mod_next)) % mod_next;
        if (defect < 0) defect += mod_next;
        // defect is divisible by p^j; correction t = (defect/p^j) / (2*root) mod p
        i64 step = (defect / mod_j) % p;
        i64 t = mul_mod(step, inv_mod(mul_mod(2, root, p), p), p);
        root = (root + i128(t) * mod_j % mod_next) % mod_next;
        mod_j = mod_next;
    }

    i64 check = mul_mod(root, root, ctx.modulus);
    i64 dn = d % ctx.modulus;
    if (dn < 0) dn += ctx.modulus;
    if (check != dn) throw std::logic_error("sqrt_mod_prime_power: lift verification failed");
    return root;
}

int jacobi_symbol(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi_symbol: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

i64 mult_order(i64 a, i64 m) {
    if (m < 1) throw std::domain_error("mult_order: modulus must be >= 1");
    a %= m;
    if (a < 0) a += m;
    if (std::gcd(a, m) != 1) throw std::domain_error("mult_order: arguments are not coprime");
    if (m == 1) return 1;
    i64 x = a % m, h = 1;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++h;
    }
    return h;
}

} // namespace hyperint
