#include "hyperint/rational_criterion.hpp"

#include <numeric>
#include <string>

#include "hyperint/padic.hpp"
#include "hyperint/primes.hpp"

namespace hyperint {

using i64 = std::int64_t;

RationalSystem RationalSystem::make(std::vector<Rational> alpha, std::vector<Rational> beta) {
    if (alpha.empty() || beta.empty())
        throw std::invalid_argument("RationalSystem: alpha and beta must be nonempty");
    RationalSystem sys;
    sys.alpha = std::move(alpha);
    sys.beta = std::move(beta);

    std::vector<Rational> all = sys.alpha;
    all.insert(all.end(), sys.beta.begin(), sys.beta.end());
    Rational max_abs(0);
    for (const Rational& g : all) {
        if (g.is_integer() && g.sign() <= 0)
            throw std::domain_error("RationalSystem: entry " + g.str() +
                                    " is a nonpositive integer");
        if (g.abs() > max_abs) max_abs = g.abs();
    }
    sys.denom_lcm = lcm_denominators(all);
    sys.height_bound = Rational(sys.denom_lcm) * (Rational(2) + Rational(2) * max_abs);

    Rational min_shift = all.front() - frac_bracket(all.front());
    for (const Rational& g : all) {
        Rational shift = g - frac_bracket(g);
        if (shift < min_shift) min_shift = shift;
    }
    sys.min_shift = min_shift;
    return sys;
}

Rational RationalSystem::prime_floor() const {
    Rational three_sd(3 * static_cast<i64>(s()) * denom_lcm);
    return height_bound > three_sd ? height_bound : three_sd;
}

int christol_delta(const Rational& x, i64 a, const RationalSystem& sys) {
    if (a < 1 || std::gcd(a, sys.denom_lcm) != 1)
        throw std::domain_error("christol_delta: a must be positive and coprime to the denominator lcm");
    Rational am(a);
    int count = 0;
    for (const Rational& al : sys.alpha)
        if (christol_leq(am * al, x)) ++count;
    for (const Rational& be : sys.beta)
        if (christol_leq(am * be, x)) --count;
    return count;
}

CriterionReport decide_global(const RationalSystem& sys) {
    CriterionReport rep;
    rep.route = "global";
    rep.add_meta("d", std::to_string(sys.denom_lcm));
    for (i64 a = 1; a <= sys.denom_lcm; ++a) {
        if (std::gcd(a, sys.denom_lcm) != 1) continue;
        for (std::size_t k = 0; k < sys.beta.size(); ++k) {
            Rational x = Rational(a) * sys.beta[k];
            int value = christol_delta(x, a, sys);
            if (value < 0) {
                rep.verdict = Verdict::not_n_integral;
                Witness w;
                w.condition = "delta";
                w.a = a;
                w.k = static_cast<i64>(k + 1);
                w.x = x;
                w.value = Rational(value);
                rep.witness = w;
                return rep;
            }
        }
    }
    rep.verdict = Verdict::n_integral;
    return rep;
}

namespace {

// representative of a^l modulo d in {1..d}, stepping from the previous power
i64 rep_mod(i64 value, i64 d) {
    i64 r = value % d;
    return r == 0 ? d : r;
}

// first n with negative coefficient valuation; exists whenever r < s and the
// prime is valid, and lies far below the cap
Witness valuation_witness(const RationalSystem& sys, i64 p) {
    i64 cap = 4 * p * p;
    i64 running = 0;
    for (i64 n = 1; n <= cap; ++n) {
        i64 k = n - 1;
        for (const Rational& al : sys.alpha) running += vp_rational(al + Rational(k), p);
        for (const Rational& be : sys.beta) running -= vp_rational(be + Rational(k), p);
        if (running < 0) {
            Witness w;
            w.condition = "coefficient-valuation";
            w.p = p;
            w.n = n;
            w.value = Rational(running);
            return w;
        }
    }
    throw std::logic_error("decide_at_prime: no negative coefficient found although r < s");
}

} // namespace

CriterionReport decide_at_prime(const RationalSystem& sys, i64 p) {
    if (!is_prime(p)) throw std::domain_error("decide_at_prime: p is not prime");
    Rational floor_bound = sys.prime_floor();
    if (Rational(p) <= floor_bound)
        throw prime_too_small_error("decide_at_prime: p <= max(height bound, 3*s*d) = " +
                                        floor_bound.str(),
                                    floor_bound.ceil());

    i64 d = sys.denom_lcm;
    i64 a = d == 1 ? 1 : inv_mod(p % d, d);
    CriterionReport rep;
    rep.add_meta("p", std::to_string(p));
    rep.add_meta("a", std::to_string(a));

    if (sys.r() < sys.s()) {
        rep.route = "per-prime:r<s";
        rep.verdict = Verdict::not_in_zp;
        rep.witness = valuation_witness(sys, p);
        return rep;
    }

    if (sys.r() > sys.s()) {
        rep.route = "per-prime:r>s";
        for (std::size_t k = 0; k < sys.beta.size(); ++k) {
            Rational x = Rational(a) * sys.beta[k];
            int value = christol_delta(x, a, sys);
            if (value < 0) {
                rep.verdict = Verdict::not_in_zp;
                Witness w;
                w.condition = "delta";
                w.a = a;
                w.k = static_cast<i64>(k + 1);
                w.x = x;
                w.value = Rational(value);
                rep.witness = w;
                return rep;
            }
        }
        rep.verdict = Verdict::in_zp;
        return rep;
    }

    // r == s
    rep.route = "per-prime:r=s";
    i64 ord = mult_order(a, d);
    rep.add_meta("ord", std::to_string(ord));

    // partial sums of delta(a^l * beta_k, a^l) must stay nonnegative
    for (std::size_t k = 0; k < sys.beta.size(); ++k) {
        i64 b = 1;
        i64 partial = 0;
        for (i64 h = 1; h <= ord; ++h) {
            b = rep_mod(b * a, d);
            partial += christol_delta(Rational(b) * sys.beta[k], b, sys);
            if (partial < 0) {
                rep.verdict = Verdict::not_in_zp;
                Witness w;
                w.condition = "partial-sum";
                w.a = a;
                w.k = static_cast<i64>(k + 1);
                w.h = h;
                w.value = Rational(partial);
                rep.witness = w;
                return rep;
            }
        }
    }

    // delta at the shifted lattice points a^l*(e/d + min_shift)
    i64 b = 1;
    for (i64 l = 1; l <= ord; ++l) {
        b = rep_mod(b * a, d);
        for (i64 e = 1; e <= d; ++e) {
            Rational x = Rational(b) * (Rational(e, d) + sys.min_shift);
            int value = christol_delta(x, b, sys);
            if (value < 0) {
                rep.verdict = Verdict::not_in_zp;
                Witness w;
                w.condition = "shifted-delta";
                w.a = a;
                w.l = l;
                w.e = e;
                w.x = x;
                w.value = Rational(value);
                rep.witness = w;
                return rep;
            }
        }
    }

    rep.verdict = Verdict::in_zp;
    return rep;
}

} // namespace hyperint
