#include "hyperint/valuation_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperint/padic.hpp"
#include "hyperint/parallel.hpp"
#include "hyperint/primes.hpp"

namespace hyperint {

using i64 = std::int64_t;

std::string to_string(EmbeddingKind e) {
    switch (e) {
        case EmbeddingKind::rational: return "rational";
        case EmbeddingKind::split_plus: return "split-plus";
        case EmbeddingKind::split_minus: return "split-minus";
        case EmbeddingKind::inert: return "inert";
    }
    throw std::logic_error("to_string(EmbeddingKind): bad value");
}

i64 coeff_vp_rational(const RationalSystem& sys, i64 p, i64 n) {
    if (!is_prime(p)) throw std::domain_error("coeff_vp_rational: p is not prime");
    if (sys.denom_lcm % p == 0)
        throw std::domain_error("coeff_vp_rational: p divides the denominator lcm");
    if (n < 0) throw std::domain_error("coeff_vp_rational: n must be >= 0");

    i64 by_formula = 0;
    for (const Rational& al : sys.alpha) by_formula += pochhammer_vp(al, n, p);
    for (const Rational& be : sys.beta) by_formula -= pochhammer_vp(be, n, p);

    i64 by_product = 0;
    for (const Rational& al : sys.alpha) by_product += pochhammer_vp_product(al, n, p);
    for (const Rational& be : sys.beta) by_product -= pochhammer_vp_product(be, n, p);

    if (by_formula != by_product)
        throw std::logic_error("coeff_vp_rational: formula and product valuations disagree");
    return by_formula;
}

namespace {

// residue of x mod m (denominator invertible)
i64 rational_residue(const Rational& x, i64 m) {
    i64 n = x.num() % m;
    if (n < 0) n += m;
    return mul_mod(n, inv_mod(x.den() % m, m), m);
}

// Working precision for split-prime counting: L with p^L strictly above the
// largest possible numerator of the norm polynomial values f_g(k), k < n, so
// every congruence level that can fire is represented.
int split_precision(const QuadraticSystem& sys, i64 p, i64 n) {
    i64 threshold = 1;
    for (std::size_t idx = 0; idx < sys.r() + sys.s(); ++idx) {
        const QuadraticNumber& g =
            idx < sys.r() ? sys.alpha[idx] : sys.beta[idx - sys.r()];
        if (g.is_rational()) continue;
        Rational norm = quad_norm(g);
        Rational dfr = Rational(
            std::lcm((Rational(2) * g.r1).den(), norm.den()));
        Rational bound = dfr * (Rational(n) * Rational(n) +
                                Rational(2) * g.r1.abs() * Rational(n) + norm.abs());
        threshold = std::max(threshold, bound.ceil());
    }
    int L = 1;
    while (checked_pow(p, L) <= threshold) ++L;
    return L;
}

struct SplitTower {
    // T values per level for one embedded entry: t[l-1] in [0, p^l)
    std::vector<i64> t;
};

// v_p(k + embedded value): number of matched congruence levels
i64 tower_increment(const SplitTower& tower, i64 k, const std::vector<i64>& pl) {
    i64 v = 0;
    for (std::size_t l = 0; l < tower.t.size(); ++l) {
        if (k % pl[l] != tower.t[l]) break;
        ++v;
    }
    return v;
}

SplitTower make_tower(const QuadraticNumber& g, i64 w, i64 p, int L, i64 pL) {
    i64 res = (rational_residue(g.r1, pL) + mul_mod(rational_residue(g.r2, pL), w, pL)) % pL;
    SplitTower tower;
    tower.t.reserve(static_cast<std::size_t>(L));
    i64 pl = 1;
    for (int l = 1; l <= L; ++l) {
        pl *= p;
        i64 r = res % pl;
        tower.t.push_back(r == 0 ? 0 : pl - r);
    }
    return tower;
}

struct QuadraticPrimeScan {
    bool split = false;
    std::vector<Violation> violations;
    std::vector<CoeffValuation> final_valuations;
};

// One prime of the quadratic scan: incremental valuations of coefficient n
// for n = 1..n_max, with the split embeddings cross-checked against the norm.
QuadraticPrimeScan scan_prime_quadratic(const QuadraticSystem& sys, i64 p, i64 n_max) {
    QuadraticPrimeScan out;
    out.split = jacobi_symbol(sys.D, p) == 1;

    std::vector<i64> pl_pows;
    std::vector<SplitTower> plus_towers(sys.r() + sys.s()), minus_towers(sys.r() + sys.s());
    if (out.split && n_max > 0) {
        int L = split_precision(sys, p, n_max);
        i64 pL = checked_pow(p, L);
        i64 w = sqrt_mod_prime_power(sys.D % pL, PAdicContext(p, L));
        if (w % p > p - w % p) w = pL - w; // canonical embedding: root below p/2 at level 1
        i64 pl = 1;
        for (int l = 1; l <= L; ++l) { pl *= p; pl_pows.push_back(pl); }
        for (std::size_t idx = 0; idx < sys.r() + sys.s(); ++idx) {
            const QuadraticNumber& g = idx < sys.r() ? sys.alpha[idx] : sys.beta[idx - sys.r()];
            if (g.is_rational()) continue;
            plus_towers[idx] = make_tower(g, w, p, L, pL);
            minus_towers[idx] = make_tower(g, pL - w, p, L, pL);
        }
    }

    i64 run_plus = 0, run_minus = 0, run_norm = 0;
    for (i64 n = 1; n <= n_max; ++n) {
        i64 k = n - 1;
        for (std::size_t idx = 0; idx < sys.r() + sys.s(); ++idx) {
            const QuadraticNumber& g = idx < sys.r() ? sys.alpha[idx] : sys.beta[idx - sys.r()];
            int sign = idx < sys.r() ? 1 : -1;
            i64 dplus, dminus, dnorm;
            if (g.is_rational()) {
                i64 v = vp_rational(g.r1 + Rational(k), p);
                dplus = dminus = v;
                dnorm = 2 * v;
            } else {
                Rational shifted = g.r1 + Rational(k);
                dnorm = vp_rational(shifted * shifted - Rational(sys.D) * g.r2 * g.r2, p);
                if (out.split) {
                    dplus = tower_increment(plus_towers[idx], k, pl_pows);
                    dminus = tower_increment(minus_towers[idx], k, pl_pows);
                } else {
                    dplus = dminus = 0;
                }
            }
            run_norm += sign * dnorm;
            run_plus += sign * dplus;
            run_minus += sign * dminus;
        }
        if (out.split) {
            if (run_plus + run_minus != run_norm)
                throw std::logic_error("quadratic scan: embedding sum disagrees with norm valuation");
            if (run_plus < 0)
                out.violations.push_back({p, EmbeddingKind::split_plus, n, Rational(run_plus)});
            if (run_minus < 0)
                out.violations.push_back({p, EmbeddingKind::split_minus, n, Rational(run_minus)});
        } else {
            if (run_norm < 0)
                out.violations.push_back({p, EmbeddingKind::inert, n, Rational(run_norm, 2)});
        }
    }

    if (out.split) {
        out.final_valuations.push_back({EmbeddingKind::split_plus, Rational(run_plus)});
        out.final_valuations.push_back({EmbeddingKind::split_minus, Rational(run_minus)});
    } else {
        out.final_valuations.push_back({EmbeddingKind::inert, Rational(run_norm, 2)});
    }
    return out;
}

void require_quadratic_prime(const QuadraticSystem& sys, i64 p) {
    if (!is_prime(p)) throw std::domain_error("coeff_val_quadratic: p is not prime");
    if (p == 2) throw std::domain_error("coeff_val_quadratic: p = 2 is excluded");
    if (sys.E % p == 0) throw std::domain_error("coeff_val_quadratic: p divides E");
}

} // namespace

std::vector<CoeffValuation> coeff_val_quadratic(const QuadraticSystem& sys, i64 p, i64 n) {
    require_quadratic_prime(sys, p);
    if (n < 0) throw std::domain_error("coeff_val_quadratic: n must be >= 0");
    return scan_prime_quadratic(sys, p, n).final_valuations;
}

std::int64_t compute_p0(const QuadraticSystem& sys) {
    Rational m1(0);
    for (const Rational& g : sys.alpha1) m1 = std::max(m1, g.abs());
    for (const Rational& g : sys.beta1) m1 = std::max(m1, g.abs());
    m1 = Rational(2) * m1;
    i64 m2 = 0;
    for (i64 t : sys.alpha2t) m2 = std::max(m2, std::abs(t));
    for (i64 t : sys.beta2t) m2 = std::max(m2, std::abs(t));
    m2 *= 2;

    Rational d1(sys.d1), d2(sys.d2);
    Rational split_bound = Rational(4) * d2 * d2 * d1 * d1 *
                           (d2 * d2 * (m1 + d1) * (m1 + d1) +
                            Rational(std::abs(sys.D)) * Rational(m2) * Rational(m2));

    i64 p0 = split_bound.ceil();
    p0 = std::max(p0, sys.munu_height_bound.ceil());
    p0 = std::max(p0, 3 * static_cast<i64>(sys.v) * sys.munu_denom_lcm);
    p0 = std::max(p0, largest_prime_factor(sys.E));
    return p0;
}

namespace {

struct PrimePartition {
    std::vector<i64> to_scan;
    std::vector<i64> skipped;
};

PrimePartition partition_primes(const ScanConfig& cfg, auto&& excluded) {
    PrimePartition part;
    for (i64 p : primes_in_range(std::max<i64>(cfg.p_min - 1, 1), cfg.p_max)) {
        if (p <= cfg.p0 || excluded(p))
            part.skipped.push_back(p);
        else
            part.to_scan.push_back(p);
    }
    return part;
}

} // namespace

ScanResult scan(const RationalSystem& sys, const ScanConfig& cfg, int threads) {
    PrimePartition part =
        partition_primes(cfg, [&](i64 p) { return sys.denom_lcm % p == 0; });

    std::vector<std::vector<Violation>> per_prime(part.to_scan.size());
    parallel_for(part.to_scan.size(), threads, [&](std::size_t i) {
        i64 p = part.to_scan[i];
        i64 running = 0;
        for (i64 n = 1; n <= cfg.n_max; ++n) {
            i64 k = n - 1;
            for (const Rational& al : sys.alpha) running += vp_rational(al + Rational(k), p);
            for (const Rational& be : sys.beta) running -= vp_rational(be + Rational(k), p);
            if (running < 0) {
                if (coeff_vp_rational(sys, p, n) != running)
                    throw std::logic_error("rational scan: incremental valuation mismatch");
                per_prime[i].push_back({p, EmbeddingKind::rational, n, Rational(running)});
            }
        }
        if (cfg.n_max > 0 && coeff_vp_rational(sys, p, cfg.n_max) != running)
            throw std::logic_error("rational scan: final valuation mismatch");
    });

    ScanResult out;
    out.skipped = std::move(part.skipped);
    out.scanned = static_cast<i64>(part.to_scan.size());
    for (auto& v : per_prime)
        out.violations.insert(out.violations.end(), v.begin(), v.end());
    return out;
}

ScanResult scan(const QuadraticSystem& sys, const ScanConfig& cfg, int threads) {
    PrimePartition part =
        partition_primes(cfg, [&](i64 p) { return p == 2 || sys.E % p == 0; });

    std::vector<std::vector<Violation>> per_prime(part.to_scan.size());
    parallel_for(part.to_scan.size(), threads, [&](std::size_t i) {
        per_prime[i] = scan_prime_quadratic(sys, part.to_scan[i], cfg.n_max).violations;
    });

    ScanResult out;
    out.skipped = std::move(part.skipped);
    out.scanned = static_cast<i64>(part.to_scan.size());
    for (auto& v : per_prime)
        out.violations.insert(out.violations.end(), v.begin(), v.end());
    return out;
}

} // namespace hyperint
