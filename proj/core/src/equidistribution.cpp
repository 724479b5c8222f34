#include "hyperint/equidistribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hyperint/padic.hpp"
#include "hyperint/parallel.hpp"
#include "hyperint/primes.hpp"

namespace hyperint {

using i64 = std::int64_t;
using i128 = __int128;

namespace {

bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    for (i64 c = std::max<i64>(0, r - 2); c <= r + 2; ++c)
        if (c * c == n) return true;
    return false;
}

} // namespace

QuadraticPoly::QuadraticPoly(i64 A_, i64 B_, i64 C_) : A(A_), B(B_), C(C_) {
    if (A <= 0) throw std::domain_error("QuadraticPoly: leading coefficient must be positive");
    if (std::gcd(std::gcd(std::abs(A), std::abs(B)), std::abs(C)) != 1)
        throw std::domain_error("QuadraticPoly: coefficients must be coprime");
    i128 d = i128(B) * B - i128(4) * A * C;
    if (d > INT64_MAX || d < INT64_MIN)
        throw std::overflow_error("QuadraticPoly: discriminant exceeds 64 bits");
    disc = static_cast<i64>(d);
    if (is_perfect_square(disc))
        throw std::domain_error("QuadraticPoly: discriminant must not be a perfect square");
}

bool Progression::contains(i64 p) const {
    i64 r = p % modulus;
    if (r < 0) r += modulus;
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

std::vector<i64> roots_mod_p(const QuadraticPoly& f, i64 p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("roots_mod_p: p must be an odd prime");
    i128 degenerate = i128(2) * f.A * f.disc;
    if (static_cast<i64>(degenerate % p) == 0)
        throw std::domain_error("roots_mod_p: p divides 2*A*disc");
    if (jacobi_symbol(f.disc, p) == -1) return {};
    i64 w = sqrt_mod_prime_power(f.disc, PAdicContext(p, 1));
    i64 inv2a = inv_mod(mul_mod(2, f.A % p, p), p);
    i64 nb = (-f.B) % p;
    if (nb < 0) nb += p;
    i64 z1 = mul_mod((nb + w) % p, inv2a, p);
    i64 z2 = mul_mod((nb - w % p + p) % p, inv2a, p);
    if (z1 > z2) std::swap(z1, z2);
    return {z1, z2};
}

std::vector<RootSample> sample_roots(const QuadraticPoly& f, const Progression& prog,
                                     i64 x_max, int threads) {
    std::vector<i64> primes;
    for (i64 p : primes_up_to(x_max)) {
        if (p == 2 || !prog.contains(p)) continue;
        if (static_cast<i64>(i128(2) * f.A * f.disc % p) == 0) continue;
        primes.push_back(p);
    }
    std::vector<std::vector<RootSample>> per_prime(primes.size());
    parallel_for(primes.size(), threads, [&](std::size_t i) {
        i64 p = primes[i];
        for (i64 v : roots_mod_p(f, p))
            per_prime[i].push_back({p, v, Rational(v, p)});
    });
    std::vector<RootSample> out;
    for (auto& chunk : per_prime)
        out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

Rational star_discrepancy(const std::vector<RootSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("star_discrepancy: empty sample");
    std::vector<Rational> ratios;
    ratios.reserve(samples.size());
    for (const RootSample& s : samples) ratios.push_back(s.ratio);
    std::sort(ratios.begin(), ratios.end());
    i64 N = static_cast<i64>(ratios.size());
    Rational best(0);
    for (i64 i = 1; i <= N; ++i) {
        const Rational& r = ratios[static_cast<std::size_t>(i - 1)];
        Rational up = (Rational(i, N) - r).abs();
        Rational down = (r - Rational(i - 1, N)).abs();
        if (up > best) best = up;
        if (down > best) best = down;
    }
    return best;
}

ScarcityCount count_mod_p2_roots(const QuadraticPoly& f, const Progression& prog,
                                 i64 x_max, int threads) {
    std::vector<i64> all = primes_up_to(x_max);
    ScarcityCount out;
    out.primes_total = static_cast<i64>(all.size());

    std::vector<i64> primes;
    for (i64 p : all) {
        if (p == 2 || !prog.contains(p)) continue;
        if (static_cast<i64>(i128(2) * f.A * f.disc % p) == 0) continue;
        primes.push_back(p);
    }
    std::vector<char> hit(primes.size(), 0);
    parallel_for(primes.size(), threads, [&](std::size_t i) {
        i64 p = primes[i];
        i128 p2 = i128(p) * p;
        for (i64 v : roots_mod_p(f, p)) {
            i128 val = f.eval(v) % p2;
            if (val == 0) { hit[i] = 1; break; }
        }
    });
    out.count = std::count(hit.begin(), hit.end(), 1);
    out.ratio = out.primes_total == 0 ? Rational(0) : Rational(out.count, out.primes_total);
    return out;
}

ScarcityCount count_prime_square_values(const QuadraticPoly& f, const Progression& prog,
                                        i64 x_max, i64 a) {
    if (a < 1 || a > f.A)
        throw std::domain_error("count_prime_square_values: a must lie in 1..A");
    ScarcityCount out;
    out.primes_total = static_cast<i64>(primes_up_to(x_max).size());

    i128 ceiling = i128(a) * x_max * x_max;
    i64 vertex = std::abs(f.B) / (2 * f.A) + 1;
    std::set<i64> found;
    for (i64 n = 1;; ++n) {
        i128 val = f.eval(n);
        if (n > vertex && val > ceiling) break;
        if (val <= 0 || val % a != 0) continue;
        i128 q = val / a;
        if (q > i128(x_max) * x_max) continue;
        i64 q64 = static_cast<i64>(q);
        i64 root = static_cast<i64>(std::sqrt(static_cast<double>(q64)));
        for (i64 p = std::max<i64>(2, root - 2); p <= root + 2; ++p) {
            if (p * p == q64 && p <= x_max && is_prime(p) && prog.contains(p)) found.insert(p);
        }
    }
    out.count = static_cast<i64>(found.size());
    out.ratio = out.primes_total == 0 ? Rational(0) : Rational(out.count, out.primes_total);
    return out;
}

bool gap_check(const QuadraticPoly& f, const Rational& x, i64 M, i64 p, int l, i64 v) {
    if (M < 1) throw std::domain_error("gap_check: M must be positive");
    if (!is_prime(p)) throw std::domain_error("gap_check: p must be prime");
    if (l < 1) throw std::domain_error("gap_check: l must be positive");
    if (x.sign() < 0 || x > Rational(1))
        throw std::domain_error("gap_check: r/N must lie in [0,1]");
    i64 N = x.den();
    i128 degenerate = i128(4) * f.A * N * f.disc;
    if (static_cast<i64>(degenerate % p) == 0)
        throw std::domain_error("gap_check: p divides 4*A*N*disc");
    i64 pl = checked_pow(p, l);
    if (v < 0 || v > pl) throw std::domain_error("gap_check: root must satisfy 0 <= v <= p^l");
    if (f.eval(v) % pl != 0) throw std::domain_error("gap_check: v is not a root of f mod p^l");
    i128 mn = M + N;
    i128 bound = i128(4) * f.A * N * N *
                 (i128(std::abs(f.A)) * mn * mn + i128(std::abs(f.B)) * mn + std::abs(f.C));
    if (i128(pl) <= bound)
        throw std::domain_error("gap_check: p^l is below the separation bound");
    Rational gap = (x - Rational(v, pl)).abs();
    return gap > Rational(M, pl);
}

} // namespace hyperint
