#include "hyperint/primes.hpp"

#include <stdexcept>
#include <string>

namespace hyperint {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod_u(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod_u(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod_u(r, b, m);
        b = mul_mod_u(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = u64(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set is deterministic for all n < 3.3e24
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod_u(a % n, d, u64(n));
        if (x == 1 || x == u64(n - 1)) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod_u(x, x, u64(n));
            if (x == u64(n - 1)) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::int64_t i = 2; i * i <= n; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    for (std::int64_t i = 2; i <= n; ++i)
        if (sieve[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    if (hi <= 1) return out;
    if (hi <= 10'000'000) {
        for (std::int64_t p : primes_up_to(hi))
            if (p > lo) out.push_back(p);
        return out;
    }
    for (std::int64_t n = std::max<std::int64_t>(2, lo + 1); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::int64_t smallest_prime_in_class(std::int64_t residue, std::int64_t modulus, std::int64_t cap) {
    if (modulus < 1) throw std::domain_error("smallest_prime_in_class: modulus must be >= 1");
    residue %= modulus;
    if (residue < 0) residue += modulus;
    std::int64_t candidate = residue == 0 ? modulus : residue;
    for (std::int64_t i = 0; i < cap; ++i, candidate += modulus) {
        if (candidate >= 2 && is_prime(candidate)) return candidate;
    }
    throw std::runtime_error("smallest_prime_in_class: no prime found below cap in class " +
                             std::to_string(residue) + " mod " + std::to_string(modulus));
}

std::int64_t largest_prime_factor(std::int64_t n) {
    if (n < 2) throw std::domain_error("largest_prime_factor: n must be >= 2");
    std::int64_t best = 1;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        while (n % f == 0) { best = f; n /= f; }
    }
    if (n > 1) best = n;
    return best;
}

} // namespace hyperint
