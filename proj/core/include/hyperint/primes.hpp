#pragma once

#include <cstdint>
#include <vector>

namespace hyperint {

/// Deterministic Miller-Rabin, valid for the full int64 range.
bool is_prime(std::int64_t n);

/// All primes <= n by sieve of Eratosthenes.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Primes p with lo < p <= hi, ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// Smallest prime p ≡ residue (mod modulus).  The search is bounded by
/// `cap` candidates; exhaustion throws std::runtime_error.
std::int64_t smallest_prime_in_class(std::int64_t residue, std::int64_t modulus,
                                     std::int64_t cap = 50'000'000);

/// Largest prime factor (n >= 2).
std::int64_t largest_prime_factor(std::int64_t n);

} // namespace hyperint
