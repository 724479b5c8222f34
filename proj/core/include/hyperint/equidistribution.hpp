#pragma once

#include <cstdint>
#include <vector>

#include "hyperint/rational.hpp"

namespace hyperint {

/// Primitive integer quadratic A*z^2 + B*z + C with A > 0 and non-square
/// discriminant.
struct QuadraticPoly {
    std::int64_t A, B, C;
    std::int64_t disc; // B^2 - 4AC

    QuadraticPoly(std::int64_t A, std::int64_t B, std::int64_t C);

    __int128 eval(std::int64_t z) const {
        return (__int128(A) * z + B) * z + C;
    }
};

/// Primes p = residue (mod modulus) for any of the listed residues.
struct Progression {
    std::int64_t modulus;
    std::vector<std::int64_t> residues;

    bool contains(std::int64_t p) const;
};

/// The 0 or 2 roots of f mod p in [0, p); requires p odd and p not dividing
/// 2*A*disc.
std::vector<std::int64_t> roots_mod_p(const QuadraticPoly& f, std::int64_t p);

struct RootSample {
    std::int64_t p;
    std::int64_t v;  // root in [0, p)
    Rational ratio;  // v/p
};

/// All root samples with p <= x_max in the progression, ordered by (p, v).
/// The finitely many primes dividing 2*A*disc are passed over.
std::vector<RootSample> sample_roots(const QuadraticPoly& f, const Progression& prog,
                                     std::int64_t x_max, int threads = 1);

/// Star discrepancy of the sample ratios against the uniform distribution on
/// [0,1]; exact rational.  Throws on an empty sample.
Rational star_discrepancy(const std::vector<RootSample>& samples);

struct ScarcityCount {
    std::int64_t count = 0;          // primes with the scarce property
    std::int64_t primes_total = 0;   // pi(x_max)
    Rational ratio;                  // count / primes_total (0 when none)
};

/// Primes p <= x_max in the progression admitting a root v in [0,p) of
/// f(v) = 0 (mod p^2).
ScarcityCount count_mod_p2_roots(const QuadraticPoly& f, const Progression& prog,
                                 std::int64_t x_max, int threads = 1);

/// Primes p <= x_max in the progression with f(n) = a*p^2 for some n >= 1.
ScarcityCount count_prime_square_values(const QuadraticPoly& f, const Progression& prog,
                                        std::int64_t x_max, std::int64_t a);

/// Exact check of the root-separation inequality |x - v/p^l| > M/p^l for a
/// root v of f mod p^l.  All stated preconditions are enforced:
/// x = r/N in [0,1], gcd(p, 4*A*N*disc) = 1, v <= p^l, f(v) = 0 (mod p^l) and
/// p^l > 4*A*N^2*(|A|(M+N)^2 + |B|(M+N) + |C|).
bool gap_check(const QuadraticPoly& f, const Rational& x, std::int64_t M, std::int64_t p,
               int l, std::int64_t v);

} // namespace hyperint
