#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperint/quadratic_criterion.hpp"
#include "hyperint/rational.hpp"
#include "hyperint/rational_criterion.hpp"

namespace hyperint {

enum class EmbeddingKind { rational, split_plus, split_minus, inert };

std::string to_string(EmbeddingKind e);

/// Exact v_p of the n-th series coefficient for rational parameters
/// (p prime, not dividing the denominator lcm).  Evaluated both through the
/// valuation formulas and through the term-by-term product; a mismatch is an
/// internal error.
std::int64_t coeff_vp_rational(const RationalSystem& sys, std::int64_t p, std::int64_t n);

struct CoeffValuation {
    EmbeddingKind embedding;
    Rational valuation;
};

/// Prime-ideal valuations of the n-th coefficient for quadratic parameters,
/// for an odd prime p coprime to E.  Split primes yield one integer valuation
/// per embedding of sqrt(D); inert primes yield half the valuation of the
/// field norm (denominator at most 2).
std::vector<CoeffValuation> coeff_val_quadratic(const QuadraticSystem& sys, std::int64_t p,
                                                std::int64_t n);

struct Violation {
    std::int64_t p = 0;
    EmbeddingKind embedding = EmbeddingKind::rational;
    std::int64_t n = 0;
    Rational valuation; // always negative
};

struct ScanConfig {
    std::int64_t p_min = 3;
    std::int64_t p_max = 0;
    std::int64_t n_max = 0;
    std::int64_t p0 = 0; // primes <= p0 are skipped (quadratic scans)
};

struct ScanResult {
    std::vector<Violation> violations;      // ordered by (p, n, embedding)
    std::vector<std::int64_t> skipped;      // primes in range excluded from the scan
    std::int64_t scanned = 0;               // primes actually scanned
};

/// Exclusion threshold below which the quadratic criteria make no promise:
/// max of the rational sub-pair thresholds, the split-prime comparison bound
/// 4*d2^2*d1^2*(d2^2*(M1+d1)^2 + |D|*M2^2), and every prime dividing E.
std::int64_t compute_p0(const QuadraticSystem& sys);

/// Negative-valuation search over primes in (max(p_min-1, p0), p_max],
/// coefficient indices n <= n_max.  Primes dividing the denominator lcm
/// (rational) or E (quadratic) are skipped and recorded.
ScanResult scan(const RationalSystem& sys, const ScanConfig& cfg, int threads = 1);
ScanResult scan(const QuadraticSystem& sys, const ScanConfig& cfg, int threads = 1);

} // namespace hyperint
