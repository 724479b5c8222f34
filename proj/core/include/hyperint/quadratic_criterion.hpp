#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperint/quadratic.hpp"
#include "hyperint/rational.hpp"
#include "hyperint/report.hpp"

namespace hyperint {

/// A parameter pair over Q(sqrt(D)), reordered rationals-first, together with
/// every derived constant the quadratic criterion consumes.
struct QuadraticSystem {
    std::vector<QuadraticNumber> alpha; // rationals first
    std::vector<QuadraticNumber> beta;
    std::int64_t D = 0;

    int u = 0; // number of rational alphas
    int v = 0; // number of rational betas

    std::vector<Rational> alpha1, beta1;     // rational parts, full length
    std::vector<std::int64_t> alpha2t, beta2t; // irrational parts scaled by d2 (integers)
    std::int64_t d1 = 1; // lcm denominators of the rational parts
    std::int64_t d2 = 1; // lcm denominators of the irrational parts
    std::int64_t E = 1;  // lcm(4|D|, d1, d2)

    std::vector<Rational> mu, nu; // the rational sub-pair
    std::int64_t munu_denom_lcm = 1;
    Rational munu_height_bound; // 0 when both sub-lists are empty
    Rational munu_min_shift;    // 0 when both sub-lists are empty

    std::size_t r() const { return alpha.size(); }
    std::size_t s() const { return beta.size(); }
};

/// Validates entries (shared square-free D != 1, nothing in Z_{<=0}),
/// reorders rationals first and fills in every derived field.  `D_hint`
/// supplies D when all entries are rational.
QuadraticSystem decompose(std::vector<QuadraticNumber> alpha,
                          std::vector<QuadraticNumber> beta,
                          std::optional<std::int64_t> D_hint = std::nullopt);

/// The unit group mod E split by the quadratic character: a lands in H when
/// (D/p) = 1 for primes p in the inverse class of a, otherwise in I.
struct ResidueGroups {
    std::int64_t E = 1;
    std::vector<std::int64_t> H; // ascending
    std::vector<std::int64_t> I; // ascending

    bool in_H(std::int64_t a) const;
};

/// Splits (Z/EZ)^x into H and I.  Membership is evaluated at the smallest
/// prime in the inverse residue class (search bounded by `prime_search_cap`
/// candidates) and cross-checked against the reciprocity closed form;
/// disagreement is an internal error.
ResidueGroups compute_groups(std::int64_t E, std::int64_t D,
                             std::int64_t prime_search_cap = 50'000'000);

/// The finite set of epsilon values in (0,1) where the comparison structure
/// of delta_extended can change.
struct BreakpointSet {
    std::vector<Rational> points; // ascending, all in (0,1)
};

BreakpointSet breakpoints(const QuadraticSystem& sys, const ResidueGroups& groups);

/// #{i : a*alpha1_i + alpha2t_i*eps comes before x}
///   - #{j : a*beta1_j + beta2t_j*eps comes before x}.
int delta_extended(const Rational& x, std::int64_t a, const Rational& eps,
                   const QuadraticSystem& sys);

/// delta of the rational sub-pair (mu, nu); zero when both are empty.
int delta_munu(const Rational& x, std::int64_t a, const QuadraticSystem& sys);

enum class StatementId { I, II, III, IV };

struct StatementResult {
    bool ok = true;
    std::optional<Witness> witness;
};

/// Checks one of the four decision statements.
///   I   : delta_munu(x,a) >= 0 for all a in I (x reduced to {a*nu_k})
///   II  : delta_munu at the shifted lattice points, powers of a in I
///   III : partial sums of delta_munu(a^l*nu_k, a^l) stay nonnegative
///   IV  : delta_extended(x,a,eps) >= 0 for a in H, one midpoint eps per
///         component of (0,1) minus the breakpoints, x in {a*beta1_k+beta2t_k*eps}
StatementResult check_statement(const QuadraticSystem& sys, const ResidueGroups& groups,
                                StatementId which);

/// Full N-integrality decision for quadratic parameters:
///   u < v  -> not N-integral;
///   u > v  -> N-integral iff statements I and IV hold;
///   u = v  -> N-integral iff statements II, III and IV hold.
CriterionReport decide_quadratic(const QuadraticSystem& sys);

} // namespace hyperint
