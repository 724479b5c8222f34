#include "hyperint/quadratic_criterion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hyperint/padic.hpp"
#include "hyperint/primes.hpp"

namespace hyperint {

using i64 = std::int64_t;

QuadraticSystem decompose(std::vector<QuadraticNumber> alpha, std::vector<QuadraticNumber> beta,
                          std::optional<i64> D_hint) {
    if (alpha.empty() || beta.empty())
        throw std::invalid_argument("decompose: alpha and beta must be nonempty");

    QuadraticSystem sys;
    std::optional<i64> D;
    auto scan = [&](const std::vector<QuadraticNumber>& entries) {
        for (const QuadraticNumber& g : entries) {
            if (g.in_nonpositive_integers())
                throw std::domain_error("decompose: entry " + g.str() +
                                        " is a nonpositive integer");
            if (!g.is_rational()) {
                if (D && *D != g.D)
                    throw std::domain_error("decompose: mixed field discriminants " +
                                            std::to_string(*D) + " and " + std::to_string(g.D));
                D = g.D;
            }
        }
    };
    scan(alpha);
    scan(beta);
    if (!D) {
        if (!D_hint) throw std::invalid_argument("decompose: all entries rational, D required");
        D = *D_hint;
    }
    if (*D == 1 || !is_square_free(*D))
        throw std::domain_error("decompose: D must be square-free and != 1");
    sys.D = *D;

    auto rationals_first = [](std::vector<QuadraticNumber>& entries) {
        std::stable_partition(entries.begin(), entries.end(),
                              [](const QuadraticNumber& g) { return g.is_rational(); });
    };
    rationals_first(alpha);
    rationals_first(beta);
    sys.alpha = std::move(alpha);
    sys.beta = std::move(beta);

    std::vector<Rational> part1, part2;
    for (const QuadraticNumber& g : sys.alpha) {
        sys.alpha1.push_back(g.r1);
        part1.push_back(g.r1);
        part2.push_back(g.r2);
        if (g.is_rational()) { ++sys.u; sys.mu.push_back(g.r1); }
    }
    for (const QuadraticNumber& g : sys.beta) {
        sys.beta1.push_back(g.r1);
        part1.push_back(g.r1);
        part2.push_back(g.r2);
        if (g.is_rational()) { ++sys.v; sys.nu.push_back(g.r1); }
    }

    sys.d1 = lcm_denominators(part1);
    sys.d2 = lcm_denominators(part2);
    for (const QuadraticNumber& g : sys.alpha) {
        Rational scaled = g.r2 * Rational(sys.d2);
        sys.alpha2t.push_back(scaled.num()); // integral by choice of d2
    }
    for (const QuadraticNumber& g : sys.beta) {
        Rational scaled = g.r2 * Rational(sys.d2);
        sys.beta2t.push_back(scaled.num());
    }

    i64 fourD = 4 * (sys.D < 0 ? -sys.D : sys.D);
    sys.E = std::lcm(std::lcm(fourD, sys.d1), sys.d2);

    std::vector<Rational> munu = sys.mu;
    munu.insert(munu.end(), sys.nu.begin(), sys.nu.end());
    if (!munu.empty()) {
        sys.munu_denom_lcm = lcm_denominators(munu);
        Rational max_abs(0);
        Rational min_shift = munu.front() - frac_bracket(munu.front());
        for (const Rational& g : munu) {
            if (g.abs() > max_abs) max_abs = g.abs();
            Rational shift = g - frac_bracket(g);
            if (shift < min_shift) min_shift = shift;
        }
        sys.munu_height_bound = Rational(sys.munu_denom_lcm) * (Rational(2) + Rational(2) * max_abs);
        sys.munu_min_shift = min_shift;
    }
    return sys;
}

bool ResidueGroups::in_H(i64 a) const {
    return std::binary_search(H.begin(), H.end(), a);
}

namespace {

// (D/q) assembled from the factorization D = (-1)^l1 * 2^l2 * D' and the
// reciprocity law; used as a cross-check of the direct symbol
int symbol_by_reciprocity(i64 D, i64 q) {
    int l1 = D < 0 ? 1 : 0;
    i64 Dp = D < 0 ? -D : D;
    int l2 = Dp % 2 == 0 ? 1 : 0;
    if (l2) Dp /= 2;
    int sym = 1;
    if (l1 && q % 4 == 3) sym = -sym;
    if (l2 && (q % 8 == 3 || q % 8 == 5)) sym = -sym;
    if (Dp % 4 == 3 && q % 4 == 3) sym = -sym;
    sym *= jacobi_symbol(q, Dp);
    return sym;
}

} // namespace

ResidueGroups compute_groups(i64 E, i64 D, i64 prime_search_cap) {
    if (D == 1 || !is_square_free(D))
        throw std::domain_error("compute_groups: D must be square-free and != 1");
    i64 fourD = 4 * (D < 0 ? -D : D);
    if (E < 1 || E % fourD != 0)
        throw std::domain_error("compute_groups: E must be a positive multiple of 4|D|");

    ResidueGroups g;
    g.E = E;
    for (i64 a = 1; a <= E; ++a) {
        if (std::gcd(a, E) != 1) continue;
        i64 inverse = inv_mod(a, E);
        if (inverse == 0) inverse = E; // only when E == 1, unreachable here
        i64 q = smallest_prime_in_class(inverse, E, prime_search_cap);
        int direct = jacobi_symbol(D, q);
        int closed = symbol_by_reciprocity(D, q);
        if (direct != closed)
            throw std::logic_error("compute_groups: reciprocity cross-check failed at prime " +
                                   std::to_string(q));
        (direct == 1 ? g.H : g.I).push_back(a);
    }
    return g;
}

namespace {

// integers n with (c + n)/q inside (0,1), i.e. n strictly between the bounds
void add_breakpoints(const Rational& c, i64 q, std::set<Rational>& out) {
    Rational lo = q > 0 ? -c : Rational(q) - c;
    Rational hi = q > 0 ? Rational(q) - c : -c;
    i64 first = lo.is_integer() ? lo.floor() + 1 : lo.ceil();
    i64 last = hi.is_integer() ? hi.ceil() - 1 : hi.floor();
    for (i64 n = first; n <= last; ++n)
        out.insert((c + Rational(n)) / Rational(q));
}

} // namespace

BreakpointSet breakpoints(const QuadraticSystem& sys, const ResidueGroups& groups) {
    std::set<Rational> pts;
    std::size_t r = sys.r(), s = sys.s();
    for (i64 a : groups.H) {
        Rational am(a);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t i2 = 0; i2 < r; ++i2)
                if (sys.alpha2t[i] != sys.alpha2t[i2])
                    add_breakpoints(am * (sys.alpha1[i] - sys.alpha1[i2]),
                                    sys.alpha2t[i2] - sys.alpha2t[i], pts);
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t j2 = 0; j2 < s; ++j2)
                if (sys.beta2t[j] != sys.beta2t[j2])
                    add_breakpoints(am * (sys.beta1[j] - sys.beta1[j2]),
                                    sys.beta2t[j2] - sys.beta2t[j], pts);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (sys.alpha2t[i] != sys.beta2t[j])
                    add_breakpoints(am * (sys.alpha1[i] - sys.beta1[j]),
                                    sys.beta2t[j] - sys.alpha2t[i], pts);
        for (std::size_t i = 0; i < r; ++i)
            if (sys.alpha2t[i] != 0)
                add_breakpoints(-(am * sys.alpha1[i]), sys.alpha2t[i], pts);
        for (std::size_t j = 0; j < s; ++j)
            if (sys.beta2t[j] != 0)
                add_breakpoints(-(am * sys.beta1[j]), sys.beta2t[j], pts);
    }
    BreakpointSet out;
    out.points.assign(pts.begin(), pts.end());
    return out;
}

int delta_extended(const Rational& x, i64 a, const Rational& eps, const QuadraticSystem& sys) {
    if (a < 1) throw std::domain_error("delta_extended: a must be positive");
    Rational am(a);
    int count = 0;
    for (std::size_t i = 0; i < sys.r(); ++i)
        if (christol_leq(am * sys.alpha1[i] + Rational(sys.alpha2t[i]) * eps, x)) ++count;
    for (std::size_t j = 0; j < sys.s(); ++j)
        if (christol_leq(am * sys.beta1[j] + Rational(sys.beta2t[j]) * eps, x)) --count;
    return count;
}

int delta_munu(const Rational& x, i64 a, const QuadraticSystem& sys) {
    if (a < 1 || std::gcd(a, sys.munu_denom_lcm) != 1)
        throw std::domain_error("delta_munu: a must be positive and coprime to the sub-pair lcm");
    Rational am(a);
    int count = 0;
    for (const Rational& g : sys.mu)
        if (christol_leq(am * g, x)) ++count;
    for (const Rational& g : sys.nu)
        if (christol_leq(am * g, x)) --count;
    return count;
}

namespace {

i64 rep_mod(i64 value, i64 d) {
    i64 r = value % d;
    return r == 0 ? d : r;
}

StatementResult fail(Witness w) {
    StatementResult res;
    res.ok = false;
    res.witness = std::move(w);
    return res;
}

StatementResult check_I(const QuadraticSystem& sys, const ResidueGroups& groups) {
    if (sys.v == 0) return {}; // no nu entries: the count difference is never negative
    i64 d = sys.munu_denom_lcm;
    for (i64 a : groups.I) {
        i64 b = rep_mod(a, d);
        for (std::size_t k = 0; k < sys.nu.size(); ++k) {
            Rational x = Rational(b) * sys.nu[k];
            int value = delta_munu(x, b, sys);
            if (value < 0) {
                Witness w;
                w.condition = "I";
                w.a = b;
                w.k = static_cast<i64>(k + 1);
                w.x = x;
                w.value = Rational(value);
                return fail(std::move(w));
            }
        }
    }
    return {};
}

StatementResult check_II(const QuadraticSystem& sys, const ResidueGroups& groups) {
    i64 d = sys.munu_denom_lcm;
    for (i64 a : groups.I) {
        i64 ord = mult_order(a, groups.E);
        i64 b = 1;
        for (i64 l = 1; l <= ord; ++l) {
            b = rep_mod(b * (a % d), d);
            for (i64 e = 1; e <= d; ++e) {
                Rational x = Rational(b) * (Rational(e, d) + sys.munu_min_shift);
                int value = delta_munu(x, b, sys);
                if (value < 0) {
                    Witness w;
                    w.condition = "II";
                    w.a = a;
                    w.l = l;
                    w.e = e;
                    w.x = x;
                    w.value = Rational(value);
                    return fail(std::move(w));
                }
            }
        }
    }
    return {};
}

StatementResult check_III(const QuadraticSystem& sys, const ResidueGroups& groups) {
    if (sys.v == 0) return {};
    i64 d = sys.munu_denom_lcm;
    for (i64 a : groups.I) {
        i64 ord = mult_order(a, groups.E);
        for (std::size_t k = 0; k < sys.nu.size(); ++k) {
            i64 b = 1;
            i64 partial = 0;
            for (i64 h = 1; h <= ord; ++h) {
                b = rep_mod(b * (a % d), d);
                partial += delta_munu(Rational(b) * sys.nu[k], b, sys);
                if (partial < 0) {
                    Witness w;
                    w.condition = "III";
                    w.a = a;
                    w.k = static_cast<i64>(k + 1);
                    w.h = h;
                    w.value = Rational(partial);
                    return fail(std::move(w));
                }
            }
        }
    }
    return {};
}

StatementResult check_IV(const QuadraticSystem& sys, const ResidueGroups& groups) {
    BreakpointSet cuts = breakpoints(sys, groups);
    std::vector<Rational> bounds;
    bounds.push_back(Rational(0));
    bounds.insert(bounds.end(), cuts.points.begin(), cuts.points.end());
    bounds.push_back(Rational(1));
    std::vector<Rational> midpoints;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        midpoints.push_back((bounds[i] + bounds[i + 1]) / Rational(2));

    for (i64 a : groups.H) {
        for (const Rational& eps : midpoints) {
            for (std::size_t k = 0; k < sys.s(); ++k) {
                Rational x = Rational(a) * sys.beta1[k] + Rational(sys.beta2t[k]) * eps;
                int value = delta_extended(x, a, eps, sys);
                if (value < 0) {
                    Witness w;
                    w.condition = "IV";
                    w.a = a;
                    w.eps = eps;
                    w.k = static_cast<i64>(k + 1);
                    w.x = x;
                    w.value = Rational(value);
                    return fail(std::move(w));
                }
            }
        }
    }
    return {};
}

} // namespace

StatementResult check_statement(const QuadraticSystem& sys, const ResidueGroups& groups,
                                StatementId which) {
    switch (which) {
        case StatementId::I: return check_I(sys, groups);
        case StatementId::II: return check_II(sys, groups);
        case StatementId::III: return check_III(sys, groups);
        case StatementId::IV: return check_IV(sys, groups);
    }
    throw std::logic_error("check_statement: bad statement id");
}

CriterionReport decide_quadratic(const QuadraticSystem& sys) {
    CriterionReport rep;
    rep.add_meta("D", std::to_string(sys.D));
    rep.add_meta("E", std::to_string(sys.E));
    rep.add_meta("u", std::to_string(sys.u));
    rep.add_meta("v", std::to_string(sys.v));

    if (sys.u < sys.v) {
        rep.route = "quadratic:u<v";
        rep.verdict = Verdict::not_n_integral;
        Witness w;
        w.condition = "u<v";
        w.value = Rational(sys.u - sys.v);
        rep.witness = w;
        return rep;
    }

    ResidueGroups groups = compute_groups(sys.E, sys.D);
    rep.add_meta("H-size", std::to_string(groups.H.size()));
    rep.add_meta("I-size", std::to_string(groups.I.size()));

    auto run = [&](StatementId id, const char* name) {
        StatementResult res = check_statement(sys, groups, id);
        if (!res.ok) {
            rep.verdict = Verdict::not_n_integral;
            rep.witness = std::move(res.witness);
            rep.add_meta("failed-statement", name);
        }
        return rep.verdict != Verdict::not_n_integral;
    };

    if (sys.u > sys.v) {
        rep.route = "quadratic:u>v";
        if (run(StatementId::I, "I") && run(StatementId::IV, "IV"))
            rep.verdict = Verdict::n_integral;
        return rep;
    }

    rep.route = "quadratic:u=v";
    if (run(StatementId::II, "II") && run(StatementId::III, "III") && run(StatementId::IV, "IV"))
        rep.verdict = Verdict::n_integral;
    return rep;
}

} // namespace hyperint
