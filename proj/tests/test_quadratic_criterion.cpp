#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hyperint/padic.hpp"
#include "hyperint/quadratic_criterion.hpp"
#include "hyperint/rational_criterion.hpp"
#include "test_util.hpp"

using namespace hyperint;

namespace {

QuadraticNumber qn(Rational r1) { return QuadraticNumber(r1); }
QuadraticNumber qn(Rational r1, Rational r2, std::int64_t D) { return QuadraticNumber(r1, r2, D); }

// alpha=(sqrt(D), -sqrt(D), 1/2+sqrt(D), 1/2-sqrt(D)), beta=(2sqrt(D), -2sqrt(D))
QuadraticSystem reference_system(std::int64_t D) {
    std::vector<QuadraticNumber> alpha = {
        qn(Rational(0), Rational(1), D), qn(Rational(0), Rational(-1), D),
        qn(Rational(1, 2), Rational(1), D), qn(Rational(1, 2), Rational(-1), D)};
    std::vector<QuadraticNumber> beta = {qn(Rational(0), Rational(2), D),
                                         qn(Rational(0), Rational(-2), D)};
    return decompose(std::move(alpha), std::move(beta));
}

} // namespace

TEST_CASE("decomposition fills in the derived fields") {
    QuadraticSystem sys = reference_system(2);
    CHECK(sys.u == 0);
    CHECK(sys.v == 0);
    CHECK(sys.d1 == 2);
    CHECK(sys.d2 == 1);
    CHECK(sys.E == 8);
    CHECK(sys.alpha2t == std::vector<std::int64_t>{1, -1, 1, -1});
    CHECK(sys.beta2t == std::vector<std::int64_t>{2, -2});

    QuadraticSystem mixed = decompose({qn(Rational(1), Rational(1), 2)}, {qn(Rational(1, 2))});
    CHECK(mixed.u == 0);
    CHECK(mixed.v == 1);
    CHECK(mixed.nu == std::vector<Rational>{Rational(1, 2)});

    QuadraticSystem degenerate = decompose({qn(Rational(1, 2))}, {qn(Rational(1))}, 2);
    CHECK(degenerate.u == 1);
    CHECK(degenerate.v == 1);
    CHECK(degenerate.mu == std::vector<Rational>{Rational(1, 2)});
    CHECK(degenerate.nu == std::vector<Rational>{Rational(1)});
    CHECK(degenerate.E == 8);
}

TEST_CASE("decomposition rejects bad inputs") {
    CHECK_THROWS_AS(decompose({qn(Rational(-2))}, {qn(Rational(1), Rational(1), 2)}),
                    std::domain_error);
    CHECK_THROWS_AS(
        decompose({qn(Rational(0), Rational(1), 2)}, {qn(Rational(0), Rational(1), 3)}),
        std::domain_error);
    CHECK_THROWS_AS(decompose({qn(Rational(1, 2))}, {qn(Rational(1))}), std::invalid_argument);
    CHECK_THROWS_AS(decompose({qn(Rational(1, 2))}, {qn(Rational(1))}, 12), std::domain_error);
    // rationals are moved in front, irrationals keep their relative order
    QuadraticSystem sys = decompose({qn(Rational(0), Rational(1), 2), qn(Rational(1, 3))},
                                    {qn(Rational(0), Rational(2), 2)});
    CHECK(sys.alpha[0].is_rational());
    CHECK(sys.u == 1);
}

TEST_CASE("residue groups for the four reference moduli") {
    ResidueGroups g1 = compute_groups(8, 2);
    CHECK(g1.H == std::vector<std::int64_t>{1, 7});
    CHECK(g1.I == std::vector<std::int64_t>{3, 5});

    ResidueGroups g2 = compute_groups(4, -1);
    CHECK(g2.H == std::vector<std::int64_t>{1});
    CHECK(g2.I == std::vector<std::int64_t>{3});

    ResidueGroups g3 = compute_groups(20, 5);
    CHECK(g3.H == std::vector<std::int64_t>{1, 9, 11, 19});

    ResidueGroups g4 = compute_groups(24, -6);
    CHECK(g4.H == std::vector<std::int64_t>{1, 5, 7, 11});

    CHECK_THROWS_AS(compute_groups(6, 2), std::domain_error);  // not a multiple of 4|D|
    CHECK_THROWS_AS(compute_groups(16, 4), std::domain_error); // D not square-free
}

TEST_CASE("H is closed under multiplication mod E") {
    for (auto [E, D] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {8, 2}, {4, -1}, {20, 5}, {24, -6}, {40, 10}, {12, -3}}) {
        ResidueGroups g = compute_groups(E, D);
        for (std::int64_t a : g.H)
            for (std::int64_t b : g.H) CHECK(g.in_H(a * b % E == 0 ? E : a * b % E));
        // |H| = |I| = phi(E)/2 for these moduli
        CHECK(g.H.size() == g.I.size());
    }
}

TEST_CASE("breakpoint sets") {
    QuadraticSystem ref = reference_system(2);
    ResidueGroups groups = compute_groups(ref.E, ref.D);
    BreakpointSet cuts = breakpoints(ref, groups);
    std::vector<Rational> expected = {Rational(1, 6), Rational(1, 4), Rational(1, 3),
                                      Rational(1, 2), Rational(2, 3), Rational(3, 4),
                                      Rational(5, 6)};
    CHECK(cuts.points == expected);

    QuadraticSystem small = decompose({qn(Rational(0), Rational(1), 2)},
                                      {qn(Rational(0), Rational(2), 2)});
    BreakpointSet cuts2 = breakpoints(small, compute_groups(small.E, small.D));
    CHECK(cuts2.points == std::vector<Rational>{Rational(1, 2)});

    QuadraticSystem rationals = decompose({qn(Rational(1, 2))}, {qn(Rational(1))}, 2);
    CHECK(breakpoints(rationals, compute_groups(rationals.E, rationals.D)).points.empty());
}

TEST_CASE("extended delta on the reference system") {
    QuadraticSystem ref = reference_system(2);
    Rational eps(1, 8);
    CHECK(delta_extended(Rational(1, 4), 1, eps, ref) == 0);
    CHECK(delta_extended(Rational(-1, 4), 1, eps, ref) == 1);
}

TEST_CASE("extended delta degenerates to the plain delta on rational systems") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        std::size_t r = 1 + static_cast<std::size_t>(rng() % 3);
        std::size_t s = 1 + static_cast<std::size_t>(rng() % 3);
        std::vector<QuadraticNumber> alpha, beta;
        std::vector<Rational> ralpha, rbeta;
        for (std::size_t k = 0; k < r; ++k) {
            Rational g = testutil::random_parameter(rng);
            alpha.push_back(qn(g));
            ralpha.push_back(g);
        }
        for (std::size_t k = 0; k < s; ++k) {
            Rational g = testutil::random_parameter(rng);
            beta.push_back(qn(g));
            rbeta.push_back(g);
        }
        QuadraticSystem sys = decompose(alpha, beta, 2);
        RationalSystem plain = RationalSystem::make(ralpha, rbeta);
        for (int j = 0; j < 100; ++j) {
            Rational x = testutil::random_rational(rng);
            std::int64_t a = 1 + 2 * static_cast<std::int64_t>(rng() % 12); // odd, coprime to E=8*d
            if (std::gcd(a, sys.munu_denom_lcm) != 1 || std::gcd(a, plain.denom_lcm) != 1) continue;
            Rational eps(1 + static_cast<std::int64_t>(rng() % 7), 8);
            CHECK(delta_extended(x, a, eps, sys) == christol_delta(x, a, plain));
        }
    }
}

TEST_CASE("statement witness vector is constant on each component") {
    QuadraticSystem ref = reference_system(2);
    ResidueGroups groups = compute_groups(ref.E, ref.D);
    BreakpointSet cuts = breakpoints(ref, groups);
    std::vector<Rational> bounds;
    bounds.push_back(Rational(0));
    bounds.insert(bounds.end(), cuts.points.begin(), cuts.points.end());
    bounds.push_back(Rational(1));
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
        Rational lo = bounds[c], hi = bounds[c + 1];
        // three distinct rational points inside the component
        std::vector<Rational> eps_values = {lo + (hi - lo) / Rational(4),
                                            lo + (hi - lo) / Rational(2),
                                            lo + (hi - lo) * Rational(3, 4)};
        for (std::int64_t a : groups.H) {
            std::vector<int> first;
            for (std::size_t k = 0; k < ref.s(); ++k) {
                Rational x = Rational(a) * ref.beta1[k] + Rational(ref.beta2t[k]) * eps_values[0];
                first.push_back(delta_extended(x, a, eps_values[0], ref));
            }
            for (std::size_t e = 1; e < eps_values.size(); ++e) {
                for (std::size_t k = 0; k < ref.s(); ++k) {
                    Rational x = Rational(a) * ref.beta1[k] + Rational(ref.beta2t[k]) * eps_values[e];
                    CHECK(delta_extended(x, a, eps_values[e], ref) == first[k]);
                }
            }
        }
    }
}

TEST_CASE("statement checks on the reference instances") {
    QuadraticSystem ref = reference_system(2);
    ResidueGroups groups = compute_groups(ref.E, ref.D);
    for (StatementId id : {StatementId::I, StatementId::II, StatementId::III, StatementId::IV})
        CHECK(check_statement(ref, groups, id).ok);

    QuadraticSystem bad = decompose({qn(Rational(0), Rational(1), 2)},
                                    {qn(Rational(0), Rational(2), 2)});
    StatementResult res = check_statement(bad, compute_groups(bad.E, bad.D), StatementId::IV);
    CHECK_FALSE(res.ok);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->a == 1);
    CHECK(res.witness->eps == Rational(3, 4));
    CHECK(res.witness->x == Rational(3, 2));
    CHECK(res.witness->value == Rational(-1));
    // the witness replays through delta_extended
    CHECK(delta_extended(*res.witness->x, *res.witness->a, *res.witness->eps, bad) == -1);

    QuadraticSystem half = decompose({qn(Rational(1, 2))}, {qn(Rational(1))}, 2);
    ResidueGroups hgroups = compute_groups(half.E, half.D);
    CHECK(check_statement(half, hgroups, StatementId::II).ok);
    CHECK(check_statement(half, hgroups, StatementId::III).ok);
}

TEST_CASE("full quadratic decision") {
    for (std::int64_t D : {2, -1, 5, -6}) {
        CriterionReport rep = decide_quadratic(reference_system(D));
        CHECK(rep.verdict == Verdict::n_integral);
        CHECK(rep.route == "quadratic:u=v");
    }

    CriterionReport fewer = decide_quadratic(
        decompose({qn(Rational(1), Rational(1), 2)}, {qn(Rational(1, 2))}));
    CHECK(fewer.verdict == Verdict::not_n_integral);
    CHECK(fewer.route == "quadratic:u<v");
    REQUIRE(fewer.witness.has_value());
    CHECK(fewer.witness->condition == "u<v");

    CriterionReport iv = decide_quadratic(
        decompose({qn(Rational(0), Rational(1), 2)}, {qn(Rational(0), Rational(2), 2)}));
    CHECK(iv.verdict == Verdict::not_n_integral);
    REQUIRE(iv.witness.has_value());
    CHECK(iv.witness->condition == "IV");
}

TEST_CASE("u>v route checks statements I and IV") {
    // mu = (1/2, 1), nu empty after adding a rational alpha pair
    QuadraticSystem sys = decompose(
        {qn(Rational(1, 2)), qn(Rational(1)), qn(Rational(0), Rational(1), 2)},
        {qn(Rational(0), Rational(2), 2)});
    CHECK(sys.u == 2);
    CHECK(sys.v == 0);
    CriterionReport rep = decide_quadratic(sys);
    CHECK(rep.route == "quadratic:u>v");
    // statement I is vacuous (v = 0); the verdict hinges on statement IV
}
