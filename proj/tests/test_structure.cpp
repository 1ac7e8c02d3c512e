#include "doctest.h"

#include <set>
#include <vector>

#include "borelreg/harness.hpp"
#include "borelreg/structure.hpp"
#include "borelreg/verify.hpp"

#include "support/oracles.hpp"

using namespace borelreg;
using oracle::ideal;
using oracle::mono;

namespace {

/// (x1,...,xn)^d as the degree-d truncation of the maximal ideal.
MonomialIdeal maximal_power(int n, int d) {
    std::vector<Monomial> vars;
    const RingContext ring(n);
    for (int v = 1; v <= n; ++v)
        vars.push_back(Monomial::variable(ring, v));
    return truncate(minimalize(ring, std::move(vars)), d);
}

std::vector<MonomialIdeal> component_ideals(const MonomialIdeal& I) {
    std::vector<MonomialIdeal> out;
    for (const IrreducibleComponent& c : irreducible_decomposition(I))
        out.push_back(c.as_ideal());
    return out;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("stability on fixed ideals") {
    CHECK(is_stable(ideal(2, {{2, 0}, {1, 1}, {0, 2}})));
    CHECK_FALSE(is_stable(ideal(2, {{2, 0}, {0, 2}})));
    CHECK(is_stable(ideal(2, {{1, 0}})));
    CHECK(is_stable(unit_ideal(RingContext(2))));
    CHECK_THROWS_AS(is_stable(zero_ideal(RingContext(2))), ZeroIdealError);
}

TEST_CASE("generator-only stability equals the all-monomials definition") {
    enumerate_ideals(RingContext(2), 4, 4, [&](const MonomialIdeal& I) {
        CHECK(is_stable(I) == oracle::brute_stable(I, 3));
    });
    enumerate_ideals(RingContext(3), 3, 3, [&](const MonomialIdeal& I) {
        CHECK(is_stable(I) == oracle::brute_stable(I, 2));
    });
    // Spot checks at degree 4 in three variables, where exhaustion is too wide.
    Rng rng(41);
    for (int i = 0; i < 150; ++i) {
        const MonomialIdeal I = random_antichain(RingContext(3), 4, 5, rng);
        CHECK(is_stable(I) == oracle::brute_stable(I, 2));
    }
}

TEST_CASE("saturation by one variable zeroes its exponents") {
    CHECK(saturate_variable(ideal(3, {{2, 1, 0}, {0, 2, 1}}), 2) ==
          ideal(3, {{2, 0, 0}, {0, 0, 1}}));
    CHECK(saturate_variable(ideal(2, {{0, 1}}), 2) == unit_ideal(RingContext(2)));
    CHECK(saturate_variable(ideal(2, {{1, 0}}), 2) == ideal(2, {{1, 0}}));
    CHECK_THROWS_AS(saturate_variable(ideal(2, {{1, 0}}), 0), IndexOutOfRange);
    CHECK_THROWS_AS(saturate_variable(ideal(2, {{1, 0}}), 3), IndexOutOfRange);
}

TEST_CASE("saturation by a prefix ideal reaches the chain fixed point") {
    CHECK(saturate_prefix(ideal(2, {{0, 1}}), 2) == ideal(2, {{0, 1}}));
    // (x1^2, x1x2) = (x1) meet (x1^2, x2); only the (x1^2, x2) component
    // dissolves at the maximal ideal, so the saturation is (x1), not (1).
    CHECK(saturate_prefix(ideal(2, {{2, 0}, {1, 1}}), 2) == ideal(2, {{1, 0}}));
    CHECK(saturate_prefix(ideal(2, {{1, 0}}), 2) == ideal(2, {{1, 0}}));
    CHECK_THROWS_AS(saturate_prefix(ideal(2, {{1, 0}}), 0), IndexOutOfRange);
}

TEST_CASE("prefix saturation is an idempotent closure containing the ideal") {
    enumerate_ideals(RingContext(2), 3, 4, [&](const MonomialIdeal& I) {
        for (int j = 1; j <= 2; ++j) {
            const MonomialIdeal S = saturate_prefix(I, j);
            CHECK(contains(S, I));
            CHECK(saturate_prefix(S, j) == S);
        }
    });
}

TEST_CASE("prefix saturation agrees with the component-dropping oracle") {
    enumerate_ideals(RingContext(2), 3, 4, [&](const MonomialIdeal& I) {
        for (int j = 1; j <= 2; ++j)
            CHECK(saturate_prefix(I, j) == saturate_prefix_by_decomposition(I, j));
    });
    enumerate_ideals(RingContext(3), 2, 3, [&](const MonomialIdeal& I) {
        for (int j = 1; j <= 3; ++j)
            CHECK(saturate_prefix(I, j) == saturate_prefix_by_decomposition(I, j));
    });
}

TEST_CASE("Borel-type predicate on fixed ideals") {
    CHECK_FALSE(is_borel_type(ideal(2, {{0, 1}})));
    CHECK(is_borel_type(ideal(2, {{2, 0}, {1, 1}})));
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d)
            CHECK(is_borel_type(maximal_power(n, d)));
    CHECK_THROWS_AS(is_borel_type(zero_ideal(RingContext(2))), ZeroIdealError);
    CHECK_THROWS_AS(is_borel_type(unit_ideal(RingContext(2))), UnitIdealError);
}

TEST_CASE("exchange formulation of the Borel-type predicate") {
    CHECK(is_borel_type_exchange(ideal(2, {{2, 0}, {1, 1}})));
    CHECK_FALSE(is_borel_type_exchange(ideal(2, {{0, 1}})));
    CHECK(is_borel_type_exchange(ideal(2, {{1, 0}})));
    enumerate_ideals(RingContext(2), 3, 4, [&](const MonomialIdeal& I) {
        CHECK(is_borel_type_exchange(I) == is_borel_type(I));
    });
    enumerate_ideals(RingContext(3), 2, 3, [&](const MonomialIdeal& I) {
        CHECK(is_borel_type_exchange(I) == is_borel_type(I));
    });
}

TEST_CASE("irreducible decomposition on fixed ideals") {
    CHECK(component_ideals(ideal(2, {{1, 1}})) ==
          std::vector<MonomialIdeal>{ideal(2, {{1, 0}}), ideal(2, {{0, 1}})});
    CHECK(component_ideals(ideal(2, {{2, 0}, {1, 1}})) ==
          std::vector<MonomialIdeal>{ideal(2, {{1, 0}}), ideal(2, {{2, 0}, {0, 1}})});
    CHECK(component_ideals(ideal(2, {{2, 0}, {0, 2}})) ==
          std::vector<MonomialIdeal>{ideal(2, {{2, 0}, {0, 2}})});
    CHECK_THROWS_AS(irreducible_decomposition(zero_ideal(RingContext(2))), ZeroIdealError);
    CHECK_THROWS_AS(irreducible_decomposition(unit_ideal(RingContext(2))), UnitIdealError);
}

TEST_CASE("decomposition reassembles the ideal and carries no redundant part") {
    enumerate_ideals(RingContext(2), 3, 4, [&](const MonomialIdeal& I) {
        const auto comps = component_ideals(I);
        MonomialIdeal meet = unit_ideal(I.ring());
        for (const MonomialIdeal& c : comps)
            meet = intersect(meet, c);
        CHECK(meet == I);
        for (std::size_t skip = 0; skip < comps.size(); ++skip) {
            MonomialIdeal rest = unit_ideal(I.ring());
            for (std::size_t k = 0; k < comps.size(); ++k)
                if (k != skip)
                    rest = intersect(rest, comps[k]);
            CHECK(rest != I);
        }
    });
}

TEST_CASE("associated primes are the component supports") {
    const auto primes = associated_primes(ideal(2, {{2, 0}, {1, 1}}));
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].support == std::set<int>{1});
    CHECK(primes[1].support == std::set<int>{1, 2});
    CHECK(primes[0].is_prefix());
    CHECK(primes[1].is_prefix());

    const auto split = associated_primes(ideal(2, {{1, 1}}));
    REQUIRE(split.size() == 2);
    CHECK(split[0].support == std::set<int>{1});
    CHECK(split[1].support == std::set<int>{2});
    CHECK_FALSE(split[1].is_prefix());

    for (int d = 1; d <= 3; ++d) {
        const auto top = associated_primes(maximal_power(3, d));
        REQUIRE(top.size() == 1);
        CHECK(top[0].support == std::set<int>{1, 2, 3});
    }
}

TEST_CASE("chain test on associated primes") {
    CHECK(ass_totally_ordered(ideal(2, {{2, 0}, {1, 1}})));
    CHECK_FALSE(ass_totally_ordered(ideal(2, {{1, 1}})));
    CHECK(ass_totally_ordered(ideal(2, {{1, 0}})));
    // A chain of non-prefix supports is still a chain; Borel type it is not.
    CHECK(ass_totally_ordered(ideal(2, {{0, 1}})));
    CHECK_FALSE(is_borel_type(ideal(2, {{0, 1}})));
}

TEST_CASE("characterization report evaluates three independent routes") {
    const CharReport a = check_char_theorem(ideal(2, {{2, 0}, {1, 1}}));
    CHECK(a.borel_type);
    CHECK(a.ass_all_prefix);
    CHECK(a.truncation_stable);
    CHECK(a.q_used == 3);
    CHECK(a.consistent());

    const CharReport b = check_char_theorem(ideal(2, {{0, 1}}));
    CHECK_FALSE(b.borel_type);
    CHECK_FALSE(b.ass_all_prefix);
    CHECK_FALSE(b.truncation_stable);
    CHECK(b.q_used == 1);
    CHECK(b.consistent());

    const CharReport c = check_char_theorem(ideal(2, {{2, 0}, {0, 2}}));
    CHECK(c.borel_type);
    CHECK(c.ass_all_prefix);
    CHECK(c.truncation_stable);
    CHECK(c.q_used == 3);
    CHECK(c.consistent());

    CHECK_THROWS_AS(check_char_theorem(zero_ideal(RingContext(2))), ZeroIdealError);
    CHECK_THROWS_AS(check_char_theorem(unit_ideal(RingContext(2))), UnitIdealError);
}

}  // TEST_SUITE
