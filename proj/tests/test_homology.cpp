#include "doctest.h"

#include <random>
#include <vector>

#include "borelreg/homology.hpp"

#include "support/oracles.hpp"

using namespace borelreg;

namespace {

using Face = SimplicialComplex::Face;

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::closure({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            for (int k = 0; k < a.cols(); ++k)
                out(r, c) += a(r, k) * b(k, c);
    return out;
}

bool is_zero(const ExactMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0)
                return false;
    return true;
}

ExactMatrix transpose(const ExactMatrix& m) {
    ExactMatrix out(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out(c, r) = m(r, c);
    return out;
}

/// A seeded complex on {1..5}: the closure of a few random subsets.
SimplicialComplex random_complex(std::mt19937_64& rng) {
    std::vector<Face> declared;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
        Face f;
        const std::uint64_t mask = rng() % 32;
        for (int v = 1; v <= 5; ++v)
            if (mask & (std::uint64_t(1) << (v - 1)))
                f.push_back(v);
        declared.push_back(std::move(f));
    }
    return SimplicialComplex::closure({1, 2, 3, 4, 5}, declared);
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("complex states: void, irrelevant, closure") {
    const SimplicialComplex none;
    CHECK(none.is_void());
    CHECK(none.dimension() == -2);
    CHECK(none.face_count(-1) == 0);

    const SimplicialComplex empty_only = SimplicialComplex::closure({1, 2}, {{}});
    CHECK(empty_only.is_irrelevant());
    CHECK(empty_only.dimension() == -1);
    CHECK(empty_only.face_count(-1) == 1);

    const SimplicialComplex full = SimplicialComplex::closure({1, 2, 3}, {{1, 2, 3}});
    CHECK(full.dimension() == 2);
    CHECK(full.faces().size() == 8);
    CHECK(full.face_count(0) == 3);
    CHECK(full.face_count(1) == 3);
}

TEST_CASE("trusted constructor rejects families that are not closed") {
    CHECK_THROWS_AS(SimplicialComplex::from_closed_faces({1, 2}, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(SimplicialComplex::from_closed_faces({1, 2}, {{2, 1}, {1}, {2}, {}}),
                    DomainError);
    CHECK_NOTHROW(SimplicialComplex::from_closed_faces({1, 2}, {{}, {1}, {2}, {1, 2}}));
}

TEST_CASE("faces of a dimension come out in lexicographic order") {
    const SimplicialComplex full = SimplicialComplex::closure({1, 2, 3}, {{1, 2, 3}});
    CHECK(full.faces_of_dimension(1) == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(full.faces_of_dimension(-1) == std::vector<Face>{{}});
    CHECK(full.faces_of_dimension(3).empty());
}

TEST_CASE("boundary matrix shapes, signs and the augmentation row") {
    const SimplicialComplex two = SimplicialComplex::closure({1, 2}, {{1}, {2}});
    const ExactMatrix aug = boundary_matrix(two, 0);
    REQUIRE(aug.rows() == 1);
    REQUIRE(aug.cols() == 2);
    CHECK(aug(0, 0) == 1);
    CHECK(aug(0, 1) == 1);

    const SimplicialComplex point = SimplicialComplex::closure({1}, {{1}});
    const ExactMatrix one = boundary_matrix(point, 0);
    REQUIRE(one.rows() == 1);
    REQUIRE(one.cols() == 1);
    CHECK(one(0, 0) == 1);

    const ExactMatrix d1 = boundary_matrix(hollow_triangle(), 1);
    REQUIRE(d1.rows() == 3);
    REQUIRE(d1.cols() == 3);
    // Column {1,2}: vertex 2 enters with +1, vertex 1 with -1.
    CHECK(d1(0, 0) == -1);
    CHECK(d1(1, 0) == 1);
    CHECK(d1(2, 0) == 0);
    CHECK(rank_over_rationals(d1) == 2);

    CHECK_THROWS_AS(boundary_matrix(hollow_triangle(), -1), DomainError);
}

TEST_CASE("consecutive boundary maps compose to zero") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 30; ++trial) {
        const SimplicialComplex c = random_complex(rng);
        for (int k = 0; k <= c.dimension(); ++k)
            CHECK(is_zero(multiply(boundary_matrix(c, k), boundary_matrix(c, k + 1))));
    }
}

TEST_CASE("exact rank over the rationals") {
    ExactMatrix id(3, 3);
    for (int i = 0; i < 3; ++i)
        id(i, i) = 1;
    CHECK(rank_over_rationals(id) == 3);
    CHECK(rank_over_rationals(ExactMatrix(4, 2)) == 0);
    ExactMatrix ones(2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1;
    CHECK(rank_over_rationals(ones) == 1);
    CHECK(rank_over_rationals(ExactMatrix(0, 5)) == 0);
}

TEST_CASE("rank over a prime field sees the characteristic") {
    ExactMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = -1;  // determinant -2: invertible except in characteristic 2
    CHECK(rank_over_rationals(m) == 2);
    CHECK(rank_mod_prime(m, 2) == 1);
    CHECK(rank_mod_prime(m, 3) == 2);
    CHECK(rank(m, FieldSpec::rationals()) == 2);
    CHECK(rank(m, FieldSpec::prime_field(2)) == 1);
}

TEST_CASE("field spec accepts primes only") {
    CHECK(FieldSpec::prime_field(2).characteristic() == 2);
    CHECK(FieldSpec::prime_field(97).str() == "F97");
    CHECK(FieldSpec::rationals().str() == "Q");
    CHECK_THROWS_AS(FieldSpec::prime_field(1), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime_field(4), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime_field(91), InvalidField);  // 7 * 13
}

TEST_CASE("rank is invariant under transposition") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        ExactMatrix m(2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 4));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                m(r, c) = static_cast<int>(rng() % 7) - 3;
        const int rk = rank_over_rationals(m);
        CHECK(rk == rank_over_rationals(transpose(m)));
        CHECK(rk <= std::min(m.rows(), m.cols()));
        CHECK(rank_mod_prime(m, 5) == rank_mod_prime(transpose(m), 5));
    }
}

TEST_CASE("reduced homology of the standard small complexes") {
    const FieldSpec q = FieldSpec::rationals();

    const HomologyRanks two =
        reduced_homology_ranks(SimplicialComplex::closure({1, 2}, {{1}, {2}}), q);
    CHECK(two.at(0) == 1);
    CHECK(two.nonzero().size() == 1);

    const HomologyRanks circle = reduced_homology_ranks(hollow_triangle(), q);
    CHECK(circle.at(1) == 1);
    CHECK(circle.at(0) == 0);
    CHECK(circle.nonzero().size() == 1);

    const HomologyRanks simplex =
        reduced_homology_ranks(SimplicialComplex::closure({1, 2, 3, 4}, {{1, 2, 3, 4}}), q);
    CHECK(simplex.nonzero().empty());

    const HomologyRanks nothing = reduced_homology_ranks(SimplicialComplex(), q);
    CHECK(nothing.nonzero().empty());

    const HomologyRanks irrelevant =
        reduced_homology_ranks(SimplicialComplex::closure({1, 2}, {{}}), q);
    CHECK(irrelevant.at(-1) == 1);
    CHECK(irrelevant.nonzero().size() == 1);

    // Boundary of the tetrahedron: a 2-sphere.
    const HomologyRanks sphere = reduced_homology_ranks(
        SimplicialComplex::closure({1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
        q);
    CHECK(sphere.at(2) == 1);
    CHECK(sphere.nonzero().size() == 1);
}

TEST_CASE("Euler-Poincare, rank bounds, cones and field agreement") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f2 = FieldSpec::prime_field(2);
    const FieldSpec f3 = FieldSpec::prime_field(3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const SimplicialComplex c = random_complex(rng);
        CHECK(oracle::euler_poincare_holds(c, q));
        for (int k = 0; k <= c.dimension(); ++k)
            CHECK(rank_over_rationals(boundary_matrix(c, k)) +
                      rank_over_rationals(boundary_matrix(c, k + 1)) <=
                  c.face_count(k));
        // No torsion exists on five or fewer vertices, so all fields agree.
        const HomologyRanks hq = reduced_homology_ranks(c, q);
        CHECK(hq.nonzero() == reduced_homology_ranks(c, f2).nonzero());
        CHECK(hq.nonzero() == reduced_homology_ranks(c, f3).nonzero());
        if (!c.is_void()) {
            const HomologyRanks coned = reduced_homology_ranks(oracle::cone(c, 6), q);
            CHECK(coned.nonzero().empty());
        }
    }
}

}  // TEST_SUITE
