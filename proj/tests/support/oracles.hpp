#pragma once

// Brute-force reference implementations the unit tests check the library
// against. Everything here prefers the most literal definition over speed.

#include <vector>

#include "borelreg/harness.hpp"
#include "borelreg/homology.hpp"
#include "borelreg/ideal.hpp"
#include "borelreg/structure.hpp"

namespace oracle {

using namespace borelreg;

inline Monomial mono(const std::vector<int>& exps) {
    std::vector<Int> e(exps.begin(), exps.end());
    return Monomial(std::move(e));
}

inline MonomialIdeal ideal(int n, const std::vector<std::vector<int>>& gens) {
    const RingContext ring(n);
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    for (const auto& g : gens)
        ms.push_back(mono(g));
    return minimalize(ring, std::move(ms));
}

/// All monomials of degree 0..dmax, grlex-descending within each degree.
inline std::vector<Monomial> monomials_up_to(const RingContext& ring, int dmax) {
    std::vector<Monomial> out;
    for (int d = 0; d <= dmax; ++d)
        for_each_monomial_of_degree(ring, d, [&](const Monomial& u) { out.push_back(u); });
    return out;
}

/// Membership by a plain scan over the generators; the library's binary
/// search must agree with this.
inline bool brute_contains(const MonomialIdeal& I, const Monomial& u) {
    for (const Monomial& g : I.generators())
        if (divides(g, u))
            return true;
    return false;
}

/// Stability checked over every monomial of I of degree <= deg(I)+extra, not
/// just the generators. Certifies the generator-only reduction.
inline bool brute_stable(const MonomialIdeal& I, int extra) {
    const int top = stats(I).deg.convert_to<int>() + extra;
    for (const Monomial& u : monomials_up_to(I.ring(), top)) {
        if (u.is_unit() || !brute_contains(I, u))
            continue;
        const int m = max_index(u);
        for (int j = 1; j < m; ++j) {
            const Monomial moved =
                u.with_exponent(m, u.exponent(m) - 1).with_exponent(j, u.exponent(j) + 1);
            if (!brute_contains(I, moved))
                return false;
        }
    }
    return true;
}

/// Cone over a fresh apex vertex; defined for nonvoid complexes.
inline SimplicialComplex cone(const SimplicialComplex& c, int apex) {
    std::vector<int> vertices = c.vertices();
    vertices.push_back(apex);
    std::vector<SimplicialComplex::Face> faces;
    for (const auto& f : c.faces()) {
        faces.push_back(f);
        SimplicialComplex::Face lifted = f;
        lifted.push_back(apex);
        faces.push_back(std::move(lifted));
    }
    return SimplicialComplex::closure(std::move(vertices), faces);
}

/// Alternating sums of face counts and homology ranks agree on every complex
/// (Euler-Poincare, empty face included).
inline bool euler_poincare_holds(const SimplicialComplex& c, const FieldSpec& field) {
    const HomologyRanks h = reduced_homology_ranks(c, field);
    long long faces = 0;
    long long ranks = 0;
    for (int k = -1; k <= c.dimension(); ++k) {
        const long long sign = (k % 2 == 0) ? 1 : -1;
        faces += sign * c.face_count(k);
        ranks += sign * h.at(k);
    }
    return faces == ranks;
}

}  // namespace oracle
