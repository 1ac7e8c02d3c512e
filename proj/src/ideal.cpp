#include "borelreg/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace borelreg {

MonomialIdeal MonomialIdeal::from_minimal_generators(const RingContext& ring,
                                                     std::vector<Monomial> gens) {
    MonomialIdeal I(ring);
    for (const Monomial& g : gens)
        if (g.vars() != ring.num_vars)
            throw RingMismatch("MonomialIdeal: generator from a different ring");
#ifndef NDEBUG
    for (std::size_t i = 0; i + 1 < gens.size(); ++i)
        assert(grlex_less(gens[i + 1], gens[i]));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            assert(i == j || !divides(gens[i], gens[j]));
#endif
    I.gens_ = std::move(gens);
    return I;
}

bool operator==(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw RingMismatch("operator==: ideals from different rings");
    return I.generators() == J.generators();
}

MonomialIdeal zero_ideal(const RingContext& ring) { return MonomialIdeal(ring); }

MonomialIdeal unit_ideal(const RingContext& ring) {
    return MonomialIdeal::from_minimal_generators(ring, {Monomial::unit(ring)});
}

MonomialIdeal minimalize(const RingContext& ring, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.vars() != ring.num_vars)
            throw RingMismatch("minimalize: generator from a different ring");
    std::sort(gens.begin(), gens.end(), grlex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Ascending grlex scan: any strict divisor has strictly smaller degree,
    // so it was already kept.
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (k.degree() >= g.degree())
                break;
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            kept.push_back(g);
    }
    std::reverse(kept.begin(), kept.end());
    return MonomialIdeal::from_minimal_generators(ring, std::move(kept));
}

bool contains(const MonomialIdeal& I, const Monomial& u) {
    if (u.vars() != I.vars())
        throw RingMismatch("contains: monomial from a different ring");
    const auto& gens = I.generators();
    // The grlex-descending order makes the generators of degree > deg(u) a
    // prefix; none of them can divide u, and within the run of equal degree
    // the only possible divisor is u itself.
    const auto run_begin = std::partition_point(
        gens.begin(), gens.end(), [&](const Monomial& g) { return g.degree() > u.degree(); });
    const auto run_end = std::partition_point(
        run_begin, gens.end(), [&](const Monomial& g) { return g.degree() == u.degree(); });
    const auto hit = std::lower_bound(run_begin, run_end, u, [](const Monomial& a, const Monomial& b) {
        return grlex_less(b, a);
    });
    if (hit != run_end && *hit == u)
        return true;
    for (auto it = run_end; it != gens.end(); ++it)
        if (divides(*it, u))
            return true;
    return false;
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw RingMismatch("contains: ideals from different rings");
    for (const Monomial& g : J.generators())
        if (!contains(I, g))
            return false;
    return true;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& w) {
    if (w.vars() != I.vars())
        throw RingMismatch("colon_by_monomial: monomial from a different ring");
    std::vector<Monomial> quotients;
    quotients.reserve(I.generators().size());
    for (const Monomial& g : I.generators())
        quotients.push_back(colon_quotient(g, w));
    return minimalize(I.ring(), std::move(quotients));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw RingMismatch("intersect: ideals from different rings");
    if (I.is_zero() || J.is_zero())
        return zero_ideal(I.ring());
    std::vector<Monomial> lcms;
    lcms.reserve(I.generators().size() * J.generators().size());
    for (const Monomial& g : I.generators())
        for (const Monomial& h : J.generators())
            lcms.push_back(lcm(g, h));
    return minimalize(I.ring(), std::move(lcms));
}

MonomialIdeal truncate(const MonomialIdeal& I, const Int& e) {
    if (I.is_zero())
        throw ZeroIdealError("truncate");
    Int min_deg = I.generators().back().degree();
    Int max_deg = I.generators().front().degree();
    if (e <= min_deg)
        return I;
    const RingContext ring = I.ring();
    if (max_deg <= e) {
        // All generators get raised to degree e, so G(I_{>=e}) is exactly the
        // set of degree-e monomials of I: a single-degree antichain.
        std::set<Monomial> out;
        for (const Monomial& g : I.generators())
            for_each_monomial_of_degree(ring, e - g.degree(), [&](const Monomial& w) {
                out.insert(mul(g, w));
            });
        std::vector<Monomial> gens(out.rbegin(), out.rend());
        return MonomialIdeal::from_minimal_generators(ring, std::move(gens));
    }
    std::vector<Monomial> candidates;
    for (const Monomial& g : I.generators()) {
        if (g.degree() > e) {
            candidates.push_back(g);
        } else {
            for_each_monomial_of_degree(ring, e - g.degree(), [&](const Monomial& w) {
                candidates.push_back(mul(g, w));
            });
        }
    }
    return minimalize(ring, std::move(candidates));
}

IdealStats stats(const MonomialIdeal& I) {
    if (I.is_zero())
        throw ZeroIdealError("stats");
    if (I.is_unit())
        throw UnitIdealError("stats");
    IdealStats s;
    s.deg = I.generators().front().degree();
    s.m = 0;
    for (const Monomial& g : I.generators())
        s.m = std::max(s.m, max_index(g));
    s.q = Int(s.m) * (s.deg - 1) + 1;
    return s;
}

}  // namespace borelreg
