#include "borelreg/harness.hpp"

#include <algorithm>
#include <set>

#include "borelreg/structure.hpp"

namespace borelreg {

void enumerate_ideals(const RingContext& ring, int dmax, int gmax,
                      const std::function<void(const MonomialIdeal&)>& visit) {
    if (dmax < 1 || gmax < 1)
        throw DomainError("enumerate_ideals: dmax and gmax must be positive");
    std::vector<Monomial> pool;
    for (int d = dmax; d >= 1; --d)
        for_each_monomial_of_degree(ring, d, [&](const Monomial& u) { pool.push_back(u); });
    std::vector<Monomial> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (!chosen.empty())
            visit(MonomialIdeal::from_minimal_generators(ring, chosen));
        if (static_cast<int>(chosen.size()) == gmax)
            return;
        for (std::size_t k = from; k < pool.size(); ++k) {
            bool antichain = true;
            for (const auto& c : chosen)
                if (divides(c, pool[k]) || divides(pool[k], c)) {
                    antichain = false;
                    break;
                }
            if (antichain) {
                chosen.push_back(pool[k]);
                extend(k + 1);
                chosen.pop_back();
            }
        }
    };
    extend(0);
}

std::vector<MonomialIdeal> all_ideals(const RingContext& ring, int dmax, int gmax) {
    std::vector<MonomialIdeal> out;
    enumerate_ideals(ring, dmax, gmax, [&](const MonomialIdeal& I) { out.push_back(I); });
    return out;
}

Monomial random_monomial(const RingContext& ring, int degree, Rng& rng) {
    if (degree < 1)
        throw DomainError("random_monomial: degree must be positive");
    std::vector<Int> exps(static_cast<std::size_t>(ring.num_vars), Int(0));
    for (int i = 0; i < degree; ++i)
        ++exps[static_cast<std::size_t>(rng.pick(0, ring.num_vars - 1))];
    return Monomial(std::move(exps));
}

MonomialIdeal random_antichain(const RingContext& ring, int dmax, int gmax, Rng& rng) {
    if (dmax < 1 || gmax < 1)
        throw DomainError("random_antichain: dmax and gmax must be positive");
    std::vector<Monomial> gens;
    const int count = rng.pick(1, gmax);
    for (int k = 0; k < count; ++k)
        gens.push_back(random_monomial(ring, rng.pick(1, dmax), rng));
    return minimalize(ring, std::move(gens));
}

MonomialIdeal random_borel_type(const RingContext& ring, int dmax, int components,
                                std::uint64_t seed) {
    if (dmax < 1 || components < 1)
        throw DomainError("random_borel_type: dmax and components must be positive");
    Rng rng(seed);
    MonomialIdeal out = unit_ideal(ring);
    for (int c = 0; c < components; ++c) {
        const int r = rng.pick(1, ring.num_vars);
        std::vector<Monomial> powers;
        for (int v = 1; v <= r; ++v)
            powers.push_back(Monomial::variable(ring, v, rng.pick(1, dmax)));
        out = intersect(out, minimalize(ring, std::move(powers)));
    }
    return out;
}

MonomialIdeal random_mixed(const RingContext& ring, int dmax, int gmax, std::uint64_t seed) {
    Rng rng(seed);
    switch (rng.pick(0, 2)) {
    case 0:
        return random_antichain(ring, dmax, gmax, rng);
    case 1: {
        MonomialIdeal left = random_antichain(ring, dmax, gmax, rng);
        return intersect(left, random_antichain(ring, dmax, gmax, rng));
    }
    default:
        return stable_closure(ring, random_antichain(ring, dmax, gmax, rng).generators());
    }
}

MonomialIdeal stable_closure(const RingContext& ring, const std::vector<Monomial>& gens) {
    if (gens.empty())
        throw DomainError("stable_closure: need at least one generator");
    std::set<Monomial> members(gens.begin(), gens.end());
    std::vector<Monomial> work(members.begin(), members.end());
    while (!work.empty()) {
        const Monomial u = std::move(work.back());
        work.pop_back();
        if (u.is_unit())
            continue;
        const int m = max_index(u);
        for (int j = 1; j < m; ++j) {
            Monomial moved =
                u.with_exponent(j, u.exponent(j) + 1).with_exponent(m, u.exponent(m) - 1);
            if (members.insert(moved).second)
                work.push_back(std::move(moved));
        }
    }
    return minimalize(ring, {members.begin(), members.end()});
}

MonomialIdeal prefix_normalize(const MonomialIdeal& I) {
    detail::require_nonzero_proper(I, "prefix_normalize");
    const auto primes = associated_primes(I);
    for (std::size_t k = 1; k < primes.size(); ++k) {
        const auto& prev = primes[k - 1].support;
        const auto& next = primes[k].support;
        if (!std::includes(next.begin(), next.end(), prev.begin(), prev.end()))
            throw NotAChain("prefix_normalize: associated primes are not totally ordered");
    }
    const int n = I.vars();
    std::vector<int> old_to_new(static_cast<std::size_t>(n) + 1, 0);
    int fresh = 1;
    for (const auto& p : primes)
        for (int v : p.support)
            if (old_to_new[static_cast<std::size_t>(v)] == 0)
                old_to_new[static_cast<std::size_t>(v)] = fresh++;
    for (int v = 1; v <= n; ++v)
        if (old_to_new[static_cast<std::size_t>(v)] == 0)
            old_to_new[static_cast<std::size_t>(v)] = fresh++;
    std::vector<Monomial> mapped;
    for (const auto& g : I.generators()) {
        std::vector<Int> exps(static_cast<std::size_t>(n), Int(0));
        for (int v = 1; v <= n; ++v)
            exps[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(v)] - 1)] =
                g.exponent(v);
        mapped.push_back(Monomial(std::move(exps)));
    }
    return minimalize(I.ring(), std::move(mapped));
}

}  // namespace borelreg
