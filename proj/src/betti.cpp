#include "borelreg/betti.hpp"

#include <cassert>

#include "borelreg/structure.hpp"

namespace borelreg {

void BettiTable::set(int i, const Monomial& a, int value) {
    assert(i >= 0 && value >= 1);
    entries_[Key(i, a)] = value;
}

int BettiTable::at(int i, const Monomial& a) const {
    const auto it = entries_.find(Key(i, a));
    return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<int, Int>, int> BettiTable::graded() const {
    std::map<std::pair<int, Int>, int> out;
    for (const auto& [key, value] : entries_)
        out[{key.first, key.second.degree()}] += value;
    return out;
}

Int BettiTable::regularity() const {
    if (entries_.empty())
        throw DomainError("BettiTable::regularity: empty table");
    Int best = 0;
    bool first = true;
    for (const auto& [key, value] : entries_) {
        (void)value;
        Int r = key.second.degree() - key.first;
        if (first || r > best) {
            best = r;
            first = false;
        }
    }
    return best;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a) {
    if (a.vars() != I.vars())
        throw RingMismatch("upper_koszul_complex: multidegree from a different ring");
    if (!contains(I, a))
        return SimplicialComplex();
    std::vector<int> supp;
    for (int v = 1; v <= a.vars(); ++v)
        if (a.exponent(v) > 0)
            supp.push_back(v);
    if (supp.size() > 63)
        throw DomainError("upper_koszul_complex: support larger than 63 variables");
    std::set<SimplicialComplex::Face> faces;
    const std::uint64_t subsets = std::uint64_t(1) << supp.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Monomial quotient = a;
        SimplicialComplex::Face face;
        for (std::size_t b = 0; b < supp.size(); ++b)
            if (mask >> b & 1) {
                quotient = quotient.with_exponent(supp[b], quotient.exponent(supp[b]) - 1);
                face.push_back(supp[b]);
            }
        if (contains(I, quotient))
            faces.insert(std::move(face));
    }
    return SimplicialComplex::from_closed_faces(std::move(supp), std::move(faces));
}

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field,
                       const BettiOptions& opts) {
    detail::require_nonzero_proper(I, "betti_table");
    const int n = I.vars();
    std::vector<Int> top(static_cast<std::size_t>(n), Int(0));
    for (const auto& g : I.generators())
        for (int v = 1; v <= n; ++v)
            if (g.exponent(v) > top[static_cast<std::size_t>(v - 1)])
                top[static_cast<std::size_t>(v - 1)] = g.exponent(v);
    Int cells = 1;
    for (const auto& t : top)
        cells *= t + 1;
    if (cells > opts.cell_budget)
        throw BudgetExceeded("betti_table: multidegree lattice has " + cells.str() +
                                 " cells, budget is " + std::to_string(opts.cell_budget),
                             opts.cell_budget);

    BettiTable table;
    std::vector<Int> a(static_cast<std::size_t>(n), Int(0));
    for (;;) {
        const Monomial xa(a);
        if (contains(I, xa)) {
            const auto ranks = reduced_homology_ranks(upper_koszul_complex(I, xa), field);
            for (const auto& [k, r] : ranks.nonzero()) {
                assert(k + 1 < n);  // syzygies stop before the variable count
                table.set(k + 1, xa, r);
            }
        }
        std::size_t pos = 0;
        while (pos < a.size() && a[pos] == top[pos])
            a[pos++] = 0;
        if (pos == a.size())
            break;
        ++a[pos];
    }
    return table;
}

RegularityResult regularity(const MonomialIdeal& I, const FieldSpec& field,
                            RegularityMode mode, const BettiOptions& opts) {
    detail::require_nonzero_proper(I, "regularity");
    const auto fast = [&] {
        return RegularityResult{stats(I).deg, RegularityMethod::stable_degree};
    };
    const auto oracle = [&] {
        return RegularityResult{betti_table(I, field, opts).regularity(),
                                RegularityMethod::homology};
    };
    switch (mode) {
    case RegularityMode::fast_only:
        if (!is_stable(I))
            throw DomainError("regularity: fast path requires a stable ideal");
        return fast();
    case RegularityMode::oracle_only:
        return oracle();
    case RegularityMode::cross_check: {
        const RegularityResult r = oracle();
        if (is_stable(I) && r.value != stats(I).deg)
            throw SelfCheckFailed("regularity: stable fast path gives " + stats(I).deg.str() +
                                  " but the homology oracle gives " + r.value.str());
        return r;
    }
    case RegularityMode::automatic:
        break;
    }
    return is_stable(I) ? fast() : oracle();
}

RegularityBound regularity_upper_bound(const MonomialIdeal& I) {
    detail::require_nonzero_proper(I, "regularity_upper_bound");
    const IdealStats st = stats(I);
    RegularityBound bound{st.q, std::nullopt};
    for (Int e = st.deg; e <= st.q; ++e)
        if (is_stable(truncate(I, e))) {
            bound.stable_truncation_degree = e;
            break;
        }
    return bound;
}

}  // namespace borelreg
