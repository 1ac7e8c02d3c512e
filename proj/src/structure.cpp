#include "borelreg/structure.hpp"

#include <algorithm>
#include <utility>

namespace borelreg {

MonomialIdeal IrreducibleComponent::as_ideal() const {
    const RingContext ring(n);
    std::vector<Monomial> gens;
    gens.reserve(entries.size());
    for (const auto& [var, exp] : entries)
        gens.push_back(Monomial::variable(ring, var, exp));
    return minimalize(ring, std::move(gens));
}

std::set<int> IrreducibleComponent::support() const {
    std::set<int> s;
    for (const auto& [var, exp] : entries)
        s.insert(var);
    return s;
}

bool is_stable(const MonomialIdeal& I) {
    if (I.is_zero())
        throw ZeroIdealError("is_stable");
    for (const Monomial& g : I.generators()) {
        if (g.is_unit())
            continue;  // no j < m(g) exists
        const int m = max_index(g);
        for (int j = 1; j < m; ++j) {
            Monomial moved = g.with_exponent(m, g.exponent(m) - 1)
                                 .with_exponent(j, g.exponent(j) + 1);
            if (!contains(I, moved))
                return false;
        }
    }
    return true;
}

MonomialIdeal saturate_variable(const MonomialIdeal& I, int j) {
    if (I.is_zero())
        throw ZeroIdealError("saturate_variable");
    if (j < 1 || j > I.vars())
        throw IndexOutOfRange("saturate_variable: index " + std::to_string(j) +
                              " outside 1.." + std::to_string(I.vars()));
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const Monomial& g : I.generators())
        gens.push_back(g.with_exponent(j, 0));
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal saturate_prefix(const MonomialIdeal& I, int j) {
    if (I.is_zero())
        throw ZeroIdealError("saturate_prefix");
    if (j < 1 || j > I.vars())
        throw IndexOutOfRange("saturate_prefix: index " + std::to_string(j) +
                              " outside 1.." + std::to_string(I.vars()));
    const RingContext ring = I.ring();
    MonomialIdeal current = I;
    for (;;) {
        // I : (x_1,...,x_j) is the intersection of the colons by each variable.
        MonomialIdeal next = colon_by_monomial(current, Monomial::variable(ring, 1));
        for (int k = 2; k <= j; ++k)
            next = intersect(next, colon_by_monomial(current, Monomial::variable(ring, k)));
        if (next == current)
            return current;
        current = std::move(next);
    }
}

bool is_borel_type(const MonomialIdeal& I) {
    detail::require_nonzero_proper(I, "is_borel_type");
    for (int j = 1; j <= I.vars(); ++j)
        if (saturate_variable(I, j) != saturate_prefix(I, j))
            return false;
    return true;
}

bool is_borel_type_exchange(const MonomialIdeal& I) {
    detail::require_nonzero_proper(I, "is_borel_type_exchange");
    const Int t_max = stats(I).q;
    for (const Monomial& g : I.generators()) {
        for (int i = 2; i <= I.vars(); ++i) {
            if (g.exponent(i) == 0)
                continue;
            const Monomial reduced = g.with_exponent(i, 0);
            for (int j = 1; j < i; ++j) {
                Monomial probe = reduced.with_exponent(j, reduced.exponent(j) + t_max);
                if (!contains(I, probe))
                    return false;
            }
        }
    }
    return true;
}

namespace {

int lowest_variable(const Monomial& g) {
    for (int i = 1; i <= g.vars(); ++i)
        if (g.exponent(i) > 0)
            return i;
    throw UnitMonomialError("lowest_variable");
}

bool is_pure_power(const Monomial& g) {
    return !g.is_unit() && lowest_variable(g) == max_index(g);
}

void decompose_rec(const MonomialIdeal& I, std::set<IrreducibleComponent>& out) {
    const std::vector<Monomial>& gens = I.generators();
    auto split_at = std::find_if(gens.begin(), gens.end(),
                                 [](const Monomial& g) { return !is_pure_power(g); });
    if (split_at == gens.end()) {
        IrreducibleComponent comp;
        comp.n = I.vars();
        for (const Monomial& g : gens)
            comp.entries[max_index(g)] = g.exponent(max_index(g));
        out.insert(std::move(comp));
        return;
    }
    // Split g = x_i^{e_i} * (g / x_i^{e_i}) at its lowest variable; the ideal
    // is the intersection of the two ideals with g replaced by one factor.
    const Monomial g = *split_at;
    const int i = lowest_variable(g);
    const Monomial pure = Monomial::variable(I.ring(), i, g.exponent(i));
    const Monomial rest = g.with_exponent(i, 0);
    std::vector<Monomial> base;
    base.reserve(gens.size());
    for (const Monomial& h : gens)
        if (h != g)
            base.push_back(h);

    std::vector<Monomial> left = base;
    left.push_back(pure);
    decompose_rec(minimalize(I.ring(), std::move(left)), out);

    std::vector<Monomial> right = std::move(base);
    right.push_back(rest);
    decompose_rec(minimalize(I.ring(), std::move(right)), out);
}

/// Intersection of the family with one member left out, for every member,
/// via prefix/suffix partial intersections.
std::vector<MonomialIdeal> leave_one_out_intersections(const std::vector<MonomialIdeal>& ideals,
                                                       const RingContext& ring) {
    const std::size_t c = ideals.size();
    std::vector<MonomialIdeal> prefix(c + 1, unit_ideal(ring));
    std::vector<MonomialIdeal> suffix(c + 1, unit_ideal(ring));
    for (std::size_t k = 0; k < c; ++k)
        prefix[k + 1] = intersect(prefix[k], ideals[k]);
    for (std::size_t k = c; k-- > 0;)
        suffix[k] = intersect(suffix[k + 1], ideals[k]);
    std::vector<MonomialIdeal> out;
    out.reserve(c);
    for (std::size_t k = 0; k < c; ++k)
        out.push_back(intersect(prefix[k], suffix[k + 1]));
    return out;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    detail::require_nonzero_proper(I, "irreducible_decomposition");
    std::set<IrreducibleComponent> found;
    decompose_rec(I, found);
    std::vector<IrreducibleComponent> comps(found.begin(), found.end());

    // Remove components containing the intersection of the others, one at a
    // time, until irredundant. The decomposition is unique, so the removal
    // order does not affect the result.
    const RingContext ring = I.ring();
    std::vector<MonomialIdeal> as_ideals;
    for (const IrreducibleComponent& c : comps)
        as_ideals.push_back(c.as_ideal());
    for (;;) {
        if (comps.size() <= 1)
            break;
        std::vector<MonomialIdeal> rest = leave_one_out_intersections(as_ideals, ring);
        std::size_t redundant = comps.size();
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (contains(as_ideals[k], rest[k])) {
                redundant = k;
                break;
            }
        }
        if (redundant == comps.size())
            break;
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(redundant));
        as_ideals.erase(as_ideals.begin() + static_cast<std::ptrdiff_t>(redundant));
    }
    return comps;
}

std::vector<AssociatedPrime> associated_primes(const MonomialIdeal& I) {
    std::set<AssociatedPrime> primes;
    for (const IrreducibleComponent& comp : irreducible_decomposition(I)) {
        AssociatedPrime p;
        p.n = I.vars();
        p.support = comp.support();
        primes.insert(std::move(p));
    }
    return {primes.begin(), primes.end()};
}

bool ass_totally_ordered(const MonomialIdeal& I) {
    const std::vector<AssociatedPrime> primes = associated_primes(I);
    // Canonical order is by size then lex; a chain must be nested along it.
    for (std::size_t k = 0; k + 1 < primes.size(); ++k) {
        const auto& small = primes[k].support;
        const auto& big = primes[k + 1].support;
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
            return false;
    }
    return true;
}

CharReport check_char_theorem(const MonomialIdeal& I) {
    detail::require_nonzero_proper(I, "check_char_theorem");
    CharReport report;
    report.q_used = stats(I).q;
    report.borel_type = is_borel_type(I);
    const std::vector<AssociatedPrime> primes = associated_primes(I);
    report.ass_all_prefix =
        std::all_of(primes.begin(), primes.end(),
                    [](const AssociatedPrime& p) { return p.is_prefix(); });
    report.truncation_stable = is_stable(truncate(I, report.q_used));
    return report;
}

}  // namespace borelreg
