#pragma once

#include <map>
#include <set>
#include <vector>

#include "borelreg/ideal.hpp"

namespace borelreg {

/// An irreducible monomial ideal (x_{i_1}^{a_1},...,x_{i_r}^{a_r}),
/// stored as a map from variable index to positive exponent.
struct IrreducibleComponent {
    int n = 0;
    std::map<int, Int> entries;

    MonomialIdeal as_ideal() const;
    std::set<int> support() const;

    friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.n == b.n && a.entries == b.entries;
    }
    friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.entries < b.entries;
    }
};

/// A monomial prime ideal, identified by the set of variable indices that
/// generate it.
struct AssociatedPrime {
    int n = 0;
    std::set<int> support;

    /// True iff the support is {1,...,r} for some r.
    bool is_prefix() const {
        return !support.empty() && *support.rbegin() == static_cast<int>(support.size());
    }

    friend bool operator==(const AssociatedPrime& a, const AssociatedPrime& b) {
        return a.support == b.support;
    }
    friend bool operator<(const AssociatedPrime& a, const AssociatedPrime& b) {
        if (a.support.size() != b.support.size())
            return a.support.size() < b.support.size();
        return a.support < b.support;
    }
};

/// The three equivalent conditions of the Borel-type characterization,
/// each evaluated along an independent route.
struct CharReport {
    bool borel_type = false;            // saturation route
    bool ass_all_prefix = false;        // decomposition route
    bool truncation_stable = false;     // truncation route
    Int q_used;

    bool consistent() const {
        return borel_type == ass_all_prefix && ass_all_prefix == truncation_stable;
    }
};

/// Stability: for every generator g and j < m(g), x_j*g/x_{m(g)} lies in I.
/// Checking minimal generators suffices; the brute-force property tests
/// certify the reduction.
bool is_stable(const MonomialIdeal& I);

/// (I : x_j^infty): generator exponents of x_j zeroed out, minimalized.
MonomialIdeal saturate_variable(const MonomialIdeal& I, int j);

/// (I : (x_1,...,x_j)^infty) via the ascending colon chain, iterated to its
/// fixed point. Termination is the ascending chain condition.
MonomialIdeal saturate_prefix(const MonomialIdeal& I, int j);

/// Borel type: the two saturations agree for every j = 1..n.
bool is_borel_type(const MonomialIdeal& I);

/// The exchange formulation: for every generator g, every variable x_i
/// occurring in g (removed with its full exponent) and every j < i, some
/// power x_j^t multiplies the quotient back into I. Membership at t implies
/// membership at t+1, so only the ceiling t = q(I) is tested.
bool is_borel_type_exchange(const MonomialIdeal& I);

/// The irredundant irreducible decomposition, canonically sorted.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

/// Ass(S/I): the radicals (supports) of the irredundant irreducible
/// components, deduplicated and canonically sorted.
std::vector<AssociatedPrime> associated_primes(const MonomialIdeal& I);

/// True iff the associated primes form a chain under inclusion.
bool ass_totally_ordered(const MonomialIdeal& I);

/// Evaluates all three characterization conditions independently.
CharReport check_char_theorem(const MonomialIdeal& I);

namespace detail {
inline void require_nonzero_proper(const MonomialIdeal& I, const char* op) {
    if (I.is_zero())
        throw ZeroIdealError(op);
    if (I.is_unit())
        throw UnitIdealError(op);
}
}  // namespace detail

}  // namespace borelreg
