#pragma once

#include <vector>

#include "borelreg/monomial.hpp"

namespace borelreg {

/// A monomial ideal held in canonical form: the minimal generating set G(I),
/// sorted grlex-descending. Equality of ideals is equality of these lists.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    /// Zero ideal in the given ring.
    explicit MonomialIdeal(const RingContext& ring) : n_(ring.num_vars) {}

    /// Trusted constructor: `gens` must already be an antichain under
    /// divisibility, sorted grlex-descending. Checked in debug builds only;
    /// general callers go through minimalize().
    static MonomialIdeal from_minimal_generators(const RingContext& ring,
                                                 std::vector<Monomial> gens);

    RingContext ring() const { return RingContext(n_); }
    int vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
    /// Proper means different from (1); the zero ideal is proper.
    bool is_proper() const { return !is_unit(); }

private:
    int n_;
    std::vector<Monomial> gens_;
};

bool operator==(const MonomialIdeal& I, const MonomialIdeal& J);
inline bool operator!=(const MonomialIdeal& I, const MonomialIdeal& J) { return !(I == J); }

/// deg(I), m(I) and the threshold q(I) = m(I)(deg(I)-1)+1.
struct IdealStats {
    Int deg;
    int m;
    Int q;
};

MonomialIdeal zero_ideal(const RingContext& ring);
MonomialIdeal unit_ideal(const RingContext& ring);

/// Canonical form of the ideal generated by `gens`: duplicates and monomials
/// divisible by another generator removed, result sorted grlex-descending.
/// An empty list yields the zero ideal.
MonomialIdeal minimalize(const RingContext& ring, std::vector<Monomial> gens);

/// Membership: some generator divides u. False for the zero ideal.
bool contains(const MonomialIdeal& I, const Monomial& u);

/// Ideal inclusion J `subseteq` I, tested generator by generator.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : (w), computed per generator as colon_quotient and minimalized.
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& w);

/// Intersection via pairwise lcms of generators.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// The truncation I_{>=e}: the ideal generated by the monomials of I of
/// degree >= e. When every generator already has degree >= e this is I itself.
MonomialIdeal truncate(const MonomialIdeal& I, const Int& e);

/// Rejects the zero and unit ideals with distinct errors.
IdealStats stats(const MonomialIdeal& I);

}  // namespace borelreg
