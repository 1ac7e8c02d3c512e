#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "borelreg/ideal.hpp"

namespace borelreg {

/// Visits every nonzero proper monomial ideal whose minimal generators have
/// degree <= dmax and count <= gmax, each exactly once, in a deterministic
/// order (backtracking over divisibility antichains).
void enumerate_ideals(const RingContext& ring, int dmax, int gmax,
                      const std::function<void(const MonomialIdeal&)>& visit);

/// The enumeration collected into a vector. Small parameter ranges only.
std::vector<MonomialIdeal> all_ideals(const RingContext& ring, int dmax, int gmax);

/// Deterministic generator for the harness. Picks go through plain modulo on
/// the raw mt19937_64 stream, which the standard pins down bit for bit;
/// distribution adaptors would not be reproducible across libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform-enough pick in [lo, hi]. Modulo bias is irrelevant here.
    int pick(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// A random monomial of the given positive degree.
Monomial random_monomial(const RingContext& ring, int degree, Rng& rng);

/// A random nonzero proper ideal: up to gmax random monomials of degree
/// 1..dmax, minimalized.
MonomialIdeal random_antichain(const RingContext& ring, int dmax, int gmax, Rng& rng);

/// Intersection of `components` random irreducible ideals whose supports are
/// the prefixes {1..r}, exponents in 1..dmax. Borel type by construction;
/// deterministic per seed.
MonomialIdeal random_borel_type(const RingContext& ring, int dmax, int components,
                                std::uint64_t seed);

/// A random ideal drawn from one of three constructions (antichain,
/// intersection of two antichains, stable closure), deterministic per seed.
MonomialIdeal random_mixed(const RingContext& ring, int dmax, int gmax, std::uint64_t seed);

/// The smallest stable ideal containing the generators: the exchange moves
/// x_j * u / x_{m(u)}, j < m(u), are applied until closed, then minimalized.
MonomialIdeal stable_closure(const RingContext& ring, const std::vector<Monomial>& gens);

/// Relabels variables so the chain of associated primes becomes a chain of
/// prefix primes: variables of the smallest prime first, then each next
/// layer, ties and leftovers by original index. Throws NotAChain when the
/// associated primes are not totally ordered by inclusion.
MonomialIdeal prefix_normalize(const MonomialIdeal& I);

}  // namespace borelreg
