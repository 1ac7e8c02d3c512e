#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "borelreg/homology.hpp"
#include "borelreg/ideal.hpp"

namespace borelreg {

/// Multigraded Betti numbers beta_{i,a} of the ideal, nonzero entries only.
/// Row i = 0 lists exactly the minimal generators, each with value 1.
class BettiTable {
public:
    using Key = std::pair<int, Monomial>;

    void set(int i, const Monomial& a, int value);
    int at(int i, const Monomial& a) const;
    const std::map<Key, int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Graded table: beta_{i,j} summed over multidegrees of total degree j.
    std::map<std::pair<int, Int>, int> graded() const;

    /// max over nonzero entries of |a| - i. Requires a nonempty table.
    Int regularity() const;

private:
    std::map<Key, int> entries_;
};

struct BettiOptions {
    /// Upper bound on the number of multidegree lattice points enumerated.
    std::uint64_t cell_budget = 1'000'000;
};

/// The upper Koszul complex K^a(I): vertex set supp(a), faces the subsets S
/// with x^a / prod_{i in S} x_i in I. Void when x^a is not in I; downward
/// closure holds because membership survives multiplication.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a);

/// All beta_{i,a}(I) by reduced homology of K^a(I), a ranging over the box
/// 0 <= a <= lcm(G(I)). Throws BudgetExceeded before enumerating when the
/// box holds more cells than the budget allows.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field,
                       const BettiOptions& opts = {});

enum class RegularityMethod { stable_degree, homology };

enum class RegularityMode {
    /// Stable ideals take the degree fast path, everything else the oracle.
    automatic,
    /// Degree fast path only; DomainError when the ideal is not stable.
    fast_only,
    /// Homology oracle only, never the fast path.
    oracle_only,
    /// Oracle always; on stable ideals also the fast path, and the two must
    /// agree or SelfCheckFailed is thrown.
    cross_check,
};

struct RegularityResult {
    Int value;
    RegularityMethod method;
};

/// Castelnuovo-Mumford regularity of a nonzero proper monomial ideal.
RegularityResult regularity(const MonomialIdeal& I, const FieldSpec& field,
                            RegularityMode mode = RegularityMode::automatic,
                            const BettiOptions& opts = {});

/// Certified upper bound for reg(I) from stable truncations: when I_{>=e} is
/// stable for some e >= deg(I), then reg(I) <= e.
struct RegularityBound {
    Int q_bound;
    /// Least e in [deg(I), q(I)] with I_{>=e} stable, when one exists.
    std::optional<Int> stable_truncation_degree;
    /// The certified bound itself; equals stable_truncation_degree.
    std::optional<Int> certified_upper() const { return stable_truncation_degree; }
};

/// Scans e = deg(I), ..., q(I) for the least stable truncation. The scan
/// reaches q(I) exactly when the ideal is Borel type, so for those ideals the
/// bound is always present.
RegularityBound regularity_upper_bound(const MonomialIdeal& I);

}  // namespace borelreg
