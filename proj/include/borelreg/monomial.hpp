#pragma once

#include <functional>
#include <vector>

#include "borelreg/bigint.hpp"
#include "borelreg/errors.hpp"

namespace borelreg {

/// The ambient polynomial ring K[x_1,...,x_n], reduced to what monomial
/// arithmetic needs: the number of variables. Variables are indexed 1..n.
struct RingContext {
    int num_vars;

    explicit RingContext(int n) : num_vars(n) {
        if (n < 1)
            throw DomainError("RingContext: need at least one variable, got " +
                              std::to_string(n));
    }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.num_vars == b.num_vars;
    }
};

/// A monomial as an exponent vector over a fixed ring. Immutable after
/// construction; the total degree is cached.
class Monomial {
public:
    /// Exponents indexed 0..n-1 internally; entry i-1 is the exponent of x_i.
    explicit Monomial(std::vector<Int> exponents);

    static Monomial unit(const RingContext& ring);
    /// x_var^exp
    static Monomial variable(const RingContext& ring, int var, Int exp = 1);

    int vars() const { return static_cast<int>(exps_.size()); }
    const std::vector<Int>& exponents() const { return exps_; }
    const Int& degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    /// Exponent of x_var, var in 1..n.
    const Int& exponent(int var) const;

    /// Copy with the exponent of x_var replaced by e (e >= 0).
    Monomial with_exponent(int var, Int e) const;

private:
    std::vector<Int> exps_;
    Int degree_;
};

/// Graded-lexicographic order: total degree first, then lexicographic with
/// x_1 > x_2 > ... > x_n. The canonical generator order is the reverse.
bool grlex_less(const Monomial& u, const Monomial& v);

bool operator==(const Monomial& u, const Monomial& v);
inline bool operator!=(const Monomial& u, const Monomial& v) { return !(u == v); }
inline bool operator<(const Monomial& u, const Monomial& v) { return grlex_less(u, v); }

/// True iff u divides v (componentwise <=). Throws RingMismatch.
bool divides(const Monomial& u, const Monomial& v);

/// m(u): the largest i with x_i | u. Undefined for the unit monomial.
int max_index(const Monomial& u);

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial mul(const Monomial& u, const Monomial& v);

/// The generator image under I : (w), componentwise max(g_i - w_i, 0).
Monomial colon_quotient(const Monomial& g, const Monomial& w);

/// Visits every monomial of the given total degree in grlex-descending order.
/// The degree may be any non-negative Int; the visit count is
/// C(degree + n - 1, n - 1), so callers keep degrees at desk scale.
void for_each_monomial_of_degree(const RingContext& ring, const Int& degree,
                                 const std::function<void(const Monomial&)>& visit);

namespace detail {
inline void require_same_ring(const Monomial& u, const Monomial& v, const char* op) {
    if (u.vars() != v.vars())
        throw RingMismatch(std::string(op) + ": monomials from different rings (" +
                           std::to_string(u.vars()) + " vs " + std::to_string(v.vars()) +
                           " variables)");
}
}  // namespace detail

}  // namespace borelreg
