#include "borelreg/monomial.hpp"

#include <numeric>
#include <utility>

namespace borelreg {

Monomial::Monomial(std::vector<Int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty())
        throw DomainError("Monomial: empty exponent vector");
    degree_ = 0;
    for (const Int& e : exps_) {
        if (e < 0)
            throw DomainError("Monomial: negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::unit(const RingContext& ring) {
    return Monomial(std::vector<Int>(static_cast<std::size_t>(ring.num_vars), Int(0)));
}

Monomial Monomial::variable(const RingContext& ring, int var, Int exp) {
    if (var < 1 || var > ring.num_vars)
        throw IndexOutOfRange("Monomial::variable: index " + std::to_string(var) +
                              " outside 1.." + std::to_string(ring.num_vars));
    std::vector<Int> e(static_cast<std::size_t>(ring.num_vars), Int(0));
    e[static_cast<std::size_t>(var - 1)] = std::move(exp);
    return Monomial(std::move(e));
}

const Int& Monomial::exponent(int var) const {
    if (var < 1 || var > vars())
        throw IndexOutOfRange("Monomial::exponent: index " + std::to_string(var) +
                              " outside 1.." + std::to_string(vars()));
    return exps_[static_cast<std::size_t>(var - 1)];
}

Monomial Monomial::with_exponent(int var, Int e) const {
    if (var < 1 || var > vars())
        throw IndexOutOfRange("Monomial::with_exponent: index " + std::to_string(var) +
                              " outside 1.." + std::to_string(vars()));
    std::vector<Int> out = exps_;
    out[static_cast<std::size_t>(var - 1)] = std::move(e);
    return Monomial(std::move(out));
}

bool grlex_less(const Monomial& u, const Monomial& v) {
    detail::require_same_ring(u, v, "grlex_less");
    if (u.degree() != v.degree())
        return u.degree() < v.degree();
    const auto& a = u.exponents();
    const auto& b = v.exponents();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

bool operator==(const Monomial& u, const Monomial& v) {
    detail::require_same_ring(u, v, "operator==");
    return u.exponents() == v.exponents();
}

bool divides(const Monomial& u, const Monomial& v) {
    detail::require_same_ring(u, v, "divides");
    const auto& a = u.exponents();
    const auto& b = v.exponents();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

int max_index(const Monomial& u) {
    for (int i = u.vars(); i >= 1; --i)
        if (u.exponent(i) > 0)
            return i;
    throw UnitMonomialError("max_index");
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    detail::require_same_ring(u, v, "lcm");
    std::vector<Int> out(u.exponents());
    const auto& b = v.exponents();
    for (std::size_t i = 0; i < out.size(); ++i)
        if (b[i] > out[i])
            out[i] = b[i];
    return Monomial(std::move(out));
}

Monomial mul(const Monomial& u, const Monomial& v) {
    detail::require_same_ring(u, v, "mul");
    std::vector<Int> out(u.exponents());
    const auto& b = v.exponents();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return Monomial(std::move(out));
}

Monomial colon_quotient(const Monomial& g, const Monomial& w) {
    detail::require_same_ring(g, w, "colon_quotient");
    std::vector<Int> out(g.exponents());
    const auto& b = w.exponents();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b[i];
        if (out[i] < 0)
            out[i] = 0;
    }
    return Monomial(std::move(out));
}

void for_each_monomial_of_degree(const RingContext& ring, const Int& degree,
                                 const std::function<void(const Monomial&)>& visit) {
    if (degree < 0)
        throw DomainError("for_each_monomial_of_degree: negative degree");
    const int n = ring.num_vars;
    std::vector<Int> exps(static_cast<std::size_t>(n), Int(0));
    // Compositions of `degree` into n parts, first part largest first; this
    // emits grlex-descending order.
    std::function<void(int, Int)> rec = [&](int pos, Int remaining) {
        if (pos == n - 1) {
            exps[static_cast<std::size_t>(pos)] = remaining;
            visit(Monomial(exps));
            return;
        }
        for (Int take = remaining; take >= 0; --take) {
            exps[static_cast<std::size_t>(pos)] = take;
            rec(pos + 1, remaining - take);
        }
        exps[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, degree);
}

}  // namespace borelreg
