#pragma once

#include <cstdint>
#include <string>

#include "borelreg/errors.hpp"

namespace borelreg {

/// Coefficient field for homology ranks: the rationals (default) or a prime
/// field F_p. Monomial Betti numbers depend on the field only through its
/// characteristic, so finite vs infinite is immaterial here.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::uint32_t p);

    bool is_rationals() const { return p_ == 0; }
    /// 0 for the rationals, p otherwise.
    std::uint32_t characteristic() const { return p_; }

    std::string str() const {
        return is_rationals() ? "Q" : "F" + std::to_string(p_);
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

}  // namespace borelreg
