#pragma once

#include <string>

#include "borelreg/ideal.hpp"

namespace borelreg {

/// Parses the two-line ideal format and returns the minimalized ideal:
///
///   ring n=<int>
///   I = <monomial>(, <monomial>)*
///
/// A monomial is `x<idx>` factors with optional `^<exp>`, joined by `*`;
/// `1` is the unit monomial. Whitespace is free. An empty right-hand side
/// denotes the zero ideal. Errors carry 1-based line and column positions.
MonomialIdeal parse_ideal(const std::string& text);

/// "x1^2*x2" style; "1" for the unit monomial.
std::string format_monomial(const Monomial& u);

/// "(x1^2, x2^2)"; "(0)" for the zero ideal.
std::string format_ideal(const MonomialIdeal& I);

/// The full two-line document, ending in a newline. parse_ideal round-trips
/// it, zero and unit ideals included.
std::string serialize_ideal(const MonomialIdeal& I);

}  // namespace borelreg
