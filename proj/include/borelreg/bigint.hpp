#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace borelreg {

/// Arbitrary-precision integer used for exponents, degrees and all derived
/// quantities (q(I) and truncation thresholds grow with the input, and the
/// Betti lattice size is a product of exponents; none of these may overflow).
using Int = boost::multiprecision::cpp_int;

}  // namespace borelreg
