#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "borelreg/betti.hpp"
#include "borelreg/structure.hpp"

namespace borelreg {

/// Saturation by the prefix ideal (x_1..x_j) along an independent route:
/// irreducible components whose support contains {1..j} dissolve, the rest
/// intersect back together; the unit ideal when nothing is left. Used to
/// cross-check saturate_prefix.
MonomialIdeal saturate_prefix_by_decomposition(const MonomialIdeal& I, int j);

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 0;                         ///< 0 = suite default
    int nmax = 0;                          ///< 0 = suite default
    int dmax = 0;                          ///< 0 = suite default
    std::uint64_t cell_budget = 1'000'000; ///< forwarded to the Betti oracle
};

/// Aggregated outcome of one suite. Counters come in pairs: "checked.<kind>"
/// counts property evaluations, "bad.<kind>" the failures among them.
struct SuiteResult {
    std::string name;
    std::map<std::string, std::uint64_t> counters;
    std::vector<std::string> notes;  ///< first few failure details, canonical order

    std::uint64_t checked() const;
    std::uint64_t violations() const;
    bool passed() const { return checked() > 0 && violations() == 0; }
};

std::vector<std::string> suite_names();

/// Runs the named suite. Unknown names raise DomainError.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace borelreg
