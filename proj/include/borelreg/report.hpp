#pragma once

#include <string>
#include <utility>
#include <vector>

#include "borelreg/betti.hpp"
#include "borelreg/structure.hpp"

namespace borelreg {

/// Everything `analyze` computes for one ideal. Timing samples ride along
/// for diagnostics; the canonical renderings below exclude them, so equal
/// inputs print equal bytes.
struct AnalysisReport {
    MonomialIdeal ideal;
    IdealStats stats;
    bool stable;
    CharReport char_report;
    std::vector<AssociatedPrime> ass;
    std::vector<IrreducibleComponent> decomposition;
    RegularityResult regularity;
    RegularityBound bound;
    FieldSpec field;
    std::vector<std::pair<std::string, double>> timings_ms;
};

/// Runs the full battery on a nonzero proper ideal. Throws SelfCheckFailed
/// if the computed regularity ever exceeds a present certified bound.
AnalysisReport analyze(const MonomialIdeal& I, const FieldSpec& field,
                       const BettiOptions& opts = {});

std::string report_text(const AnalysisReport& r);
std::string report_json(const AnalysisReport& r);

/// Graded grid, rows i, columns j = total degree.
std::string betti_text(const BettiTable& t);
/// Multigraded entries plus the graded sums, self-contained document.
std::string betti_json(const MonomialIdeal& I, const FieldSpec& field, const BettiTable& t);

}  // namespace borelreg
