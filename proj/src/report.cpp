#include "borelreg/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "borelreg/io.hpp"
#include "borelreg/json_util.hpp"

namespace borelreg {

namespace {

std::string format_prime(const AssociatedPrime& p) {
    std::string out = "(";
    bool first = true;
    for (int v : p.support) {
        if (!first)
            out += ", ";
        out += "x" + std::to_string(v);
        first = false;
    }
    return out + ")";
}

const char* method_name(RegularityMethod m) {
    return m == RegularityMethod::stable_degree ? "stable-degree" : "homology";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

nlohmann::json ideal_json(const MonomialIdeal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : I.generators())
        gens.push_back(format_monomial(g));
    return gens;
}

}  // namespace

AnalysisReport analyze(const MonomialIdeal& I, const FieldSpec& field,
                       const BettiOptions& opts) {
    using clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, double>> times;
    const auto timed = [&](const char* name, auto&& op) {
        const auto t0 = clock::now();
        auto result = op();
        times.emplace_back(name,
                           std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        return result;
    };
    const IdealStats st = timed("stats", [&] { return stats(I); });
    const bool stable = timed("is_stable", [&] { return is_stable(I); });
    const CharReport rep = timed("check_char_theorem", [&] { return check_char_theorem(I); });
    auto primes = timed("associated_primes", [&] { return associated_primes(I); });
    auto comps = timed("irreducible_decomposition", [&] { return irreducible_decomposition(I); });
    const RegularityResult reg = timed("regularity", [&] {
        return regularity(I, field, RegularityMode::automatic, opts);
    });
    const RegularityBound bound = timed("regularity_upper_bound", [&] {
        return regularity_upper_bound(I);
    });
    if (bound.certified_upper() && reg.value > *bound.certified_upper())
        throw SelfCheckFailed("analyze: regularity " + reg.value.str() +
                              " exceeds the certified bound " + bound.certified_upper()->str());
    return AnalysisReport{I,   st,  stable, rep,   std::move(primes), std::move(comps),
                          reg, bound, field, std::move(times)};
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "ideal: " << format_ideal(r.ideal) << "\n";
    out << "ring: n=" << r.ideal.vars() << ", field " << r.field.str() << "\n";
    out << "stats: deg=" << r.stats.deg << " m=" << r.stats.m << " q=" << r.stats.q << "\n";
    out << "stable: " << yesno(r.stable) << "\n";
    out << "char: borel_type=" << yesno(r.char_report.borel_type)
        << " ass_all_prefix=" << yesno(r.char_report.ass_all_prefix)
        << " truncation_stable=" << yesno(r.char_report.truncation_stable) << " (at q="
        << r.char_report.q_used << ") consistent=" << yesno(r.char_report.consistent()) << "\n";
    out << "associated primes:";
    for (const auto& p : r.ass)
        out << " " << format_prime(p);
    out << "\n";
    out << "irreducible components:";
    for (const auto& c : r.decomposition)
        out << " " << format_ideal(c.as_ideal());
    out << "\n";
    out << "regularity: " << r.regularity.value << " [" << method_name(r.regularity.method)
        << "]\n";
    if (r.bound.stable_truncation_degree)
        out << "bound: least stable truncation e=" << *r.bound.stable_truncation_degree
            << ", certified reg <= " << *r.bound.certified_upper() << " (q=" << r.bound.q_bound
            << ")\n";
    else
        out << "bound: no stable truncation at or below q=" << r.bound.q_bound
            << " (not Borel type)\n";
    return out.str();
}

std::string report_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = "analysis";
    j["ring"] = {{"n", r.ideal.vars()}};
    j["field"] = r.field.str();
    j["input"] = serialize_ideal(r.ideal);
    j["ideal"] = ideal_json(r.ideal);
    j["stats"] = {{"deg", json_int(r.stats.deg)}, {"m", r.stats.m}, {"q", json_int(r.stats.q)}};
    j["stable"] = r.stable;
    j["char_theorem"] = {{"borel_type", r.char_report.borel_type},
                         {"ass_all_prefix", r.char_report.ass_all_prefix},
                         {"truncation_stable", r.char_report.truncation_stable},
                         {"q_used", json_int(r.char_report.q_used)},
                         {"consistent", r.char_report.consistent()}};
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& p : r.ass)
        primes.push_back(std::vector<int>(p.support.begin(), p.support.end()));
    j["associated_primes"] = std::move(primes);
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : r.decomposition)
        comps.push_back(ideal_json(c.as_ideal()));
    j["components"] = std::move(comps);
    j["regularity"] = {{"value", json_int(r.regularity.value)},
                       {"method", method_name(r.regularity.method)}};
    nlohmann::json bound;
    bound["q"] = json_int(r.bound.q_bound);
    if (r.bound.stable_truncation_degree) {
        bound["stable_truncation_degree"] = json_int(*r.bound.stable_truncation_degree);
        bound["certified_upper"] = json_int(*r.bound.certified_upper());
    } else {
        bound["stable_truncation_degree"] = nullptr;
        bound["certified_upper"] = nullptr;
    }
    j["bound"] = std::move(bound);
    return j.dump(2) + "\n";
}

std::string betti_text(const BettiTable& t) {
    const auto graded = t.graded();
    if (graded.empty())
        return "betti table: empty\n";
    int imax = 0;
    Int jmin = 0, jmax = 0;
    bool first = true;
    for (const auto& [key, value] : graded) {
        (void)value;
        imax = std::max(imax, key.first);
        if (first || key.second < jmin)
            jmin = key.second;
        if (first || key.second > jmax)
            jmax = key.second;
        first = false;
    }
    std::vector<Int> cols;
    for (Int jj = jmin; jj <= jmax; ++jj)
        cols.push_back(jj);
    std::size_t width = 3;
    for (const auto& [key, value] : graded) {
        (void)key;
        width = std::max(width, std::to_string(value).size() + 1);
    }
    for (const auto& c : cols)
        width = std::max(width, c.str().size() + 1);
    std::ostringstream out;
    out << "betti (graded, rows i, columns j = total degree):\n";
    out << "  i\\j";
    for (const auto& c : cols)
        out << std::string(width - c.str().size(), ' ') << c.str();
    out << "\n";
    for (int i = 0; i <= imax; ++i) {
        std::string row = std::to_string(i);
        out << "  " << row << std::string(4 - std::min<std::size_t>(4, row.size()), ' ');
        for (const auto& c : cols) {
            const auto it = graded.find({i, c});
            const std::string cell = it == graded.end() ? "." : std::to_string(it->second);
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    out << "regularity: " << t.regularity() << "\n";
    return out.str();
}

std::string betti_json(const MonomialIdeal& I, const FieldSpec& field, const BettiTable& t) {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = "betti";
    j["ring"] = {{"n", I.vars()}};
    j["field"] = field.str();
    j["input"] = serialize_ideal(I);
    j["ideal"] = ideal_json(I);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : t.entries()) {
        nlohmann::json a = nlohmann::json::array();
        for (const Int& e : key.second.exponents())
            a.push_back(json_int(e));
        entries.push_back({{"i", key.first},
                           {"a", std::move(a)},
                           {"degree", json_int(key.second.degree())},
                           {"value", value}});
    }
    j["entries"] = std::move(entries);
    nlohmann::json graded = nlohmann::json::array();
    for (const auto& [key, value] : t.graded())
        graded.push_back({{"i", key.first}, {"j", json_int(key.second)}, {"value", value}});
    j["graded"] = std::move(graded);
    j["regularity"] = json_int(t.regularity());
    return j.dump(2) + "\n";
}

}  // namespace borelreg
