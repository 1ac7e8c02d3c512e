#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "borelreg/harness.hpp"
#include "borelreg/io.hpp"
#include "borelreg/json_util.hpp"
#include "borelreg/report.hpp"
#include "borelreg/verify.hpp"

namespace {

using namespace borelreg;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

FieldSpec parse_field(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q")
        return FieldSpec::rationals();
    if (s.size() > 1 && s[0] == 'f') {
        std::uint64_t p = 0;
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw InvalidField("field must be q or f<p>, got `" + s + "`");
            p = p * 10 + static_cast<std::uint64_t>(s[k] - '0');
            if (p > 0x7fffffffULL)
                throw InvalidField("field characteristic too large: " + s);
        }
        return FieldSpec::prime_field(static_cast<std::uint32_t>(p));
    }
    throw InvalidField("field must be q or f<p>, got `" + s + "`");
}

std::uint64_t resolve_budget(std::uint64_t flag_value) {
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("BORELREG_BUDGET")) {
        const std::string s(env);
        if (s.empty())
            throw DomainError("BORELREG_BUDGET is empty");
        std::uint64_t value = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("BORELREG_BUDGET must be a positive integer, got `" + s + "`");
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
            if (value > (std::uint64_t(1) << 62))
                throw DomainError("BORELREG_BUDGET too large: " + s);
        }
        if (value == 0)
            throw DomainError("BORELREG_BUDGET must be positive");
        return value;
    }
    return 1'000'000;
}

struct Options {
    std::string file;
    std::string field = "q";
    std::uint64_t budget = 0;  // 0 = take BORELREG_BUDGET or the default
    bool json = false;
    bool oracle_only = false;
    bool fast_only = false;
    bool cross_check = false;
    std::string suite;
    std::uint64_t seed = 1;
    int count = 0;
    int nmax = 0;
    int dmax = 0;
};

int cmd_analyze(const Options& o) {
    const MonomialIdeal I = parse_ideal(read_input(o.file));
    BettiOptions bo;
    bo.cell_budget = resolve_budget(o.budget);
    const AnalysisReport r = analyze(I, parse_field(o.field), bo);
    std::cout << (o.json ? report_json(r) : report_text(r));
    std::ostringstream times;
    times << "timings (ms):";
    for (const auto& [name, ms] : r.timings_ms)
        times << " " << name << "=" << ms;
    std::cerr << times.str() << "\n";
    return 0;
}

int cmd_reg(const Options& o) {
    const MonomialIdeal I = parse_ideal(read_input(o.file));
    BettiOptions bo;
    bo.cell_budget = resolve_budget(o.budget);
    RegularityMode mode = RegularityMode::automatic;
    if (o.oracle_only)
        mode = RegularityMode::oracle_only;
    else if (o.fast_only)
        mode = RegularityMode::fast_only;
    else if (o.cross_check)
        mode = RegularityMode::cross_check;
    const FieldSpec field = parse_field(o.field);
    const RegularityResult r = regularity(I, field, mode, bo);
    const char* method = r.method == RegularityMethod::stable_degree ? "stable-degree" : "homology";
    if (o.json) {
        nlohmann::json j;
        j["schema"] = 1;
        j["kind"] = "regularity";
        j["field"] = field.str();
        j["input"] = serialize_ideal(I);
        j["value"] = json_int(r.value);
        j["method"] = method;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "reg(I) = " << r.value << " [" << method << "]\n";
    }
    return 0;
}

int cmd_betti(const Options& o) {
    const MonomialIdeal I = parse_ideal(read_input(o.file));
    BettiOptions bo;
    bo.cell_budget = resolve_budget(o.budget);
    const FieldSpec field = parse_field(o.field);
    const BettiTable t = betti_table(I, field, bo);
    std::cout << (o.json ? betti_json(I, field, t) : betti_text(t));
    return 0;
}

int cmd_decompose(const Options& o) {
    const MonomialIdeal I = parse_ideal(read_input(o.file));
    const auto comps = irreducible_decomposition(I);
    const auto primes = associated_primes(I);
    if (o.json) {
        nlohmann::json j;
        j["schema"] = 1;
        j["kind"] = "decomposition";
        j["input"] = serialize_ideal(I);
        nlohmann::json comp_list = nlohmann::json::array();
        for (const auto& c : comps) {
            const MonomialIdeal component = c.as_ideal();
            nlohmann::json one = nlohmann::json::array();
            for (const Monomial& g : component.generators())
                one.push_back(format_monomial(g));
            comp_list.push_back(std::move(one));
        }
        j["components"] = std::move(comp_list);
        nlohmann::json prime_list = nlohmann::json::array();
        for (const auto& p : primes)
            prime_list.push_back(std::vector<int>(p.support.begin(), p.support.end()));
        j["associated_primes"] = std::move(prime_list);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "irreducible components:\n";
        for (const auto& c : comps)
            std::cout << "  " << format_ideal(c.as_ideal()) << "\n";
        std::cout << "associated primes:\n";
        for (const auto& p : primes) {
            std::cout << "  (";
            bool first = true;
            for (int v : p.support) {
                std::cout << (first ? "" : ", ") << "x" << v;
                first = false;
            }
            std::cout << ")\n";
        }
    }
    return 0;
}

int cmd_check_theorem(const Options& o) {
    const MonomialIdeal I = parse_ideal(read_input(o.file));
    const CharReport c = check_char_theorem(I);
    if (o.json) {
        nlohmann::json j;
        j["schema"] = 1;
        j["kind"] = "char-theorem";
        j["input"] = serialize_ideal(I);
        j["borel_type"] = c.borel_type;
        j["ass_all_prefix"] = c.ass_all_prefix;
        j["truncation_stable"] = c.truncation_stable;
        j["q_used"] = json_int(c.q_used);
        j["consistent"] = c.consistent();
        std::cout << j.dump(2) << "\n";
    } else {
        const auto yesno = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "borel_type: " << yesno(c.borel_type) << "\n"
                  << "ass_all_prefix: " << yesno(c.ass_all_prefix) << "\n"
                  << "truncation_stable: " << yesno(c.truncation_stable) << " (at q=" << c.q_used
                  << ")\n"
                  << "consistent: " << yesno(c.consistent()) << "\n";
    }
    if (!c.consistent()) {
        std::cerr << "the three characterization routes disagree; this input is a "
                     "counterexample candidate, please report it\n";
        return 5;
    }
    return 0;
}

int cmd_verify(const Options& o) {
    SuiteOptions so;
    so.seed = o.seed;
    so.count = o.count;
    so.nmax = o.nmax;
    so.dmax = o.dmax;
    so.cell_budget = resolve_budget(o.budget);
    const SuiteResult r = run_suite(o.suite, so);
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = "verify";
    j["suite"] = r.name;
    j["params"] = {{"seed", o.seed},
                   {"count", o.count},
                   {"nmax", o.nmax},
                   {"dmax", o.dmax},
                   {"budget", so.cell_budget}};
    j["counters"] = r.counters;
    j["checked"] = r.checked();
    j["violations"] = r.violations();
    j["notes"] = r.notes;
    j["passed"] = r.passed();
    std::cout << j.dump(2) << "\n";
    return r.passed() ? 0 : 5;
}

int run(int argc, char** argv) {
    CLI::App app{"exact calculator for monomial ideals: stability, saturations, irreducible "
                 "decomposition, Betti tables, Castelnuovo-Mumford regularity and the "
                 "verification suites behind them"};
    app.require_subcommand(1);
    Options o;

    const auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", o.file, "ideal file (`-` reads stdin)")->required();
    };
    const auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", o.field, "coefficient field: q (default) or f<p>, p prime");
    };
    const auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", o.budget,
                        "multidegree cell budget for the Betti oracle (default " +
                            std::to_string(1'000'000) + ", or BORELREG_BUDGET)")
            ->check(CLI::PositiveNumber);
    };
    const auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "machine-readable JSON on stdout");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one ideal");
    add_file(analyze_cmd);
    add_field(analyze_cmd);
    add_budget(analyze_cmd);
    add_json(analyze_cmd);

    auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    add_file(reg_cmd);
    add_field(reg_cmd);
    add_budget(reg_cmd);
    add_json(reg_cmd);
    auto* oracle_flag =
        reg_cmd->add_flag("--oracle-only", o.oracle_only, "homology oracle, no fast path");
    auto* fast_flag = reg_cmd->add_flag("--fast-only", o.fast_only,
                                        "stable-degree fast path; error if not stable");
    auto* cross_flag = reg_cmd->add_flag("--cross-check", o.cross_check,
                                         "run both routes and require agreement");
    oracle_flag->excludes(fast_flag)->excludes(cross_flag);
    fast_flag->excludes(cross_flag);

    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti table");
    add_file(betti_cmd);
    add_field(betti_cmd);
    add_budget(betti_cmd);
    add_json(betti_cmd);

    auto* dec_cmd = app.add_subcommand("decompose",
                                       "irredundant irreducible decomposition and Ass");
    add_file(dec_cmd);
    add_json(dec_cmd);

    auto* chk_cmd = app.add_subcommand(
        "check-theorem", "evaluate the three Borel-type characterizations independently");
    add_file(chk_cmd);
    add_json(chk_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("--suite", o.suite, "suite name (see `verify --list`)");
    verify_cmd->add_option("--seed", o.seed, "base seed for randomized suites");
    verify_cmd->add_option("--count", o.count, "instance count override")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--nmax", o.nmax, "ring-size override")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--dmax", o.dmax, "degree override")->check(CLI::NonNegativeNumber);
    add_budget(verify_cmd);
    bool list_suites = false;
    verify_cmd->add_flag("--list", list_suites, "list suite names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "command line error: " << e.what() << "\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 0;
    if (analyze_cmd->parsed())
        code = cmd_analyze(o);
    else if (reg_cmd->parsed())
        code = cmd_reg(o);
    else if (betti_cmd->parsed())
        code = cmd_betti(o);
    else if (dec_cmd->parsed())
        code = cmd_decompose(o);
    else if (chk_cmd->parsed())
        code = cmd_check_theorem(o);
    else if (verify_cmd->parsed()) {
        if (list_suites) {
            for (const auto& name : suite_names())
                std::cout << name << "\n";
            return 0;
        }
        if (o.suite.empty())
            throw DomainError("verify: --suite is required (or --list to see the names)");
        code = cmd_verify(o);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    std::cerr << "elapsed: " << ms << " ms\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const SelfCheckFailed& e) {
        std::cerr << "self-check failed: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
