#include "borelreg/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "borelreg/harness.hpp"
#include "borelreg/io.hpp"

namespace borelreg {

std::uint64_t SuiteResult::checked() const {
    std::uint64_t total = 0;
    for (const auto& [key, value] : counters)
        if (key.rfind("checked.", 0) == 0)
            total += value;
    return total;
}

std::uint64_t SuiteResult::violations() const {
    std::uint64_t total = 0;
    for (const auto& [key, value] : counters)
        if (key.rfind("bad.", 0) == 0)
            total += value;
    return total;
}

MonomialIdeal saturate_prefix_by_decomposition(const MonomialIdeal& I, int j) {
    detail::require_nonzero_proper(I, "saturate_prefix_by_decomposition");
    if (j < 1 || j > I.vars())
        throw IndexOutOfRange("saturate_prefix_by_decomposition: j=" + std::to_string(j) +
                              " outside 1..." + std::to_string(I.vars()));
    MonomialIdeal out = unit_ideal(I.ring());
    for (const auto& comp : irreducible_decomposition(I)) {
        const auto sup = comp.support();
        bool dissolves = true;
        for (int v = 1; v <= j; ++v)
            if (sup.find(v) == sup.end()) {
                dissolves = false;
                break;
            }
        if (!dissolves)
            out = intersect(out, comp.as_ideal());
    }
    return out;
}

namespace {

/// Counts property evaluations and failures; keeps the first few failure
/// descriptions. Descriptions are built lazily so passing checks cost nothing.
class Recorder {
public:
    explicit Recorder(SuiteResult& result) : result_(result) {}

    void check(const std::string& kind, bool ok,
               const std::function<std::string()>& describe) {
        ++result_.counters["checked." + kind];
        if (!ok) {
            ++result_.counters["bad." + kind];
            if (result_.notes.size() < 8)
                result_.notes.push_back(kind + ": " + describe());
        }
    }

private:
    SuiteResult& result_;
};

std::string describe_char(const CharReport& c) {
    std::ostringstream out;
    out << "borel_type=" << c.borel_type << " ass_all_prefix=" << c.ass_all_prefix
        << " truncation_stable=" << c.truncation_stable << " q=" << c.q_used;
    return out.str();
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        perm[static_cast<std::size_t>(v - 1)] = v;
    for (int k = n - 1; k > 0; --k)
        std::swap(perm[static_cast<std::size_t>(k)],
                  perm[static_cast<std::size_t>(rng.pick(0, k))]);
    return perm;
}

/// perm maps old index v to perm[v-1].
MonomialIdeal permute_variables(const MonomialIdeal& I, const std::vector<int>& perm) {
    const int n = I.vars();
    std::vector<Monomial> mapped;
    for (const Monomial& g : I.generators()) {
        std::vector<Int> exps(static_cast<std::size_t>(n), Int(0));
        for (int v = 1; v <= n; ++v)
            exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(v - 1)] - 1)] =
                g.exponent(v);
        mapped.push_back(Monomial(std::move(exps)));
    }
    return minimalize(I.ring(), std::move(mapped));
}

bool ass_all_prefix(const MonomialIdeal& I) {
    for (const auto& p : associated_primes(I))
        if (!p.is_prefix())
            return false;
    return true;
}

/// The shared per-ideal battery of the char suites. `deep` adds the
/// saturation cross-check, the decomposition checks and the field-stability
/// check, which only the exhaustive sweep can afford.
void inspect_ideal(Recorder& rec, const MonomialIdeal& I, const std::string& label,
                   bool deep, const BettiOptions& betti_opts) {
    const CharReport c = check_char_theorem(I);
    rec.check("consistent", c.consistent(),
              [&] { return label + " " + format_ideal(I) + ": " + describe_char(c); });
    rec.check("exchange-agreement", is_borel_type_exchange(I) == c.borel_type,
              [&] { return label + " " + format_ideal(I); });
    if (!deep)
        return;
    bool saturations_agree = true;
    int bad_j = 0;
    for (int j = 1; j <= I.vars(); ++j)
        if (saturate_prefix(I, j) != saturate_prefix_by_decomposition(I, j)) {
            saturations_agree = false;
            bad_j = j;
            break;
        }
    rec.check("saturation-crosscheck", saturations_agree, [&] {
        return label + " " + format_ideal(I) + " at j=" + std::to_string(bad_j);
    });
    const auto comps = irreducible_decomposition(I);
    MonomialIdeal reassembled = unit_ideal(I.ring());
    for (const auto& comp : comps)
        reassembled = intersect(reassembled, comp.as_ideal());
    rec.check("decomposition-roundtrip", reassembled == I,
              [&] { return label + " " + format_ideal(I) + " -> " + format_ideal(reassembled); });
    bool irredundant = true;
    for (std::size_t k = 0; k < comps.size() && comps.size() > 1; ++k) {
        MonomialIdeal rest = unit_ideal(I.ring());
        for (std::size_t l = 0; l < comps.size(); ++l)
            if (l != k)
                rest = intersect(rest, comps[l].as_ideal());
        if (rest == I) {
            irredundant = false;
            break;
        }
    }
    rec.check("decomposition-irredundant", irredundant,
              [&] { return label + " " + format_ideal(I); });
    const auto over_q = betti_table(I, FieldSpec::rationals(), betti_opts);
    const auto over_f2 = betti_table(I, FieldSpec::prime_field(2), betti_opts);
    const auto over_f3 = betti_table(I, FieldSpec::prime_field(3), betti_opts);
    rec.check("betti-field-stable",
              over_q.entries() == over_f2.entries() && over_q.entries() == over_f3.entries(),
              [&] { return label + " " + format_ideal(I); });
}

SuiteResult suite_char_exhaustive(const SuiteOptions& o) {
    SuiteResult r{"char-exhaustive", {}, {}};
    Recorder rec(r);
    BettiOptions bo;
    bo.cell_budget = o.cell_budget;
    struct Config {
        int n, dmax, gmax;
    };
    std::vector<Config> configs;
    if (o.nmax > 0 || o.dmax > 0)
        configs.push_back({o.nmax > 0 ? o.nmax : 2, o.dmax > 0 ? o.dmax : 4, 6});
    else
        configs = {{2, 4, 6}, {3, 2, 6}};
    for (const Config& cfg : configs) {
        const RingContext ring(cfg.n);
        const std::string label =
            "n=" + std::to_string(cfg.n) + " dmax=" + std::to_string(cfg.dmax);
        enumerate_ideals(ring, cfg.dmax, cfg.gmax, [&](const MonomialIdeal& I) {
            ++r.counters["ideals"];
            inspect_ideal(rec, I, label, true, bo);
        });
    }
    return r;
}

SuiteResult suite_char_random(const SuiteOptions& o) {
    SuiteResult r{"char-random", {}, {}};
    Recorder rec(r);
    BettiOptions bo;
    bo.cell_budget = o.cell_budget;
    const int count = o.count > 0 ? o.count : 10000;
    const int nmax = o.nmax > 0 ? o.nmax : 4;
    const int dmax = o.dmax > 0 ? o.dmax : 4;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % nmax;
        const int d = 1 + (i / nmax) % dmax;
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        const MonomialIdeal I = random_mixed(RingContext(n), d, 6, seed);
        ++r.counters["ideals"];
        inspect_ideal(rec, I, "seed=" + std::to_string(seed), false, bo);
    }
    return r;
}

SuiteResult suite_regularity_bound(const SuiteOptions& o) {
    SuiteResult r{"regularity-bound", {}, {}};
    Recorder rec(r);
    BettiOptions bo;
    bo.cell_budget = o.cell_budget;
    const FieldSpec field = FieldSpec::rationals();
    const int count = o.count > 0 ? o.count : 1000;
    const int nmax = o.nmax > 0 ? o.nmax : 4;
    const int dmax = o.dmax > 0 ? o.dmax : 3;
    bool equality_seen = false;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % nmax;
        const int d = 1 + (i / nmax) % dmax;
        const int components = 1 + (i / (nmax * dmax)) % 3;
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        const std::string label = "seed=" + std::to_string(seed);
        const RingContext ring(n);
        const MonomialIdeal I = random_borel_type(ring, d, components, seed);
        ++r.counters["ideals"];
        rec.check("borel-by-construction", is_borel_type(I),
                  [&] { return label + " " + format_ideal(I); });
        const IdealStats st = stats(I);
        const Int reg = regularity(I, field, RegularityMode::oracle_only, bo).value;
        rec.check("reg-le-q", reg <= st.q, [&] {
            return label + " " + format_ideal(I) + ": reg=" + reg.str() + " q=" + st.q.str();
        });
        if (reg == st.q)
            equality_seen = true;
        if (i % 10 == 0 && n > 1) {
            Rng perm_rng(seed ^ 0x9e3779b97f4a7c15ULL);
            const MonomialIdeal P = permute_variables(I, random_permutation(n, perm_rng));
            const MonomialIdeal N = prefix_normalize(P);
            const Int reg_p = regularity(P, field, RegularityMode::oracle_only, bo).value;
            const Int reg_n = regularity(N, field, RegularityMode::oracle_only, bo).value;
            rec.check("normalize-preserves-reg", reg_p == reg && reg_n == reg, [&] {
                return label + " " + format_ideal(P) + " -> " + format_ideal(N) + ": reg " +
                       reg.str() + "/" + reg_p.str() + "/" + reg_n.str();
            });
            rec.check("normalize-preserves-deg", stats(N).deg == st.deg && stats(P).deg == st.deg,
                      [&] { return label + " " + format_ideal(N); });
            rec.check("normalize-prefix-ass", ass_all_prefix(N),
                      [&] { return label + " " + format_ideal(N); });
            rec.check("normalize-bound", reg_n <= stats(N).q, [&] {
                return label + " " + format_ideal(N) + ": reg=" + reg_n.str() + " q=" +
                       stats(N).q.str();
            });
            ++r.counters["normalized"];
            if (stats(P).q != stats(N).q)
                ++r.counters["normalized-q-changed"];
        }
    }
    {
        const RingContext ring(2);
        const MonomialIdeal witness =
            minimalize(ring, {Monomial::variable(ring, 1, 2), Monomial::variable(ring, 2, 2)});
        const Int reg = regularity(witness, field, RegularityMode::oracle_only, bo).value;
        const IdealStats st = stats(witness);
        rec.check("equality-witness", reg == 3 && st.q == 3, [&] {
            return format_ideal(witness) + ": reg=" + reg.str() + " q=" + st.q.str();
        });
        if (reg == st.q)
            equality_seen = true;
    }
    rec.check("equality-attained", equality_seen,
              [] { return std::string("no instance reached reg = q"); });
    return r;
}

SuiteResult suite_stable_regularity(const SuiteOptions& o) {
    SuiteResult r{"stable-regularity", {}, {}};
    Recorder rec(r);
    BettiOptions bo;
    bo.cell_budget = o.cell_budget;
    const FieldSpec field = FieldSpec::rationals();
    const int count = o.count > 0 ? o.count : 500;
    const int nmax = o.nmax > 0 ? o.nmax : 3;
    const int dmax = o.dmax > 0 ? o.dmax : 4;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % nmax;
        const int d = 1 + (i / nmax) % dmax;
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        const std::string label = "seed=" + std::to_string(seed);
        const RingContext ring(n);
        Rng rng(seed);
        const MonomialIdeal source = random_antichain(ring, d, 5, rng);
        const MonomialIdeal S = stable_closure(ring, source.generators());
        ++r.counters["ideals"];
        rec.check("closure-stable", is_stable(S), [&] { return label + " " + format_ideal(S); });
        try {
            const RegularityResult res =
                regularity(S, field, RegularityMode::cross_check, bo);
            rec.check("reg-equals-deg", res.value == stats(S).deg, [&] {
                return label + " " + format_ideal(S) + ": reg=" + res.value.str() + " deg=" +
                       stats(S).deg.str();
            });
        } catch (const SelfCheckFailed& e) {
            rec.check("reg-equals-deg", false,
                      [&] { return label + " " + format_ideal(S) + ": " + e.what(); });
        }
    }
    return r;
}

SuiteResult suite_truncation_intersection(const SuiteOptions& o) {
    SuiteResult r{"truncation-intersection", {}, {}};
    Recorder rec(r);
    const int count = o.count > 0 ? o.count : 500;
    const int nmax = o.nmax > 0 ? o.nmax : 4;
    const int dmax = o.dmax > 0 ? o.dmax : 3;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % nmax;
        const int d = 1 + (i / nmax) % dmax;
        const std::uint64_t seed = o.seed + 2 * static_cast<std::uint64_t>(i);
        const std::string label = "seed=" + std::to_string(seed);
        const RingContext ring(n);
        const MonomialIdeal I = random_borel_type(ring, d, 1 + i % 2, seed);
        const MonomialIdeal J = random_borel_type(ring, d, 1 + (i + 1) % 2, seed + 1);
        ++r.counters["pairs"];
        rec.check("precondition-stable-at-q",
                  is_stable(truncate(I, stats(I).q)) && is_stable(truncate(J, stats(J).q)),
                  [&] { return label + " " + format_ideal(I) + ", " + format_ideal(J); });
        const MonomialIdeal K = intersect(I, J);
        rec.check("intersection-truncation-stable", is_stable(truncate(K, stats(K).q)), [&] {
            return label + " " + format_ideal(K) + " at q=" + stats(K).q.str();
        });
    }
    return r;
}

SuiteResult suite_pure_power_truncation(const SuiteOptions& o) {
    SuiteResult r{"pure-power-truncation", {}, {}};
    Recorder rec(r);
    const int nmax = o.nmax > 0 ? o.nmax : 4;
    const int emax = o.dmax > 0 ? o.dmax : 3;
    const RingContext ring(nmax);
    for (unsigned mask = 1; mask < (1u << nmax); ++mask) {
        std::vector<int> indices;
        for (int v = 1; v <= nmax; ++v)
            if (mask >> (v - 1) & 1)
                indices.push_back(v);
        std::vector<int> exps(indices.size(), 1);
        for (;;) {
            std::vector<Monomial> gens;
            for (std::size_t k = 0; k < indices.size(); ++k)
                gens.push_back(Monomial::variable(ring, indices[k], exps[k]));
            const MonomialIdeal I = minimalize(ring, std::move(gens));
            ++r.counters["ideals"];
            bool prefix = true;
            for (std::size_t k = 0; k < indices.size(); ++k)
                if (indices[k] != static_cast<int>(k) + 1) {
                    prefix = false;
                    break;
                }
            const bool trunc_stable = is_stable(truncate(I, stats(I).q));
            rec.check("prefix-iff-stable-truncation", trunc_stable == prefix, [&] {
                return format_ideal(I) + ": truncation stable=" + (trunc_stable ? "yes" : "no") +
                       " prefix=" + (prefix ? "yes" : "no");
            });
            std::size_t pos = 0;
            while (pos < exps.size() && exps[pos] == emax)
                exps[pos++] = 1;
            if (pos == exps.size())
                break;
            ++exps[pos];
        }
    }
    return r;
}

SuiteResult suite_koszul_selfcheck(const SuiteOptions& o) {
    SuiteResult r{"koszul-selfcheck", {}, {}};
    Recorder rec(r);
    BettiOptions bo;
    bo.cell_budget = o.cell_budget;
    const int nmax = o.nmax > 0 ? o.nmax : 5;
    for (int n = 2; n <= nmax; ++n) {
        const RingContext ring(n);
        std::vector<Monomial> vars;
        for (int v = 1; v <= n; ++v)
            vars.push_back(Monomial::variable(ring, v));
        const MonomialIdeal I = minimalize(ring, std::move(vars));
        ++r.counters["ideals"];
        const std::string label = "n=" + std::to_string(n);
        const BettiTable table = betti_table(I, FieldSpec::rationals(), bo);
        std::map<std::pair<int, Int>, int> expected;
        Int binom = n;
        for (int i = 0; i < n; ++i) {
            expected[{i, Int(i + 1)}] = binom.convert_to<int>();
            binom = binom * (n - i - 1) / (i + 2);
        }
        rec.check("koszul-graded-shape", table.graded() == expected,
                  [&] { return label; });
        rec.check("koszul-regularity", table.regularity() == 1, [&] { return label; });
        const BettiTable f2 = betti_table(I, FieldSpec::prime_field(2), bo);
        const BettiTable f3 = betti_table(I, FieldSpec::prime_field(3), bo);
        rec.check("koszul-field-stable",
                  table.entries() == f2.entries() && table.entries() == f3.entries(),
                  [&] { return label; });
    }
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"char-exhaustive",          "char-random",       "regularity-bound",
            "stable-regularity",        "truncation-intersection",
            "pure-power-truncation",    "koszul-selfcheck"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "char-exhaustive")
        return suite_char_exhaustive(opts);
    if (name == "char-random")
        return suite_char_random(opts);
    if (name == "regularity-bound")
        return suite_regularity_bound(opts);
    if (name == "stable-regularity")
        return suite_stable_regularity(opts);
    if (name == "truncation-intersection")
        return suite_truncation_intersection(opts);
    if (name == "pure-power-truncation")
        return suite_pure_power_truncation(opts);
    if (name == "koszul-selfcheck")
        return suite_koszul_selfcheck(opts);
    throw DomainError("verify: unknown suite `" + name + "`; known suites: " + [] {
        std::string all;
        for (const auto& s : suite_names())
            all += all.empty() ? s : ", " + s;
        return all;
    }());
}

}  // namespace borelreg
