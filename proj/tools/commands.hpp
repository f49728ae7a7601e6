#ifndef EXPC_TOOLS_COMMANDS_HPP
#define EXPC_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "expc/expc.hpp"

// Subcommand implementations shared by the expc binary and the tests. Each
// returns the process exit status: 0 success, 1 invariant or bound violation,
// 2 usage or parse error (usage errors are thrown as expc::parse_error or
// expc::invalid_param and mapped by the caller).
namespace expc::cli {

enum Exit : int { ok = 0, violation = 1, usage = 2 };

inline std::vector<std::int64_t> parse_int_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw parse_error("");
        } catch (const std::exception&) {
            throw parse_error("bad integer list '" + text + "'");
        }
    }
    return out;
}

inline SequencePrefix load_sequence(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_sequence(in);
}

inline Engine parse_engine(const std::string& s)
{
    if (s == "fglm") return Engine::fglm;
    if (s == "buchberger") return Engine::buchberger;
    throw parse_error("unknown engine " + s);
}

struct GenArgs {
    std::string kind;
    std::uint32_t p = 2;
    std::size_t len = 0;
    std::int64_t a = 1, b = 0, s0 = 0;
    std::uint64_t k = 0, seed = 0;
    std::string taps, init;
};

inline GeneratorSpec to_spec(const GenArgs& g)
{
    GeneratorSpec spec;
    spec.p = g.p;
    spec.len = g.len;
    if (g.kind == "inversive")
        spec.kind = InversiveKind{g.a, g.b};
    else if (g.kind == "binomial")
        spec.kind = BinomialKind{g.k};
    else if (g.kind == "sw")
        spec.kind = SwKind{g.s0};
    else if (g.kind == "lfsr")
        spec.kind = LfsrKind{parse_int_list(g.taps), parse_int_list(g.init)};
    else if (g.kind == "random")
        spec.kind = RandomKind{g.seed};
    else
        throw parse_error("unknown generator kind " + g.kind);
    return spec;
}

inline int cmd_gen(const GenArgs& g, std::ostream& out)
{
    if (g.len == 0) throw invalid_param("--len must be positive");
    write_sequence(out, generate(to_spec(g)));
    return ok;
}

struct AnalyzeArgs {
    std::string input;
    std::optional<std::size_t> nmax;
    std::string engine = "fglm";
    bool cross_check = false;
    std::string istar = "none";
    std::string out = "csv";
    std::uint64_t budget = 10'000'000;
};

// Checks valid for every sequence: the dimension-count bound on E_N and the
// cross-measure bound L_N >= min{E_N - 1, (N+3)/2}.
inline std::vector<NamedCheck> universal_checks()
{
    return {
        {"E_dim_bound", [](const ProfileRow& r) -> std::optional<bool> { return r.E <= dimension_upper_bound(r.N); }},
        {"L_vs_E",
         [](const ProfileRow& r) -> std::optional<bool> {
             return r.L + 1 >= r.E || 2 * r.L >= r.N + 3;
         }},
    };
}

inline int cmd_analyze(const AnalyzeArgs& a, const SequencePrefix& s, std::ostream& out)
{
    ProfileOptions opts;
    opts.engine = parse_engine(a.engine);
    opts.cross_check = a.cross_check;
    if (a.istar == "none")
        opts.istar = IStarMode::none;
    else if (a.istar == "bounds")
        opts.istar = IStarMode::bounds;
    else if (a.istar == "exact")
        opts.istar = IStarMode::exact;
    else
        throw parse_error("unknown --istar mode " + a.istar);
    opts.budget = a.budget;
    opts.checks = universal_checks();
    const std::size_t nmax = a.nmax.value_or(s.size());
    if (nmax == 0) throw invalid_param("--nmax must be positive");
    const auto rows = complexity_profile(s, nmax, opts);
    if (a.out == "csv") {
        write_profile_csv(out, rows);
    } else if (a.out == "json") {
        nlohmann::ordered_json j;
        j["p"] = s.p();
        j["nmax"] = nmax;
        j["engine"] = a.engine;
        j["cross_check"] = a.cross_check;
        j["istar"] = a.istar;
        j["budget"] = a.budget;
        j["rows"] = profile_to_json(rows);
        out << j.dump(2) << '\n';
    } else {
        throw parse_error("unknown --out format " + a.out);
    }
    for (const auto& r : rows)
        for (const auto& [name, pass] : r.bound_checks)
            if (!pass) return violation;
    return ok;
}

inline std::string render_basis(const GroebnerBasis& gb)
{
    std::string line;
    for (const auto& e : gb.elements) {
        if (!line.empty()) line += ", ";
        line += to_string(e) + " (|LE|=" + std::to_string(e.total_degree()) + ")";
    }
    return line;
}

inline int cmd_groebner(const SequencePrefix& s, std::optional<std::size_t> n, const std::string& engine,
                        std::ostream& out)
{
    const std::size_t N = n.value_or(s.size());
    if (N == 0) throw invalid_param("--n must be positive");
    out << render_basis(defining_ideal_basis(s, N, parse_engine(engine))) << '\n';
    return ok;
}

struct VerifyOdeArgs {
    std::vector<std::string> f; // f_0, f_1, ... as flag strings
    std::string preset;         // inversive | sw | binomial, overrides f
    std::int64_t a = 1, b = 0, s0 = 0;
    std::uint64_t k = 0;
    std::optional<std::size_t> m;
    std::string engine = "fglm";
};

inline DiffOperator build_operator(const VerifyOdeArgs& v, const SequencePrefix& s)
{
    if (v.preset == "inversive") return inversive_ode_coeffs(s.p(), v.a, v.b);
    if (v.preset == "sw") return sw_ode_coeffs(s.p(), v.s0);
    if (v.preset == "binomial") return binomial_ode_coeffs(s.p(), v.k);
    if (!v.preset.empty()) throw parse_error("unknown preset " + v.preset);
    std::vector<UniPoly> f;
    for (const auto& t : v.f) f.push_back(parse_poly(t, s.field()));
    while (f.size() > 2 && f.back().is_zero()) f.pop_back();
    return DiffOperator(std::move(f));
}

inline int cmd_verify_ode(const VerifyOdeArgs& v, const SequencePrefix& s, std::ostream& out)
{
    const DiffOperator T = build_operator(v, s);
    std::size_t M = v.m.value_or(0);
    if (!v.m) {
        // largest M whose residual the prefix determines
        while (T.required_length(M + 1) <= s.size()) ++M;
    }
    if (M == 0) throw invalid_param("prefix too short for this operator");
    const UniPoly res = apply_diff_operator(T, s, M);
    const std::size_t k = T.order();
    out << "operator order k=" << k << '\n';
    for (std::size_t i = 0; i < T.coeffs().size(); ++i) out << "f" << i << " = " << to_string(T.f(i)) << '\n';
    if (res.is_zero()) {
        out << "residual mod x^" << M << ": ZERO\n";
    } else {
        out << "residual mod x^" << M << ": NONZERO, first nonzero coefficient at x^" << *res.valuation() << '\n';
        out << "residual = " << to_string(res) << '\n';
    }

    std::optional<Thm41Hypotheses> h41;
    if (k == 1 && !T.f(2).is_zero()) {
        h41 = check_thm41_hypotheses(T.f(0), T.f(1), T.f(2));
        out << "E-bound hypotheses: " << (h41->ok ? "ok" : "not satisfied") << ", F=" << h41->F << '\n';
    } else {
        out << "E-bound hypotheses: not applicable (needs a first-order operator)\n";
    }
    const std::int64_t F43 = thm43_F(T);
    out << "L-bound F=" << F43 << ", k=" << k << " (coprime coefficients without rational zero assumed, not checked)\n";

    // The E bound only speaks about deg f0 + 1 < N <= M.
    const std::size_t lo41 = T.f(0).degree() ? *T.f(0).degree() + 2 : 1;
    bool failed = !res.is_zero();
    out << "N,E,E_min,E_check,L,L_min,L_check\n";
    for (std::size_t N = 1; N <= M; ++N) {
        const std::uint32_t E = expansion_complexity_gb(s, N, parse_engine(v.engine)).value;
        const std::size_t L = linear_complexity(s, N);
        std::string c41 = "n/a", m41;
        if (res.is_zero() && h41 && h41->ok && h41->F >= 0 && N >= lo41) {
            const std::uint32_t need = thm41_min_E(N, h41->F, s.p());
            m41 = std::to_string(need);
            c41 = E >= need ? "pass" : "fail";
            failed |= E < need;
        }
        std::string c43 = "n/a", m43;
        if (res.is_zero()) {
            const std::size_t need = thm43_L_bound(N, F43, k);
            m43 = std::to_string(need);
            c43 = L >= need ? "pass" : "fail";
            failed |= L < need;
        }
        out << N << ',' << E << ',' << m41 << ',' << c41 << ',' << L << ',' << m43 << ',' << c43 << '\n';
    }
    return failed ? violation : ok;
}

inline int cmd_experiment(std::uint32_t p, std::size_t N, std::size_t samples, std::uint64_t seed, double threshold,
                          std::ostream& out)
{
    const ExperimentReport rep = run_random_experiment(p, N, samples, seed, threshold);
    out << to_json(rep).dump(2) << '\n';
    return rep.upper_bound_violations == 0 ? ok : violation;
}

} // namespace expc::cli

#endif
