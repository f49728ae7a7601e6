// expc: expansion, i-expansion and linear complexity of sequences over F_p.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

// Writes to --output when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw expc::parse_error("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

} // namespace

int main(int argc, char** argv)
{
    using namespace expc;
    CLI::App app{"Expansion complexity toolkit for sequences over prime fields"};
    app.require_subcommand(1);

    std::string output;
    std::uint64_t budget = 10'000'000;
    std::uint64_t seed = 0;

    cli::GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a sequence file");
    gen_cmd->add_option("kind", gen.kind, "inversive | binomial | sw | lfsr | random")->required();
    gen_cmd->add_option("--p", gen.p, "Prime modulus")->required();
    gen_cmd->add_option("--len", gen.len, "Number of terms")->required();
    gen_cmd->add_option("--a", gen.a, "Inversive multiplier");
    gen_cmd->add_option("--b", gen.b, "Inversive shift");
    gen_cmd->add_option("--k", gen.k, "Binomial parameter");
    gen_cmd->add_option("--s0", gen.s0, "Initial value of s_n = n s_{n-1} + 1");
    gen_cmd->add_option("--taps", gen.taps, "LFSR taps c_0,...,c_{L-1}");
    gen_cmd->add_option("--init", gen.init, "LFSR initial state");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    cli::AnalyzeArgs an;
    std::optional<std::size_t> nmax;
    auto* an_cmd = app.add_subcommand("analyze", "Complexity profile for N = 1..nmax");
    an_cmd->add_option("--input", an.input, "Sequence file")->required();
    an_cmd->add_option("--nmax", nmax, "Largest N (default: sequence length)");
    an_cmd->add_option("--engine", an.engine, "fglm | buchberger");
    an_cmd->add_flag("--cross-check", an.cross_check, "Compare against the other engine and the kernel oracle");
    an_cmd->add_option("--istar", an.istar, "none | bounds | exact");
    an_cmd->add_option("--out", an.out, "csv | json");
    an_cmd->add_option("--budget", budget, "Work budget for exhaustive i-expansion searches");
    an_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    std::string gb_input, gb_engine = "fglm";
    std::optional<std::size_t> gb_n;
    auto* gb_cmd = app.add_subcommand("groebner", "Reduced grlex basis of <y - G_N(x), x^N>");
    gb_cmd->add_option("--input", gb_input, "Sequence file")->required();
    gb_cmd->add_option("--n", gb_n, "Precision N (default: sequence length)");
    gb_cmd->add_option("--engine", gb_engine, "fglm | buchberger");

    cli::VerifyOdeArgs ode;
    std::string ode_input;
    std::string f[6];
    auto* ode_cmd = app.add_subcommand("verify-ode", "Residual of a Hasse-derivative operator and theorem bounds");
    ode_cmd->add_option("--input", ode_input, "Sequence file")->required();
    for (int i = 0; i < 6; ++i)
        ode_cmd->add_option("--f" + std::to_string(i), f[i], "Coefficient f" + std::to_string(i) + " (ascending, comma-separated)");
    ode_cmd->add_option("--preset", ode.preset, "inversive | sw | binomial");
    ode_cmd->add_option("--a", ode.a);
    ode_cmd->add_option("--b", ode.b);
    ode_cmd->add_option("--s0", ode.s0);
    ode_cmd->add_option("--k", ode.k);
    ode_cmd->add_option("--m", ode.m, "Check modulo x^M (default: largest M the prefix determines)");
    ode_cmd->add_option("--engine", ode.engine, "fglm | buchberger");

    std::uint32_t ex_p = 2;
    std::size_t ex_n = 100, ex_samples = 200;
    double threshold = 0.8;
    auto* ex_cmd = app.add_subcommand("experiment", "E_N of random sequences against sqrt(N/2)");
    ex_cmd->add_option("--p", ex_p, "Prime modulus");
    ex_cmd->add_option("--n", ex_n, "Precision N");
    ex_cmd->add_option("--samples", ex_samples, "Number of random sequences");
    ex_cmd->add_option("--seed", seed, "Master seed");
    ex_cmd->add_option("--threshold", threshold, "Low-tail ratio to sqrt(N/2)");
    ex_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::usage;
    }

    try {
        if (gen_cmd->parsed()) {
            Sink sink(output);
            return cli::cmd_gen(gen, sink.stream());
        }
        if (an_cmd->parsed()) {
            an.nmax = nmax;
            an.budget = budget;
            const SequencePrefix s = cli::load_sequence(an.input);
            Sink sink(output);
            return cli::cmd_analyze(an, s, sink.stream());
        }
        if (gb_cmd->parsed()) return cli::cmd_groebner(cli::load_sequence(gb_input), gb_n, gb_engine, std::cout);
        if (ode_cmd->parsed()) {
            int last = -1;
            for (int i = 0; i < 6; ++i)
                if (!f[i].empty()) last = i;
            if (ode.preset.empty() && last < 1) throw parse_error("give --preset or at least --f1");
            for (int i = 0; i <= last; ++i) ode.f.push_back(f[i]);
            return cli::cmd_verify_ode(ode, cli::load_sequence(ode_input), std::cout);
        }
        if (ex_cmd->parsed()) {
            Sink sink(output);
            return cli::cmd_experiment(ex_p, ex_n, ex_samples, seed, threshold, sink.stream());
        }
    } catch (const invariant_violation& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return cli::violation;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::usage;
    }
    return cli::usage;
}
