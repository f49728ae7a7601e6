#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "commands.hpp"

using namespace expc;
using namespace expc::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(EXPC_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string gen_text(GenArgs g)
{
    std::ostringstream out;
    EXPECT_EQ(cmd_gen(g, out), ok);
    return out.str();
}

SequencePrefix parse(const std::string& text)
{
    std::istringstream in(text);
    return read_sequence(in);
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST(Gen, Inversive)
{
    GenArgs g;
    g.kind = "inversive";
    g.p = 7;
    g.a = 1;
    g.b = 0;
    g.len = 8;
    EXPECT_EQ(gen_text(g), "p 7\n0 1 4 5 2 3 6 0\n");
}

TEST(Gen, BinomialAllOnes)
{
    GenArgs g;
    g.kind = "binomial";
    g.p = 5;
    g.k = 0;
    g.len = 4;
    EXPECT_EQ(gen_text(g), "p 5\n1 1 1 1\n");
}

TEST(Gen, RandomIsByteIdentical)
{
    GenArgs g;
    g.kind = "random";
    g.p = 2;
    g.len = 16;
    g.seed = 42;
    EXPECT_EQ(gen_text(g), gen_text(g));
}

TEST(Gen, RejectsBadArguments)
{
    GenArgs g;
    g.kind = "nonsense";
    g.p = 5;
    g.len = 4;
    std::ostringstream out;
    EXPECT_THROW(cmd_gen(g, out), error);
    g.kind = "binomial";
    g.len = 0;
    EXPECT_THROW(cmd_gen(g, out), invalid_param);
}

TEST(Gen, RoundTripForEveryKind)
{
    std::vector<GenArgs> all;
    GenArgs g;
    g.len = 50;
    g.p = 11;
    g.kind = "inversive";
    g.a = 3;
    g.b = 4;
    all.push_back(g);
    g.kind = "binomial";
    g.k = 3;
    all.push_back(g);
    g.kind = "sw";
    g.s0 = 2;
    all.push_back(g);
    g.kind = "lfsr";
    g.taps = "1,0,-1";
    g.init = "1,2,3";
    all.push_back(g);
    g.kind = "random";
    g.seed = 77;
    all.push_back(g);
    for (const auto& a : all) EXPECT_EQ(parse(gen_text(a)), generate(to_spec(a))) << a.kind;
}

TEST(SequenceFile, ParseErrors)
{
    EXPECT_THROW(parse("q 5\n1 2\n"), parse_error);
    EXPECT_THROW(parse("p 6\n1 2\n"), parse_error);
    EXPECT_THROW(parse("p 5\n1 5\n"), parse_error);
    EXPECT_THROW(parse("p 5\n1 -1\n"), parse_error);
    EXPECT_THROW(parse("p 5\n1 x\n"), parse_error);
    EXPECT_THROW(parse("p 5\n"), parse_error);
    EXPECT_EQ(parse("p 5\n1 2\n3\n"), SequencePrefix(PrimeField(5), {1, 2, 3}));
}

TEST(PolyFlag, Parse)
{
    PrimeField F7(7);
    EXPECT_EQ(parse_poly("0,1,-1", F7), UniPoly(F7, {0, 1, -1}));
    EXPECT_EQ(parse_poly("9", F7), UniPoly(F7, {2}));
    EXPECT_TRUE(parse_poly("0", F7).is_zero());
    EXPECT_THROW(parse_poly("1,a", F7), parse_error);
}

TEST(Analyze, GoldenCsv)
{
    AnalyzeArgs a;
    a.istar = "exact";
    a.cross_check = true;
    std::ostringstream out;
    EXPECT_EQ(cmd_analyze(a, load_sequence(fixture("x5_p5.txt")), out), ok);
    EXPECT_EQ(out.str(), slurp(fixture("x5_p5_profile.csv")));
}

TEST(Analyze, CsvHeader)
{
    AnalyzeArgs a;
    std::ostringstream out;
    cmd_analyze(a, SequencePrefix(PrimeField(2), {1, 0, 1}), out);
    EXPECT_EQ(lines(out.str()).front(), "N,E,EstarLo,EstarIrred,EstarHi,EstarExact,L,ThmChecks");
    EXPECT_EQ(lines(out.str()).size(), 4u);
}

TEST(Analyze, BoundsOnly)
{
    AnalyzeArgs a;
    a.istar = "bounds";
    a.nmax = 6;
    std::ostringstream out;
    cmd_analyze(a, load_sequence(fixture("x5_p5.txt")), out);
    EXPECT_EQ(lines(out.str()).back(), "6,2,2,5,5,,6,E_dim_bound=pass;L_vs_E=pass");
}

TEST(Analyze, AllZero)
{
    AnalyzeArgs a;
    std::ostringstream out;
    EXPECT_EQ(cmd_analyze(a, load_sequence(fixture("zeros_p3.txt")), out), ok);
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 9u);
    for (std::size_t i = 1; i < ls.size(); ++i)
        EXPECT_EQ(ls[i], std::to_string(i) + ",0,,,,,0,E_dim_bound=pass;L_vs_E=pass");
}

TEST(Analyze, Json)
{
    AnalyzeArgs a;
    a.out = "json";
    a.istar = "exact";
    std::ostringstream out;
    cmd_analyze(a, load_sequence(fixture("x5_p5.txt")), out);
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j["p"], 5);
    EXPECT_EQ(j["engine"], "fglm");
    ASSERT_EQ(j["rows"].size(), 6u);
    const auto& r = j["rows"][5];
    EXPECT_EQ(r["E"], 2);
    EXPECT_EQ(r["EstarLo"], 2);
    EXPECT_EQ(r["EstarHi"], 5);
    EXPECT_EQ(r["EstarExact"], 5);
    EXPECT_EQ(r["ThmChecks"]["L_vs_E"], true);
}

TEST(Analyze, UsageErrors)
{
    const auto s = load_sequence(fixture("x5_p5.txt"));
    std::ostringstream out;
    AnalyzeArgs a;
    a.nmax = 7;
    EXPECT_THROW(cmd_analyze(a, s, out), prefix_too_short);
    a.nmax = 6;
    a.engine = "f4";
    EXPECT_THROW(cmd_analyze(a, s, out), parse_error);
    a.engine = "fglm";
    a.out = "xml";
    EXPECT_THROW(cmd_analyze(a, s, out), parse_error);
    EXPECT_THROW(load_sequence(fixture("missing.txt")), parse_error);
}

TEST(Analyze, CrossCheckOnRandomFiles)
{
    std::mt19937_64 rng(61);
    const std::uint32_t primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 100; ++i) {
        GenArgs g;
        g.kind = "random";
        g.p = primes[i % 4];
        g.len = 1 + rng() % 24;
        g.seed = rng();
        AnalyzeArgs a;
        a.cross_check = true;
        for (const char* engine : {"fglm", "buchberger"}) {
            a.engine = engine;
            std::ostringstream out;
            EXPECT_EQ(cmd_analyze(a, parse(gen_text(g)), out), ok);
        }
    }
}

TEST(Groebner, Render)
{
    const auto s = load_sequence(fixture("x5_p5.txt"));
    for (const char* e : {"fglm", "buchberger"}) {
        std::ostringstream out;
        EXPECT_EQ(cmd_groebner(s, 6, e, out), ok);
        EXPECT_EQ(out.str(), "x*y (|LE|=2), y^2 (|LE|=2), x^5 + 4*y (|LE|=5)\n");
    }
    std::ostringstream one, zero;
    cmd_groebner(SequencePrefix(PrimeField(7), {1}), 1, "fglm", one);
    EXPECT_EQ(one.str(), "x (|LE|=1), y + 6 (|LE|=1)\n");
    cmd_groebner(SequencePrefix(PrimeField(3), {0, 0}), 2, "buchberger", zero);
    EXPECT_EQ(zero.str(), "y (|LE|=1), x^2 (|LE|=2)\n");
}

TEST(VerifyOde, SwPreset)
{
    GenArgs g;
    g.kind = "sw";
    g.p = 7;
    g.s0 = 0;
    g.len = 7;
    VerifyOdeArgs v;
    v.preset = "sw";
    v.m = 7;
    std::ostringstream out;
    EXPECT_EQ(cmd_verify_ode(v, parse(gen_text(g)), out), ok);
    const std::string text = out.str();
    EXPECT_NE(text.find("residual mod x^7: ZERO"), std::string::npos);
    EXPECT_NE(text.find("L-bound F=3, k=1"), std::string::npos);
    EXPECT_EQ(text.find(",fail"), std::string::npos);
    EXPECT_NE(text.find("7,"), std::string::npos);
}

TEST(VerifyOde, ExplicitCoefficientsMatchPreset)
{
    const auto s = gen_sw(7, 0, 7);
    VerifyOdeArgs v;
    v.f = {"0,1", "-1,2,-1", "0,0,1,-1"};
    std::ostringstream out;
    EXPECT_EQ(cmd_verify_ode(v, s, out), ok);
    EXPECT_NE(out.str().find("ZERO"), std::string::npos);
}

TEST(VerifyOde, WrongF0)
{
    const auto s = gen_sw(7, 0, 7);
    VerifyOdeArgs v;
    v.f = {"0,2", "-1,2,-1", "0,0,1,-1"};
    v.m = 7;
    std::ostringstream out;
    EXPECT_EQ(cmd_verify_ode(v, s, out), violation);
    EXPECT_NE(out.str().find("NONZERO, first nonzero coefficient at x^1"), std::string::npos);
}

TEST(VerifyOde, InversivePreset)
{
    for (std::size_t len : {20u, 150u}) {
        const auto s = gen_inversive(101, 2, 5, len);
        VerifyOdeArgs v;
        v.preset = "inversive";
        v.a = 2;
        v.b = 5;
        v.m = std::min<std::size_t>(len, 101);
        std::ostringstream out;
        EXPECT_EQ(cmd_verify_ode(v, s, out), ok) << out.str();
        EXPECT_NE(out.str().find("residual mod x^" + std::to_string(*v.m) + ": ZERO"), std::string::npos);
        // f2 = a x (1 - x)^p has f2' = a (1 - x)^p, which vanishes at the shared root 1
        EXPECT_NE(out.str().find("E-bound hypotheses: not satisfied"), std::string::npos);
    }
}

TEST(VerifyOde, BadPresetAndPolynomials)
{
    const auto s = gen_sw(7, 0, 7);
    VerifyOdeArgs v;
    v.preset = "nope";
    std::ostringstream out;
    EXPECT_THROW(cmd_verify_ode(v, s, out), parse_error);
    v.preset.clear();
    v.f = {"0", "0"};
    EXPECT_THROW(cmd_verify_ode(v, s, out), invalid_param);
}

TEST(Experiment, SingleSampleIsDeterministic)
{
    std::ostringstream a, b;
    EXPECT_EQ(cmd_experiment(2, 40, 1, 9, 0.8, a), ok);
    EXPECT_EQ(cmd_experiment(2, 40, 1, 9, 0.8, b), ok);
    EXPECT_EQ(a.str(), b.str());
    const auto j = nlohmann::json::parse(a.str());
    EXPECT_EQ(j["seed"], 9);
    EXPECT_EQ(j["per_sample"].size(), 1u);
    EXPECT_EQ(j["upper_bound_violations"], 0);
}

TEST(Experiment, RejectsZeroSamples)
{
    std::ostringstream out;
    EXPECT_THROW(cmd_experiment(2, 40, 0, 9, 0.8, out), invalid_param);
}
