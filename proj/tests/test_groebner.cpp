#include <gtest/gtest.h>

#include <random>

#include "expc/fglm.hpp"
#include "expc/generators.hpp"

using namespace expc;

namespace {

BiPoly mono(const PrimeField& F, std::uint32_t a, std::uint32_t b, std::int64_t c = 1)
{
    return BiPoly::term(F, {a, b}, F.from_int(c));
}

SequencePrefix x5_prefix() { return SequencePrefix(PrimeField(5), {0, 0, 0, 0, 0, 1}); }

std::vector<BiPoly> x5_basis()
{
    PrimeField F5(5);
    return {mono(F5, 1, 1), mono(F5, 0, 2), mono(F5, 5, 0) - BiPoly::y(F5)};
}

SequencePrefix binary_from_bits(unsigned bits, std::size_t len)
{
    PrimeField F2(2);
    std::vector<Fp> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = Fp{bits >> i & 1u};
    return SequencePrefix(F2, v);
}

void expect_valid(const SequencePrefix& s, std::size_t N, const GroebnerBasis& gb)
{
    const auto gens = defining_ideal_generators(s, N);
    const BasisCheck c = check_reduced_basis(gb.elements, gens);
    EXPECT_TRUE(c.monic);
    EXPECT_TRUE(c.reduced);
    EXPECT_TRUE(c.s_pairs_vanish);
    EXPECT_TRUE(c.generators_vanish);
}

} // namespace

TEST(NormalForm, Examples)
{
    PrimeField F5(5);
    const auto basis = x5_basis();
    EXPECT_TRUE(normal_form(mono(F5, 6, 0), basis).is_zero());
    EXPECT_EQ(normal_form(BiPoly::y(F5), basis), BiPoly::y(F5));
    EXPECT_TRUE(normal_form(BiPoly(F5), basis).is_zero());
}

TEST(NormalForm, RemainderHasNoDivisibleTerms)
{
    std::mt19937_64 rng(41);
    PrimeField F5(5);
    const auto basis = x5_basis();
    std::uniform_int_distribution<std::uint32_t> c(0, 4);
    for (int i = 0; i < 100; ++i) {
        BiPoly h(F5);
        for (auto m : monomials_up_to(8)) h.add_term(m, Fp{c(rng)});
        const BiPoly r = normal_form(h, basis);
        for (const auto& [m, coef] : r.terms())
            for (const auto& g : basis) EXPECT_FALSE(g.lm().divides(m));
        // h - r lies in the ideal, so it reduces to zero
        EXPECT_TRUE(normal_form(h - r, basis).is_zero());
    }
}

TEST(SPolynomial, Examples)
{
    PrimeField F5(5);
    EXPECT_TRUE(s_polynomial(mono(F5, 1, 1), mono(F5, 0, 2)).is_zero());
    EXPECT_EQ(s_polynomial(mono(F5, 1, 1), mono(F5, 5, 0) - BiPoly::y(F5)), mono(F5, 0, 2));
    const BiPoly f = mono(F5, 3, 1) + BiPoly::x(F5);
    EXPECT_TRUE(s_polynomial(f, f).is_zero());
}

TEST(Buchberger, Examples)
{
    PrimeField F5(5), F7(7);
    std::vector<BiPoly> gens{BiPoly::y(F5) - mono(F5, 5, 0), mono(F5, 6, 0)};
    EXPECT_EQ(buchberger_reduced(gens).elements, x5_basis());

    std::vector<BiPoly> g2{BiPoly::y(F7) - BiPoly::constant(F7, F7.one()), BiPoly::x(F7)};
    const auto b2 = buchberger_reduced(g2).elements;
    ASSERT_EQ(b2.size(), 2u);
    EXPECT_EQ(b2[0], BiPoly::x(F7));
    EXPECT_EQ(b2[1], BiPoly::y(F7) - BiPoly::constant(F7, F7.one()));

    std::vector<BiPoly> g3{mono(F7, 4, 0)};
    EXPECT_EQ(buchberger_reduced(g3).elements, g3);
    EXPECT_THROW(buchberger_reduced(std::vector<BiPoly>{BiPoly(F7)}), invalid_param);
}

TEST(Fglm, Examples)
{
    EXPECT_EQ(fglm_from_sequence(x5_prefix(), 6).elements, x5_basis());

    PrimeField F7(7), F3(3);
    const auto b = fglm_from_sequence(SequencePrefix(F7, {1}), 1).elements;
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0], BiPoly::x(F7));
    EXPECT_EQ(b[1], BiPoly::y(F7) - BiPoly::constant(F7, F7.one()));

    const auto z = fglm_from_sequence(SequencePrefix(F3, {0, 0}), 2).elements;
    ASSERT_EQ(z.size(), 2u);
    EXPECT_EQ(z[0], BiPoly::y(F3));
    EXPECT_EQ(z[1], mono(F3, 2, 0));

    EXPECT_THROW(fglm_from_sequence(SequencePrefix(F3, {0, 0}), 3), prefix_too_short);
}

TEST(DefiningIdealBasis, BothEnginesOnExamples)
{
    for (Engine e : {Engine::buchberger, Engine::fglm}) {
        const auto gb = defining_ideal_basis(x5_prefix(), 6, e);
        EXPECT_EQ(gb.elements, x5_basis()) << to_string(e);
        EXPECT_EQ(gb.engine, e);
        EXPECT_EQ(gb.precision, std::optional<std::size_t>{6});
        EXPECT_THROW(defining_ideal_basis(x5_prefix(), 7, e), prefix_too_short);
    }
}

TEST(Engines, AgreeOnAllBinaryPrefixes)
{
    for (unsigned bits = 1; bits < 256; ++bits) {
        const auto s = binary_from_bits(bits, 8);
        for (std::size_t N = 1; N <= 8; ++N) {
            const auto a = defining_ideal_basis(s, N, Engine::buchberger);
            const auto b = defining_ideal_basis(s, N, Engine::fglm);
            ASSERT_EQ(a.elements, b.elements) << "bits=" << bits << " N=" << N;
            expect_valid(s, N, b);
        }
    }
}

TEST(Engines, AgreeOnRandomPrefixes)
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> nd(1, 32);
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t p = i % 2 ? 3 : 5;
        const std::size_t N = nd(rng);
        const auto s = gen_random(p, N, rng());
        const auto a = defining_ideal_basis(s, N, Engine::buchberger);
        const auto b = defining_ideal_basis(s, N, Engine::fglm);
        ASSERT_EQ(a.elements, b.elements) << "p=" << p << " N=" << N;
        expect_valid(s, N, b);
    }
}

TEST(Fglm, StaircaseHasExactlyNElements)
{
    std::mt19937_64 rng(43);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        for (std::size_t N : {1u, 2u, 5u, 13u, 40u}) {
            const auto s = gen_random(p, N, rng());
            FglmStats st;
            const auto gb = fglm_from_sequence(s, N, &st);
            EXPECT_EQ(st.staircase.size(), N);
            // staircase monomials are exactly those not divisible by any LM
            for (auto m : monomials_up_to(static_cast<std::uint32_t>(N))) {
                bool divisible = false;
                for (const auto& g : gb.elements) divisible |= g.lm().divides(m);
                const bool in_stair = std::find(st.staircase.begin(), st.staircase.end(), m) != st.staircase.end();
                EXPECT_NE(divisible, in_stair);
            }
        }
    }
}

TEST(Fglm, MultiplicationCountGrowsCubically)
{
    double lo = 1e300, hi = 0;
    for (std::size_t N : {32u, 64u, 128u}) {
        FglmStats st;
        fglm_from_sequence(gen_random(2, N, 1234 + N), N, &st);
        const double r = static_cast<double>(st.field_mults) / (double(N) * N * N);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    EXPECT_GT(lo, 0.0);
    EXPECT_LE(hi / lo, 4.0);
}

struct MovedBasis {
    std::uint32_t p;
    std::size_t N;
    std::vector<BiPoly> original, moved, generators;
};

// Reduced bases with every |LE| >= 2, pushed through y -> y + ax + b.
std::vector<MovedBasis> moved_bases()
{
    std::mt19937_64 rng(44);
    std::vector<MovedBasis> out;
    for (int i = 0; i < 400 && out.size() < 60; ++i) {
        const std::uint32_t p = i % 2 ? 5 : 7;
        const std::size_t N = 6 + i % 20;
        const auto s = gen_random(p, N, rng());
        const auto gb = fglm_from_sequence(s, N);
        bool all_deg2 = true;
        for (const auto& g : gb.elements) all_deg2 &= g.lm().total() >= 2;
        if (!all_deg2) continue;
        const PrimeField F(p);
        const Fp a = F.from_uint(rng() % p), b = F.from_uint(rng() % p);
        MovedBasis m{p, N, gb.elements, {}, {}};
        for (const auto& g : gb.elements) m.moved.push_back(substitute_linear(g, a, b));
        for (const auto& g : defining_ideal_generators(s, N)) m.generators.push_back(substitute_linear(g, a, b));
        out.push_back(std::move(m));
    }
    return out;
}

TEST(Groebner, LinearSubstitutionKeepsGroebnerBasis)
{
    const auto all = moved_bases();
    EXPECT_GE(all.size(), 20u);
    for (const auto& m : all) {
        const BasisCheck c = check_reduced_basis(m.moved, m.generators);
        EXPECT_TRUE(c.monic);
        EXPECT_TRUE(c.s_pairs_vanish) << "p=" << m.p << " N=" << m.N;
        EXPECT_TRUE(c.generators_vanish) << "p=" << m.p << " N=" << m.N;
        for (std::size_t i = 0; i < m.moved.size(); ++i) EXPECT_EQ(m.moved[i].lm(), m.original[i].lm());
        EXPECT_EQ(buchberger_reduced(m.generators).elements, reduce_basis(m.moved));
    }
}

// The substituted set is claimed to be reduced as well.
TEST(Groebner, LinearSubstitutionKeepsReducedness)
{
    std::size_t broken = 0;
    std::string example;
    const auto all = moved_bases();
    for (const auto& m : all) {
        if (check_reduced_basis(m.moved, m.generators).reduced) continue;
        if (!broken++) {
            example = "p=" + std::to_string(m.p) + " N=" + std::to_string(m.N) + ": {";
            for (std::size_t i = 0; i < m.moved.size(); ++i) example += (i ? ", " : "") + to_string(m.moved[i]);
            example += "}";
        }
    }
    EXPECT_EQ(broken, 0u) << broken << " of " << all.size() << " substituted bases are not reduced, e.g. " << example;
}
