#ifndef EXPC_FGLM_HPP
#define EXPC_FGLM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "expc/bipoly.hpp"
#include "expc/groebner.hpp"
#include "expc/sequence.hpp"

namespace expc {

struct FglmStats {
    std::uint64_t field_mults = 0;          // multiplications in F_p
    std::vector<Monomial2> staircase;       // standard monomials, ascending grlex
};

// Order change for the ideal <y - G(x), x^N>.
//
// The quotient ring has basis {1, x, ..., x^(N-1)}; the normal form of
// x^a y^b there is x^a G^b mod x^N. Monomials are visited in ascending grlex
// order. Each normal form is reduced against an echelon of earlier ones that
// also records how every echelon row is expressed through staircase monomials.
// A dependent monomial m therefore yields the basis element
// m - sum lambda_j * stair_j directly; an independent one joins the staircase.
// The scan stops at the first total degree whose monomials are all multiples
// of leading monomials already found.
inline std::vector<BiPoly> fglm_reduced_basis(const UniPoly& G, std::size_t N, FglmStats* stats = nullptr)
{
    const PrimeField F = G.field();
    if (N == 0) throw invalid_param("precision must be positive");
    std::uint64_t mults = 0;

    // G^b mod x^N as dense length-N vectors.
    std::vector<std::vector<Fp>> gpow;
    std::vector<Fp> g(N, F.zero());
    for (std::size_t i = 0; i < N && i < G.size(); ++i) g[i] = G.coeff(i);
    auto power = [&](std::size_t b) -> const std::vector<Fp>& {
        while (gpow.size() <= b) {
            std::vector<Fp> next(N, F.zero());
            if (gpow.empty()) {
                next[0] = F.one();
            } else {
                const auto& prev = gpow.back();
                for (std::size_t i = 0; i < N; ++i) {
                    if (prev[i].is_zero()) continue;
                    for (std::size_t j = 0; i + j < N; ++j) {
                        if (g[j].is_zero()) continue;
                        next[i + j] = F.add(next[i + j], F.mul(prev[i], g[j]));
                        ++mults;
                    }
                }
            }
            gpow.push_back(std::move(next));
        }
        return gpow[b];
    };

    struct Row {
        std::vector<Fp> vec;  // zero before pivot, vec[pivot] == 1
        std::size_t pivot;
        std::vector<Fp> comb; // vec = sum comb[j] * NF(stair_j)
    };
    std::vector<Row> rows;
    std::vector<Monomial2> stair;
    std::vector<BiPoly> basis;

    auto divisible = [&](Monomial2 m) {
        for (const auto& b : basis)
            if (b.lm().divides(m)) return true;
        return false;
    };

    for (std::uint32_t d = 0;; ++d) {
        bool all_covered = true;
        for (std::uint32_t b = 0; b <= d; ++b) {
            const Monomial2 m{d - b, b};
            if (divisible(m)) continue;
            all_covered = false;

            std::vector<Fp> w(N, F.zero());
            const auto& gb = power(b);
            for (std::size_t i = m.a1; i < N; ++i) w[i] = gb[i - m.a1];
            std::vector<Fp> lambda(stair.size(), F.zero());

            for (const auto& r : rows) {
                const Fp t = w[r.pivot];
                if (t.is_zero()) continue;
                for (std::size_t i = r.pivot; i < N; ++i) {
                    if (r.vec[i].is_zero()) continue;
                    w[i] = F.sub(w[i], F.mul(t, r.vec[i]));
                    ++mults;
                }
                for (std::size_t j = 0; j < r.comb.size(); ++j) {
                    if (r.comb[j].is_zero()) continue;
                    lambda[j] = F.add(lambda[j], F.mul(t, r.comb[j]));
                    ++mults;
                }
            }

            std::size_t piv = 0;
            while (piv < N && w[piv].is_zero()) ++piv;
            if (piv == N) {
                BiPoly elem = BiPoly::term(F, m, F.one());
                for (std::size_t j = 0; j < stair.size(); ++j) elem.add_term(stair[j], F.neg(lambda[j]));
                basis.push_back(std::move(elem));
                continue;
            }

            // w = NF(m) - sum lambda_j NF(stair_j), and m becomes stair_k.
            std::vector<Fp> comb(stair.size() + 1, F.zero());
            for (std::size_t j = 0; j < stair.size(); ++j) comb[j] = F.neg(lambda[j]);
            comb.back() = F.one();
            const Fp s = F.inv(w[piv]);
            for (std::size_t i = piv; i < N; ++i) w[i] = F.mul(w[i], s);
            for (auto& c : comb) c = F.mul(c, s);
            mults += (N - piv) + comb.size();
            rows.push_back({std::move(w), piv, std::move(comb)});
            stair.push_back(m);
        }
        if (all_covered) break;
    }

    if (stats) {
        stats->field_mults = mults;
        stats->staircase = stair;
    }
    sort_by_leading_monomial(basis);
    return basis;
}

inline GroebnerBasis fglm_from_sequence(const SequencePrefix& s, std::size_t N, FglmStats* stats = nullptr)
{
    if (N == 0) throw invalid_param("precision must be positive");
    const UniPoly G = generating_polynomial(s, N);
    return {fglm_reduced_basis(G, N, stats), s.p(), N, Engine::fglm};
}

inline GroebnerBasis defining_ideal_basis(const SequencePrefix& s, std::size_t N, Engine engine)
{
    if (N == 0) throw invalid_param("precision must be positive");
    s.require_length(N);
    if (engine == Engine::fglm) return fglm_from_sequence(s, N);
    auto gens = defining_ideal_generators(s, N);
    GroebnerBasis gb = buchberger_reduced(gens);
    gb.precision = N;
    return gb;
}

} // namespace expc

#endif
