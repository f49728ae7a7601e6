#ifndef EXPC_GROEBNER_HPP
#define EXPC_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "expc/bipoly.hpp"
#include "expc/error.hpp"
#include "expc/sequence.hpp"

namespace expc {

enum class Engine { buchberger, fglm };

constexpr std::string_view to_string(Engine e) { return e == Engine::fglm ? "fglm" : "buchberger"; }

// Reduced grlex Groebner basis. Elements are monic and sorted by ascending
// leading monomial. precision is N when the basis belongs to <y - G_N, x^N>.
struct GroebnerBasis {
    std::vector<BiPoly> elements;
    std::uint32_t p = 0;
    std::optional<std::size_t> precision;
    Engine engine = Engine::buchberger;
};

inline void sort_by_leading_monomial(std::vector<BiPoly>& v)
{
    std::sort(v.begin(), v.end(),
              [](const BiPoly& a, const BiPoly& b) { return grlex_cmp(a.lm(), b.lm()) < 0; });
}

// Remainder of full multivariate division of h by basis under grlex: no term
// of the result is divisible by any leading monomial in basis.
inline BiPoly normal_form(const BiPoly& h, std::span<const BiPoly> basis)
{
    const auto& F = h.field();
    std::vector<LeadingData> lead;
    lead.reserve(basis.size());
    for (const auto& g : basis) lead.push_back(g.leading_data());

    BiPoly rest = h;
    BiPoly rem(F);
    while (!rest.is_zero()) {
        const auto [m, c] = *rest.terms().begin();
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!lead[i].lm.divides(m)) continue;
            rest.sub_mul_term(basis[i], quotient(m, lead[i].lm), F.div(c, lead[i].lc));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            rest.add_term(m, F.neg(c));
        }
    }
    return rem;
}

// S(f, g) = (L / LT(f)) f - (L / LT(g)) g with L = lcm(LM(f), LM(g)).
inline BiPoly s_polynomial(const BiPoly& f, const BiPoly& g)
{
    const auto& F = f.field();
    const auto lf = f.leading_data();
    const auto lg = g.leading_data();
    const Monomial2 L = lcm(lf.lm, lg.lm);
    BiPoly s = f.mul_term(quotient(L, lf.lm), F.inv(lf.lc));
    s.sub_mul_term(g, quotient(L, lg.lm), F.inv(lg.lc));
    return s;
}

// Turns any Groebner basis into the reduced one: drop elements whose leading
// monomial is a multiple of another's, fully reduce the rest, make monic.
inline std::vector<BiPoly> reduce_basis(std::vector<BiPoly> g)
{
    sort_by_leading_monomial(g);
    std::vector<BiPoly> minimal;
    for (const auto& f : g) {
        const Monomial2 m = f.lm();
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const BiPoly& k) { return k.lm().divides(m); });
        if (!redundant) minimal.push_back(f);
    }
    std::vector<BiPoly> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        // LM(minimal[i]) is not divisible by any other LM, so it survives.
        out.push_back(normalized(normal_form(minimal[i], others)));
    }
    sort_by_leading_monomial(out);
    return out;
}

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// of leading monomials first). New elements go through the Gebauer-Moeller
// update, which contains the coprime leading monomial criterion.
inline GroebnerBasis buchberger_reduced(std::span<const BiPoly> gens)
{
    std::vector<BiPoly> g;
    std::vector<bool> active;
    struct Pair {
        std::size_t i, j;
        Monomial2 lcm;
    };
    std::vector<Pair> pairs;

    auto update = [&](BiPoly h) {
        const std::size_t k = g.size();
        const Monomial2 hm = h.lm();
        g.push_back(std::move(h));
        active.push_back(true);

        std::vector<Pair> cand;
        for (std::size_t i = 0; i < k; ++i)
            if (active[i]) cand.push_back({i, k, lcm(g[i].lm(), hm)});
        std::vector<Pair> kept;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            const Pair& pr = cand[c];
            const bool coprime = pr.lcm == g[pr.i].lm() * hm;
            auto divides_lcm = [&](const Pair& o) { return o.lcm.divides(pr.lcm); };
            if (coprime || (std::none_of(cand.begin() + c + 1, cand.end(), divides_lcm) &&
                            std::none_of(kept.begin(), kept.end(), divides_lcm)))
                kept.push_back(pr);
        }
        std::erase_if(pairs, [&](const Pair& pr) {
            return hm.divides(pr.lcm) && lcm(g[pr.i].lm(), hm) != pr.lcm && lcm(g[pr.j].lm(), hm) != pr.lcm;
        });
        for (const auto& pr : kept)
            if (pr.lcm != g[pr.i].lm() * hm) pairs.push_back(pr);
        for (std::size_t i = 0; i < k; ++i)
            if (active[i] && hm.divides(g[i].lm())) active[i] = false;
    };

    std::uint32_t p = 0;
    for (const auto& f : gens)
        if (!f.is_zero()) {
            p = f.field().modulus();
            update(normalized(f));
        }
    if (g.empty()) throw invalid_param("generators are all zero");

    auto reducers = [&] {
        std::vector<BiPoly> r;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (active[i]) r.push_back(g[i]);
        return r;
    };
    std::vector<BiPoly> current = reducers();
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (auto c = grlex_cmp(a.lcm, b.lcm); c != 0) return c < 0;
            return a.j != b.j ? a.j < b.j : a.i < b.i;
        });
        const Pair pr = *it;
        pairs.erase(it);
        BiPoly r = normal_form(s_polynomial(g[pr.i], g[pr.j]), current);
        if (r.is_zero()) continue;
        update(normalized(r));
        current = reducers();
    }
    return {reduce_basis(std::move(current)), p, std::nullopt, Engine::buchberger};
}

// Generators y - G_N(x) and x^N of the defining ideal of a prefix.
inline std::vector<BiPoly> defining_ideal_generators(const SequencePrefix& s, std::size_t N)
{
    const auto& F = s.field();
    BiPoly y_minus_g = BiPoly::y(F) - BiPoly::from_x(generating_polynomial(s, N));
    return {y_minus_g, BiPoly::term(F, {static_cast<std::uint32_t>(N), 0}, F.one())};
}

struct BasisCheck {
    bool monic = true;
    bool reduced = true;           // no term of P_j divisible by LM(P_i), i != j
    bool s_pairs_vanish = true;    // every S(P_i, P_j) reduces to 0
    bool generators_vanish = true; // every supplied generator reduces to 0
    bool ok() const { return monic && reduced && s_pairs_vanish && generators_vanish; }
};

inline BasisCheck check_reduced_basis(std::span<const BiPoly> basis, std::span<const BiPoly> generators = {})
{
    BasisCheck c;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].lc().v != 1) c.monic = false;
        const Monomial2 li = basis[i].lm();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, coef] : basis[j].terms())
                if (li.divides(m)) c.reduced = false;
            if (i < j && !normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero())
                c.s_pairs_vanish = false;
        }
    }
    for (const auto& g : generators)
        if (!normal_form(g, basis).is_zero()) c.generators_vanish = false;
    return c;
}

} // namespace expc

#endif
