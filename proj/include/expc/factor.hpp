#ifndef EXPC_FACTOR_HPP
#define EXPC_FACTOR_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expc/bipoly.hpp"
#include "expc/error.hpp"
#include "expc/unipoly.hpp"

namespace expc {

// Exact division: returns q with h = d * q, or nullopt if d does not divide h.
// A single polynomial is a Groebner basis of the ideal it generates, so the
// division remainder is zero exactly when d | h.
inline std::optional<BiPoly> bivar_divide(const BiPoly& d, const BiPoly& h)
{
    const auto& F = h.field();
    if (d.is_zero()) throw zero_polynomial("division by the zero polynomial");
    const auto [dle, dlm, dlc] = d.leading_data();
    const Fp dlc_inv = F.inv(dlc);
    BiPoly r = h;
    BiPoly q(F);
    while (!r.is_zero()) {
        const auto [m, c] = *r.terms().begin();
        if (!dlm.divides(m)) return std::nullopt;
        const Monomial2 qm = quotient(m, dlm);
        const Fp qc = F.mul(c, dlc_inv);
        q.add_term(qm, qc);
        r.sub_mul_term(d, qm, qc);
    }
    return q;
}

struct Factorization {
    BiPoly left;
    BiPoly right;
};

namespace detail {

inline BiPoly swap_xy(const BiPoly& h)
{
    BiPoly r(h.field());
    for (const auto& [m, c] : h.terms()) r.add_term({m.a2, m.a1}, c);
    return r;
}

inline Factorization swap_xy(const Factorization& f) { return {swap_xy(f.left), swap_xy(f.right)}; }

// p^e, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) return UINT64_MAX;
        r *= p;
    }
    return r;
}

// Visits every vector in F_p^n in odometer order; stops early when visit
// returns true.
template <typename Visit>
bool for_each_vector(std::uint32_t p, std::size_t n, Visit&& visit)
{
    std::vector<std::uint32_t> v(n, 0);
    for (;;) {
        if (visit(static_cast<const std::vector<std::uint32_t>&>(v))) return true;
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) return false;
    }
}

// A proper factor of a univariate f(x) of degree >= 2, or nullopt if f is
// irreducible.
inline std::optional<Factorization> factor_univariate(const UniPoly& f, std::uint64_t budget)
{
    const auto& F = f.field();
    const std::size_t n = *f.degree();
    if (n <= 1) return std::nullopt;
    const UniPoly x = UniPoly::monomial(F, F.one(), 1);
    UniPoly xp = x % f;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        xp = powmod(xp, F.modulus(), f);
        UniPoly g = uni_gcd(f, xp - x);
        if (*g.degree() == 0) continue;
        if (*g.degree() < n) return Factorization{BiPoly::from_x(g), BiPoly::from_x(f / g)};
        // Every irreducible factor has degree exactly i: search monic
        // degree-i divisors.
        if (saturating_pow(F.modulus(), i) > budget)
            throw budget_exceeded("univariate factor search over degree " + std::to_string(i));
        std::optional<Factorization> found;
        for_each_vector(F.modulus(), i, [&](const std::vector<std::uint32_t>& v) {
            std::vector<Fp> c(i + 1, F.one());
            for (std::size_t k = 0; k < i; ++k) c[k] = Fp{v[k]};
            UniPoly cand(F, std::move(c));
            auto [q, r] = divmod(f, cand);
            if (!r.is_zero()) return false;
            found = Factorization{BiPoly::from_x(cand), BiPoly::from_x(q)};
            return true;
        });
        return found;
    }
    return std::nullopt;
}

// h = A(x) y + B(x) with A != 0, or h = B(x).
inline std::optional<Factorization> factor_linear_in_y(const BiPoly& h, std::uint64_t budget)
{
    auto cy = h.y_coefficients();
    if (cy.size() == 1) return factor_univariate(cy[0], budget);
    const UniPoly g = uni_gcd(cy[1], cy[0]);
    if (*g.degree() == 0) return std::nullopt;
    const BiPoly gb = BiPoly::from_x(g);
    return Factorization{gb, *bivar_divide(gb, h)};
}

} // namespace detail

// Number of normalized trial-division candidates the exhaustive search may
// visit for a polynomial of total degree d: p^C(floor(d/2)+2, 2).
inline std::uint64_t trial_division_cost(std::uint32_t p, std::uint32_t d)
{
    const std::uint64_t k = d / 2;
    return detail::saturating_pow(p, (k + 1) * (k + 2) / 2);
}

// Finds a factorization h = left * right with both factors of total degree
// >= 1 over F_p, or returns nullopt if h is irreducible. Fast paths handle
// total degree 1, visible factors x or y, and polynomials of degree <= 1 in
// one variable; everything else goes through trial division by normalized
// candidates of total degree <= deg(h)/2.
inline std::optional<Factorization> find_factorization(const BiPoly& h, std::uint64_t budget)
{
    const auto& F = h.field();
    if (h.is_zero()) throw zero_polynomial("irreducibility of the zero polynomial");
    const std::uint32_t D = h.total_degree();
    if (D == 0) throw invalid_param("constants are units, not irreducible polynomials");
    if (D == 1) return std::nullopt;

    Monomial2 common{UINT32_MAX, UINT32_MAX};
    for (const auto& [m, c] : h.terms()) common = {std::min(common.a1, m.a1), std::min(common.a2, m.a2)};
    if (common.a1 > 0) {
        const BiPoly x = BiPoly::x(F);
        return Factorization{x, *bivar_divide(x, h)};
    }
    if (common.a2 > 0) {
        const BiPoly y = BiPoly::y(F);
        return Factorization{y, *bivar_divide(y, h)};
    }

    if (h.degree_y() <= 1) return detail::factor_linear_in_y(h, budget);
    if (h.degree_x() <= 1) {
        auto f = detail::factor_linear_in_y(detail::swap_xy(h), budget);
        if (!f) return std::nullopt;
        return detail::swap_xy(*f);
    }

    if (trial_division_cost(F.modulus(), D) > budget)
        throw budget_exceeded("trial division for total degree " + std::to_string(D) + " over F_" +
                              std::to_string(F.modulus()));

    const Monomial2 hlm = h.lm();
    const std::uint32_t dx = h.degree_x(), dy = h.degree_y();
    const auto monos = monomials_up_to(D / 2);
    std::optional<Factorization> found;
    for (std::size_t li = 1; li < monos.size() && !found; ++li) {
        const Monomial2 lead = monos[li];
        // LM(left) * LM(right) = LM(h) under a monomial order.
        if (!lead.divides(hlm)) continue;
        std::vector<Monomial2> free;
        for (std::size_t j = 0; j < li; ++j)
            if (monos[j].a1 <= dx && monos[j].a2 <= dy) free.push_back(monos[j]);
        detail::for_each_vector(F.modulus(), free.size(), [&](const std::vector<std::uint32_t>& v) {
            BiPoly cand = BiPoly::term(F, lead, F.one());
            for (std::size_t j = 0; j < free.size(); ++j) cand.add_term(free[j], Fp{v[j]});
            if (auto q = bivar_divide(cand, h)) {
                found = Factorization{std::move(cand), std::move(*q)};
                return true;
            }
            return false;
        });
    }
    return found;
}

inline bool is_irreducible(const BiPoly& h, std::uint64_t budget)
{
    return !find_factorization(h, budget).has_value();
}

} // namespace expc

#endif
