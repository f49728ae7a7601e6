#ifndef EXPC_DIFF_OPERATOR_HPP
#define EXPC_DIFF_OPERATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expc/complexity.hpp"
#include "expc/error.hpp"
#include "expc/generators.hpp"
#include "expc/sequence.hpp"
#include "expc/unipoly.hpp"

namespace expc {

// T(G) = f_{k+1} D^(k) G + ... + f_2 D^(1) G + f_1 G + f_0 with Hasse
// derivatives D^(j). coeffs holds f_0, ..., f_{k+1}.
class DiffOperator {
public:
    explicit DiffOperator(std::vector<UniPoly> coeffs) : f_(std::move(coeffs))
    {
        if (f_.size() < 2) throw invalid_param("operator needs at least f_0 and f_1");
        if (std::all_of(f_.begin(), f_.end(), [](const UniPoly& f) { return f.is_zero(); }))
            throw invalid_param("operator with all coefficients zero");
        for (const auto& f : f_)
            if (!(f.field() == f_.front().field())) throw invalid_param("coefficients over different fields");
    }

    const PrimeField& field() const { return f_.front().field(); }
    std::size_t order() const { return f_.size() - 2; } // k
    const std::vector<UniPoly>& coeffs() const { return f_; }
    const UniPoly& f(std::size_t i) const { return f_.at(i); }

    // Number of sequence terms needed to evaluate T(G) mod x^M exactly:
    // coefficient m of f_{j+1} D^(j) G uses s_{m - t + j} for t >= val(f_{j+1}).
    std::size_t required_length(std::size_t M) const
    {
        std::size_t need = M;
        for (std::size_t j = 0; j + 1 < f_.size(); ++j) {
            const auto v = f_[j + 1].valuation();
            if (!v) continue;
            if (M + j > *v) need = std::max(need, M + j - *v);
        }
        return need;
    }

private:
    std::vector<UniPoly> f_;
};

// T(G_len) mod x^M; zero certifies T(G) = 0 mod x^M.
inline UniPoly apply_diff_operator(const DiffOperator& T, const SequencePrefix& s, std::size_t M)
{
    if (!(T.field() == s.field())) throw invalid_param("operator and sequence over different fields");
    s.require_length(T.required_length(M));
    const UniPoly G = generating_polynomial(s);
    UniPoly r = truncate(T.f(0), M);
    for (std::size_t j = 0; j <= T.order(); ++j) {
        const UniPoly& c = T.f(j + 1);
        if (c.is_zero()) continue;
        r += series_mul_trunc(c, hasse_derivative(G, j), M);
    }
    return r;
}

namespace detail {
inline UniPoly one_minus_x_pow(const PrimeField& F, std::uint64_t e) { return pow(UniPoly(F, {1, -1}), e); }
} // namespace detail

// The first-order operator annihilating the generating function of the
// inversive sequence: f_2 = a x (1-x)^p, f_1 = -b (1-x)^p,
// f_0 = -(1-x)^(p-1) + x^e with e = b/a mod p in [0, p-1].
inline DiffOperator inversive_ode_coeffs(std::uint32_t p, std::int64_t a, std::int64_t b)
{
    const PrimeField F(p);
    const Fp fa = F.from_int(a), fb = F.from_int(b);
    if (fa.is_zero()) throw invalid_param("inversive operator needs a != 0 mod p");
    const std::size_t e = F.div(fb, fa).v;
    const UniPoly q = detail::one_minus_x_pow(F, p);
    UniPoly f2 = fa * shift(q, 1);
    UniPoly f1 = F.neg(fb) * q;
    UniPoly f0 = UniPoly::monomial(F, F.one(), e) - detail::one_minus_x_pow(F, p - 1);
    return DiffOperator({f0, f1, f2});
}

// x^2 (1-x) G' - (1-x)^2 G - (s0 - 1) x + s0 = 0 for s_n = n s_{n-1} + 1.
inline DiffOperator sw_ode_coeffs(std::uint32_t p, std::int64_t s0)
{
    const PrimeField F(p);
    UniPoly f2 = shift(UniPoly(F, {1, -1}), 2);
    UniPoly f1 = -detail::one_minus_x_pow(F, 2);
    UniPoly f0(F, {s0, 1 - s0});
    return DiffOperator({f0, f1, f2});
}

// (x - 1) G' + (k + 1) G = 0 for G = (1 - x)^(-1-k).
inline DiffOperator binomial_ode_coeffs(std::uint32_t p, std::uint64_t k)
{
    const PrimeField F(p);
    return DiffOperator({UniPoly(F), UniPoly::constant(F, F.from_uint(k + 1)), UniPoly(F, {-1, 1})});
}

// max of the given degrees, zero polynomials contributing -infinity.
inline std::optional<std::int64_t> max_degree(std::initializer_list<std::pair<const UniPoly*, std::int64_t>> terms)
{
    std::optional<std::int64_t> best;
    for (const auto& [f, offset] : terms) {
        const Degree d = f->degree();
        if (!d) continue;
        const std::int64_t v = static_cast<std::int64_t>(*d) + offset;
        if (!best || v > *best) best = v;
    }
    return best;
}

struct Thm41Hypotheses {
    bool ok = false;
    std::int64_t F = 0; // max{deg f2 - 1, deg f1, deg f0 - 1}
};

// Whether some alpha in the algebraic closure has f2(alpha) = f1(alpha) = 0
// and f2'(alpha) f0(alpha) != 0, decided with gcds only: the candidates are
// the roots of h = rad(gcd(f1, f2)), and those avoiding f2' f0 survive in
// h / gcd(h, f2' f0).
inline Thm41Hypotheses check_thm41_hypotheses(const UniPoly& f0, const UniPoly& f1, const UniPoly& f2)
{
    if (f2.is_zero()) throw invalid_param("f2 must be nonzero");
    Thm41Hypotheses r;
    r.F = *max_degree({{&f2, -1}, {&f1, 0}, {&f0, -1}});
    const UniPoly g = uni_gcd(f1, f2);
    const UniPoly h = squarefree_part(g);
    const UniPoly bad = derivative(f2) * f0;
    const UniPoly surviving = bad.is_zero() ? UniPoly::constant(h.field(), h.field().one()) : h / uni_gcd(h, bad);
    r.ok = *surviving.degree() >= 1;
    return r;
}

// Least E with E (E + F) >= N or E >= p.
inline std::uint32_t thm41_min_E(std::size_t N, std::int64_t F, std::uint32_t p)
{
    if (F < 0) throw invalid_param("F must be nonnegative");
    std::uint64_t E = 0;
    while (E < p && E * (E + static_cast<std::uint64_t>(F)) < N) ++E;
    return static_cast<std::uint32_t>(E);
}

// ceil((N - F + 2) / (k + 4)), clamped at 0.
inline std::size_t thm43_L_bound(std::size_t N, std::int64_t F, std::size_t k)
{
    const std::int64_t num = static_cast<std::int64_t>(N) - F + 2;
    if (num <= 0) return 0;
    const std::int64_t den = static_cast<std::int64_t>(k) + 4;
    return static_cast<std::size_t>((num + den - 1) / den);
}

// F = max deg f_i over the whole operator (zero coefficients ignored).
inline std::int64_t thm43_F(const DiffOperator& T)
{
    std::optional<std::int64_t> best;
    for (const auto& f : T.coeffs())
        if (auto d = f.degree(); d && (!best || static_cast<std::int64_t>(*d) > *best))
            best = static_cast<std::int64_t>(*d);
    return *best;
}

struct Corollary42Row {
    std::size_t N = 0;
    std::uint32_t E = 0;
    double ratio = 0; // E / N^(1/4)
    std::optional<bool> inv1; // E(E+1) >= N, for 2 <= N <= e
    std::optional<bool> inv2; // E(E+F) >= N, for e+3 <= N <= p-1
};

struct Corollary42Report {
    std::uint32_t p = 0;
    std::int64_t a = 0, b = 0;
    std::uint32_t e = 0; // b/a mod p; G_{a,b} = a^{-1} G_{1,e}
    std::vector<Corollary42Row> rows;
    double min_ratio = 0;
    bool all_pass = true;
};

// E_N of the inversive sequence over [nlo, nhi] with the exact consequences
// of the first-order bound for the normalized shift e = b/a: E(E+1) >= N for 2 <= N <= e
// and E(E+max(e,1)) >= N for e+3 <= N <= p-1. The constant of the N^(1/4)
// bound is not asserted; only the empirical minimum ratio is reported.
inline Corollary42Report corollary42_check(std::uint32_t p, std::int64_t a, std::int64_t b, std::size_t nlo,
                                           std::size_t nhi, Engine engine = Engine::fglm)
{
    if (p < 3) throw invalid_param("need p >= 3");
    if (nlo < 1 || nhi < nlo) throw invalid_param("bad N range");
    const SequencePrefix s = gen_inversive(p, a, b, nhi);
    const PrimeField F(p);
    Corollary42Report rep;
    rep.p = p;
    rep.a = a;
    rep.b = b;
    rep.e = F.div(F.from_int(b), F.from_int(a)).v;
    const std::uint64_t Fe = std::max<std::uint64_t>(rep.e, 1);
    rep.rows.resize(nhi - nlo + 1);
    detail::parallel_for(rep.rows.size(), [&](std::size_t i) {
        Corollary42Row& row = rep.rows[i];
        row.N = nlo + i;
        row.E = expansion_complexity_gb(s, row.N, engine).value;
        row.ratio = row.E / std::pow(static_cast<double>(row.N), 0.25);
        const std::uint64_t E = row.E;
        if (row.N >= 2 && row.N <= rep.e) row.inv1 = E * (E + 1) >= row.N;
        if (row.N >= rep.e + 3 && row.N <= p - 1) row.inv2 = E * (E + Fe) >= row.N;
    });
    rep.min_ratio = rep.rows.empty() ? 0 : rep.rows.front().ratio;
    for (const auto& r : rep.rows) {
        rep.min_ratio = std::min(rep.min_ratio, r.ratio);
        if (r.inv1 == false || r.inv2 == false) rep.all_pass = false;
    }
    return rep;
}

} // namespace expc

#endif
