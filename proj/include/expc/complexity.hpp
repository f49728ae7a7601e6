#ifndef EXPC_COMPLEXITY_HPP
#define EXPC_COMPLEXITY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expc/bipoly.hpp"
#include "expc/error.hpp"
#include "expc/factor.hpp"
#include "expc/fglm.hpp"
#include "expc/groebner.hpp"
#include "expc/linalg.hpp"
#include "expc/linear_complexity.hpp"
#include "expc/parallel.hpp"
#include "expc/sequence.hpp"

namespace expc {

class invariant_violation : public error {
public:
    using error::error;
};

enum class Method { groebner, kernel };

// E_N together with a monic polynomial of that total degree vanishing at
// (x, G_N(x)) mod x^N. No witness for the all-zero prefix (E_N = 0).
struct ComplexityResult {
    std::size_t N = 0;
    std::uint32_t value = 0;
    std::optional<BiPoly> witness;
    Method method = Method::groebner;
};

// Least d with (d+1)(d+2)/2 > N: beyond that many monomials the evaluation
// map into F_p^N must have a kernel.
inline std::uint32_t dimension_upper_bound(std::size_t N)
{
    if (N == 0) throw invalid_param("N must be positive");
    std::uint32_t d = 0;
    while (static_cast<std::size_t>(d + 1) * (d + 2) / 2 <= N) ++d;
    return d;
}

// E_N as the least total degree among leading exponents of the reduced
// grlex basis of <y - G_N, x^N>.
inline ComplexityResult expansion_complexity_gb(const SequencePrefix& s, std::size_t N, Engine engine = Engine::fglm)
{
    if (N == 0) throw invalid_param("N must be positive");
    s.require_length(N);
    if (s.is_zero_prefix(N)) return {N, 0, std::nullopt, Method::groebner};
    GroebnerBasis gb = defining_ideal_basis(s, N, engine);
    // Sorted by ascending LM: the first element has the least |LE| and the
    // grlex-smallest LE among ties.
    const BiPoly& w = gb.elements.front();
    return {N, w.total_degree(), normalized(w), Method::groebner};
}

// Columns of the evaluation map on polynomials of total degree <= d:
// column j holds the coefficients of m_j(x, G_N(x)) mod x^N, monomials in
// ascending grlex.
inline Matrix evaluation_matrix(const UniPoly& G, std::size_t N, std::uint32_t d)
{
    const auto& F = G.field();
    const auto monos = monomials_up_to(d);
    Matrix M(N, monos.size());
    std::vector<UniPoly> gpow{UniPoly::constant(F, F.one())};
    for (std::uint32_t b = 1; b <= d; ++b) gpow.push_back(series_mul_trunc(gpow.back(), G, N));
    for (std::size_t j = 0; j < monos.size(); ++j) {
        const auto& pw = gpow[monos[j].a2];
        for (std::size_t i = monos[j].a1; i < N; ++i) M(i, j) = pw.coeff(i - monos[j].a1);
    }
    return M;
}

// Kernel of the degree <= d evaluation map as polynomials, one per free
// column of the reduced echelon form (ascending).
inline std::vector<BiPoly> evaluation_kernel(const UniPoly& G, std::size_t N, std::uint32_t d)
{
    const auto& F = G.field();
    const auto monos = monomials_up_to(d);
    Matrix M = evaluation_matrix(G, N, d);
    const auto pivots = rref(M, F);
    std::vector<BiPoly> out;
    for (const auto& v : kernel_basis(M, pivots, F)) {
        BiPoly h(F);
        for (std::size_t j = 0; j < v.size(); ++j) h.add_term(monos[j], v[j]);
        out.push_back(std::move(h));
    }
    return out;
}

// E_N from linear algebra alone: h(x, G(x)) mod x^N is linear in the
// coefficients of h, so E_N is the least d whose evaluation map has a
// nontrivial kernel. The witness comes from the first free column.
inline ComplexityResult expansion_complexity_kernel(const SequencePrefix& s, std::size_t N)
{
    if (N == 0) throw invalid_param("N must be positive");
    s.require_length(N);
    if (s.is_zero_prefix(N)) return {N, 0, std::nullopt, Method::kernel};
    const UniPoly G = generating_polynomial(s, N);
    for (std::uint32_t d = 1;; ++d) {
        auto ker = evaluation_kernel(G, N, d);
        if (!ker.empty()) return {N, d, normalized(ker.front()), Method::kernel};
    }
}

inline ComplexityResult expansion_complexity(const SequencePrefix& s, std::size_t N, Engine engine,
                                             bool kernel_oracle = false)
{
    return kernel_oracle ? expansion_complexity_kernel(s, N) : expansion_complexity_gb(s, N, engine);
}

// Bounds on the i-expansion complexity E*_N from the reduced basis:
// lower <= E*_N <= upper, and E*_N <= upper_irred when some basis element is
// irreducible. exact is set only by a completed exhaustive search.
struct IExpansionBounds {
    std::uint32_t lower = 0;
    std::optional<std::uint32_t> upper_irred;
    std::uint32_t upper = 0;
    std::optional<std::uint32_t> exact;
};

inline IExpansionBounds i_expansion_bounds(const GroebnerBasis& gb, std::uint64_t budget)
{
    IExpansionBounds b;
    b.lower = UINT32_MAX;
    for (const auto& e : gb.elements) {
        const std::uint32_t t = e.total_degree();
        b.lower = std::min(b.lower, t);
        b.upper = std::max(b.upper, t);
        if (b.upper_irred && *b.upper_irred <= t) continue;
        try {
            if (is_irreducible(e, budget)) b.upper_irred = t;
        } catch (const budget_exceeded&) {
            // undecided elements simply do not contribute
        }
    }
    return b;
}

inline IExpansionBounds i_expansion_bounds(const SequencePrefix& s, std::size_t N, std::uint64_t budget,
                                           Engine engine = Engine::fglm)
{
    s.require_length(N);
    if (s.is_zero_prefix(N)) throw zero_prefix();
    return i_expansion_bounds(defining_ideal_basis(s, N, engine), budget);
}

struct IExpansionExact {
    std::uint32_t value = 0;
    BiPoly witness;
};

// Exhaustive E*_N: for d = E_N, E_N + 1, ... scan every normalized element of
// the degree <= d kernel (first nonzero coordinate 1 in the kernel basis) for
// an irreducible polynomial of total degree d. Reaching upper_irred ends the
// search with that basis element as witness. Throws budget_exceeded when a
// kernel has more than `budget` elements or a trial division would.
inline IExpansionExact i_expansion_exact(const SequencePrefix& s, std::size_t N, std::uint64_t budget)
{
    s.require_length(N);
    if (s.is_zero_prefix(N)) throw zero_prefix();
    const auto& F = s.field();
    const std::uint32_t p = F.modulus();
    const GroebnerBasis gb = fglm_from_sequence(s, N);
    const IExpansionBounds bounds = i_expansion_bounds(gb, budget);
    const UniPoly G = generating_polynomial(s, N);

    for (std::uint32_t d = bounds.lower;; ++d) {
        for (const auto& e : gb.elements)
            if (e.total_degree() == d && is_irreducible(e, budget)) return {d, e};

        const auto ker = evaluation_kernel(G, N, d);
        if (detail::saturating_pow(p, ker.size()) > budget)
            throw budget_exceeded("kernel of dimension " + std::to_string(ker.size()) + " at degree " +
                                  std::to_string(d));
        std::optional<BiPoly> found;
        for (std::size_t lead = 0; lead < ker.size() && !found; ++lead) {
            const std::size_t rest = ker.size() - lead - 1;
            detail::for_each_vector(p, rest, [&](const std::vector<std::uint32_t>& v) {
                BiPoly h = ker[lead];
                for (std::size_t j = 0; j < rest; ++j)
                    if (v[j] != 0) h += Fp{v[j]} * ker[lead + 1 + j];
                if (h.is_zero() || h.total_degree() != d) return false;
                if (!is_irreducible(h, budget)) return false;
                found = normalized(h);
                return true;
            });
        }
        if (found) return {d, *found};
    }
}

// One row of a complexity profile.
struct ProfileRow {
    std::size_t N = 0;
    std::uint32_t E = 0;
    std::optional<IExpansionBounds> iexp;
    std::size_t L = 0;
    std::map<std::string, bool> bound_checks;
};

enum class IStarMode { none, bounds, exact };

// A named theorem check; returns nullopt when the row lies outside the range
// the check speaks about.
struct NamedCheck {
    std::string name;
    std::function<std::optional<bool>(const ProfileRow&)> check;
};

struct ProfileOptions {
    Engine engine = Engine::fglm;
    bool cross_check = false;
    IStarMode istar = IStarMode::none;
    std::uint64_t budget = 10'000'000;
    std::vector<NamedCheck> checks;
    unsigned threads = std::thread::hardware_concurrency();
};

inline ProfileRow profile_row(const SequencePrefix& s, std::size_t N, const ProfileOptions& opts)
{
    ProfileRow row;
    row.N = N;
    const ComplexityResult r = expansion_complexity_gb(s, N, opts.engine);
    row.E = r.value;
    if (opts.cross_check) {
        const ComplexityResult k = expansion_complexity_kernel(s, N);
        const ComplexityResult o =
            expansion_complexity_gb(s, N, opts.engine == Engine::fglm ? Engine::buchberger : Engine::fglm);
        if (k.value != r.value || o.value != r.value || k.witness != r.witness || o.witness != r.witness)
            throw invariant_violation("engine disagreement at N=" + std::to_string(N));
    }
    if (opts.istar != IStarMode::none) {
        if (r.value == 0) {
            row.iexp = IExpansionBounds{0, std::nullopt, 0, 0};
        } else {
            row.iexp = i_expansion_bounds(defining_ideal_basis(s, N, opts.engine), opts.budget);
            if (opts.istar == IStarMode::exact) {
                try {
                    row.iexp->exact = i_expansion_exact(s, N, opts.budget).value;
                } catch (const budget_exceeded&) {
                    // bounds only
                }
            }
        }
    }
    row.L = linear_complexity(s, N);
    for (const auto& c : opts.checks)
        if (auto v = c.check(row)) row.bound_checks[c.name] = *v;
    return row;
}

// Rows for N = 1..nmax, computed concurrently and returned in order of N.
inline std::vector<ProfileRow> complexity_profile(const SequencePrefix& s, std::size_t nmax,
                                                  const ProfileOptions& opts = {})
{
    s.require_length(nmax);
    std::vector<ProfileRow> rows(nmax);
    detail::parallel_for(nmax, [&](std::size_t i) { rows[i] = profile_row(s, i + 1, opts); }, opts.threads);
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].E < rows[i - 1].E || rows[i].L < rows[i - 1].L)
            throw invariant_violation("profile not monotone at N=" + std::to_string(i + 1));
    return rows;
}

} // namespace expc

#endif
