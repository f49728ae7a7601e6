#ifndef EXPC_BIPOLY_HPP
#define EXPC_BIPOLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "expc/error.hpp"
#include "expc/field.hpp"
#include "expc/unipoly.hpp"

namespace expc {

// Exponent pair of x^a1 * y^a2.
struct Monomial2 {
    std::uint32_t a1 = 0;
    std::uint32_t a2 = 0;

    constexpr std::uint32_t total() const { return a1 + a2; }
    constexpr bool divides(Monomial2 o) const { return a1 <= o.a1 && a2 <= o.a2; }

    friend constexpr bool operator==(Monomial2, Monomial2) = default;
    friend constexpr Monomial2 operator*(Monomial2 a, Monomial2 b) { return {a.a1 + b.a1, a.a2 + b.a2}; }
};

// Requires d.divides(m).
constexpr Monomial2 quotient(Monomial2 m, Monomial2 d) { return {m.a1 - d.a1, m.a2 - d.a2}; }

constexpr Monomial2 lcm(Monomial2 a, Monomial2 b)
{
    return {std::max(a.a1, b.a1), std::max(a.a2, b.a2)};
}

// Graded lexicographic order: total degree first, ties broken by the
// exponent of y.
constexpr std::strong_ordering grlex_cmp(Monomial2 m1, Monomial2 m2)
{
    if (auto c = m1.total() <=> m2.total(); c != 0) return c;
    return m1.a2 <=> m2.a2;
}

struct GrlexGreater {
    constexpr bool operator()(Monomial2 a, Monomial2 b) const { return grlex_cmp(a, b) > 0; }
};

// All monomials of total degree <= d, ascending grlex.
inline std::vector<Monomial2> monomials_up_to(std::uint32_t d)
{
    std::vector<Monomial2> out;
    out.reserve(static_cast<std::size_t>(d + 1) * (d + 2) / 2);
    for (std::uint32_t t = 0; t <= d; ++t)
        for (std::uint32_t b = 0; b <= t; ++b) out.push_back({t - b, b});
    return out;
}

inline std::string to_string(Monomial2 m)
{
    std::string s;
    auto var = [&](char v, std::uint32_t e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += '^' + std::to_string(e);
    };
    var('x', m.a1);
    var('y', m.a2);
    return s.empty() ? "1" : s;
}

struct LeadingData {
    Monomial2 le;   // leading exponent
    Monomial2 lm;   // leading monomial (same exponents, kept for symmetry with LE/LM/LC)
    Fp lc;
};

// Sparse polynomial in F_p[x, y]. Terms are kept grlex-descending with no
// zero coefficients, so the leading term is always the first entry.
class BiPoly {
public:
    using Terms = std::map<Monomial2, Fp, GrlexGreater>;

    explicit BiPoly(const PrimeField& F) : F_(F) {}

    static BiPoly term(const PrimeField& F, Monomial2 m, Fp c)
    {
        BiPoly r(F);
        r.add_term(m, c);
        return r;
    }
    static BiPoly constant(const PrimeField& F, Fp c) { return term(F, {0, 0}, c); }
    static BiPoly x(const PrimeField& F) { return term(F, {1, 0}, F.one()); }
    static BiPoly y(const PrimeField& F) { return term(F, {0, 1}, F.one()); }

    // Embeds f(x) as a polynomial not involving y.
    static BiPoly from_x(const UniPoly& f)
    {
        BiPoly r(f.field());
        auto c = f.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) r.add_term({static_cast<std::uint32_t>(i), 0}, c[i]);
        return r;
    }

    const PrimeField& field() const { return F_; }
    const Terms& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    Fp coeff(Monomial2 m) const
    {
        auto it = t_.find(m);
        return it == t_.end() ? F_.zero() : it->second;
    }

    void add_term(Monomial2 m, Fp c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (inserted) return;
        it->second = F_.add(it->second, c);
        if (it->second.is_zero()) t_.erase(it);
    }

    LeadingData leading_data() const
    {
        if (t_.empty()) throw zero_polynomial("leading data of the zero polynomial");
        const auto& [m, c] = *t_.begin();
        return {m, m, c};
    }
    Monomial2 lm() const { return leading_data().lm; }
    Fp lc() const { return leading_data().lc; }

    std::uint32_t total_degree() const
    {
        if (t_.empty()) throw zero_polynomial("total degree of the zero polynomial");
        return t_.begin()->first.total();
    }
    std::uint32_t degree_x() const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.a1);
        return d;
    }
    std::uint32_t degree_y() const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.a2);
        return d;
    }

    BiPoly& operator+=(const BiPoly& o)
    {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o)
    {
        for (const auto& [m, c] : o.t_) add_term(m, F_.neg(c));
        return *this;
    }
    BiPoly operator-() const
    {
        BiPoly r(F_);
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, F_.neg(c));
        return r;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    // c * m * this
    BiPoly mul_term(Monomial2 m, Fp c) const
    {
        BiPoly r(F_);
        if (c.is_zero()) return r;
        for (const auto& [mm, cc] : t_) r.t_.emplace_hint(r.t_.end(), mm * m, F_.mul(cc, c));
        return r;
    }

    // this -= c * m * o, in place.
    void sub_mul_term(const BiPoly& o, Monomial2 m, Fp c)
    {
        const Fp nc = F_.neg(c);
        for (const auto& [mm, cc] : o.t_) add_term(mm * m, F_.mul(cc, nc));
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        BiPoly r(a.F_);
        for (const auto& [m, c] : b.t_) r += a.mul_term(m, c);
        return r;
    }
    friend BiPoly operator*(Fp s, const BiPoly& a) { return a.mul_term({0, 0}, s); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.F_ == b.F_ && a.t_ == b.t_; }

    // Coefficients of y^0, y^1, ... as polynomials in x.
    std::vector<UniPoly> y_coefficients() const
    {
        if (t_.empty()) return {};
        std::vector<std::vector<Fp>> raw(degree_y() + 1);
        for (const auto& [m, c] : t_) {
            auto& v = raw[m.a2];
            if (v.size() <= m.a1) v.resize(m.a1 + 1, F_.zero());
            v[m.a1] = c;
        }
        std::vector<UniPoly> out;
        out.reserve(raw.size());
        for (auto& v : raw) out.emplace_back(F_, std::move(v));
        return out;
    }

    // Same, with the roles of x and y exchanged.
    std::vector<UniPoly> x_coefficients() const
    {
        if (t_.empty()) return {};
        std::vector<std::vector<Fp>> raw(degree_x() + 1);
        for (const auto& [m, c] : t_) {
            auto& v = raw[m.a1];
            if (v.size() <= m.a2) v.resize(m.a2 + 1, F_.zero());
            v[m.a2] = c;
        }
        std::vector<UniPoly> out;
        out.reserve(raw.size());
        for (auto& v : raw) out.emplace_back(F_, std::move(v));
        return out;
    }

private:
    PrimeField F_;
    Terms t_;
};

// Scales h so that its leading coefficient is 1.
inline BiPoly normalized(const BiPoly& h)
{
    if (h.is_zero()) return h;
    return h.field().inv(h.lc()) * h;
}

inline LeadingData leading_data(const BiPoly& h) { return h.leading_data(); }
inline std::uint32_t total_degree(const BiPoly& h) { return h.total_degree(); }

// Rendering: grlex-descending terms, coefficients in [0, p), e.g. "x^5 + 4*y".
inline std::string to_string(const BiPoly& h)
{
    if (h.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : h.terms()) {
        if (!first) os << " + ";
        first = false;
        if (m == Monomial2{0, 0})
            os << c.v;
        else if (c.v == 1)
            os << to_string(m);
        else
            os << c.v << '*' << to_string(m);
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& h) { return os << to_string(h); }

// h(x, G(x)) mod x^N by Horner's rule in y.
inline UniPoly compose_mod(const BiPoly& h, const UniPoly& G, std::size_t N)
{
    const auto& F = h.field();
    auto cy = h.y_coefficients();
    if (cy.empty()) return UniPoly(F);
    const UniPoly g = truncate(G, N);
    UniPoly r = truncate(cy.back(), N);
    for (std::size_t j = cy.size() - 1; j-- > 0;) r = series_mul_trunc(r, g, N) + truncate(cy[j], N);
    return r;
}

// h(x, y + a*x + b)
inline BiPoly substitute_linear(const BiPoly& h, Fp a, Fp b)
{
    const auto& F = h.field();
    if (h.is_zero()) return h;
    BiPoly lin = BiPoly::y(F);
    lin.add_term({1, 0}, a);
    lin.add_term({0, 0}, b);
    std::vector<BiPoly> powers{BiPoly::constant(F, F.one())};
    const std::uint32_t dy = h.degree_y();
    for (std::uint32_t j = 1; j <= dy; ++j) powers.push_back(powers.back() * lin);
    BiPoly r(F);
    for (const auto& [m, c] : h.terms()) r += powers[m.a2].mul_term({m.a1, 0}, c);
    return r;
}

} // namespace expc

#endif
