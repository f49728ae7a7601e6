#ifndef EXPC_UNIPOLY_HPP
#define EXPC_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "expc/error.hpp"
#include "expc/field.hpp"

namespace expc {

// Degree of a univariate polynomial. The zero polynomial has no degree
// (conventionally -infinity); it is represented by an empty optional so that
// max-of-degrees computations can never mistake it for degree -1.
using Degree = std::optional<std::size_t>;

// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
class UniPoly {
public:
    explicit UniPoly(const PrimeField& F) : F_(F) {}

    UniPoly(const PrimeField& F, std::vector<Fp> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }

    // Coefficients given as integers, reduced mod p.
    UniPoly(const PrimeField& F, std::initializer_list<std::int64_t> coeffs) : F_(F)
    {
        c_.reserve(coeffs.size());
        for (auto a : coeffs) c_.push_back(F.from_int(a));
        trim();
    }

    static UniPoly monomial(const PrimeField& F, Fp c, std::size_t n)
    {
        if (c.is_zero()) return UniPoly(F);
        std::vector<Fp> v(n + 1, F.zero());
        v[n] = c;
        return UniPoly(F, std::move(v));
    }
    static UniPoly constant(const PrimeField& F, Fp c) { return monomial(F, c, 0); }

    const PrimeField& field() const { return F_; }
    std::span<const Fp> coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }

    Degree degree() const
    {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    Fp coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_.zero(); }
    Fp leading() const { return c_.empty() ? F_.zero() : c_.back(); }

    // Index of the lowest nonzero coefficient (x-adic valuation).
    std::optional<std::size_t> valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    Fp operator()(Fp x) const
    {
        Fp acc = F_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F_.add(F_.mul(acc, x), *it);
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    UniPoly operator-() const
    {
        UniPoly r = *this;
        for (auto& a : r.c_) a = F_.neg(a);
        return r;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        const auto& F = a.F_;
        if (a.is_zero() || b.is_zero()) return UniPoly(F);
        std::vector<Fp> r(a.c_.size() + b.c_.size() - 1, F.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
        }
        return UniPoly(F, std::move(r));
    }

    friend UniPoly operator*(Fp s, const UniPoly& a)
    {
        UniPoly r = a;
        for (auto& c : r.c_) c = a.F_.mul(s, c);
        r.trim();
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.F_ == b.F_ && a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    PrimeField F_;
    std::vector<Fp> c_;
};

// f mod x^n
inline UniPoly truncate(const UniPoly& f, std::size_t n)
{
    auto c = f.coeffs();
    if (c.size() <= n) return f;
    return UniPoly(f.field(), std::vector<Fp>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)));
}

// x^k * f
inline UniPoly shift(const UniPoly& f, std::size_t k)
{
    if (f.is_zero()) return f;
    std::vector<Fp> v(k, f.field().zero());
    v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
    return UniPoly(f.field(), std::move(v));
}

// (f * g) mod x^n, computing only the retained coefficients.
inline UniPoly series_mul_trunc(const UniPoly& f, const UniPoly& g, std::size_t n)
{
    const auto& F = f.field();
    if (f.is_zero() || g.is_zero() || n == 0) return UniPoly(F);
    auto a = f.coeffs();
    auto b = g.coeffs();
    std::size_t len = std::min(n, a.size() + b.size() - 1);
    std::vector<Fp> r(len, F.zero());
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return UniPoly(F, std::move(r));
}

inline UniPoly pow(const UniPoly& f, std::uint64_t e)
{
    UniPoly r = UniPoly::constant(f.field(), f.field().one());
    UniPoly b = f;
    while (e != 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e != 0) b = b * b;
    }
    return r;
}

// Hasse derivative: D^(r) x^n = C(n, r) x^(n-r), extended linearly.
inline UniPoly hasse_derivative(const UniPoly& f, std::size_t r)
{
    const auto& F = f.field();
    auto c = f.coeffs();
    if (c.size() <= r) return UniPoly(F);
    std::vector<Fp> out(c.size() - r, F.zero());
    for (std::size_t n = r; n < c.size(); ++n)
        if (!c[n].is_zero()) out[n - r] = F.mul(c[n], binom_mod_p(n, r, F));
    return UniPoly(F, std::move(out));
}

inline UniPoly derivative(const UniPoly& f) { return hasse_derivative(f, 1); }

inline UniPoly make_monic(const UniPoly& f)
{
    if (f.is_zero()) return f;
    return f.field().inv(f.leading()) * f;
}

// Euclidean division f = q*g + r with deg r < deg g.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g)
{
    const auto& F = f.field();
    if (g.is_zero()) throw zero_polynomial("division by the zero polynomial");
    std::vector<Fp> r(f.coeffs().begin(), f.coeffs().end());
    const auto gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    if (r.size() < gc.size()) return {UniPoly(F), f};
    std::vector<Fp> q(r.size() - dg, F.zero());
    const Fp lead_inv = F.inv(g.leading());
    for (std::size_t i = r.size(); i-- > dg;) {
        if (r[i].is_zero()) continue;
        Fp t = F.mul(r[i], lead_inv);
        q[i - dg] = t;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = F.sub(r[i - dg + j], F.mul(t, gc[j]));
    }
    r.resize(dg);
    return {UniPoly(F, std::move(q)), UniPoly(F, std::move(r))};
}

inline UniPoly operator/(const UniPoly& f, const UniPoly& g) { return divmod(f, g).first; }
inline UniPoly operator%(const UniPoly& f, const UniPoly& g) { return divmod(f, g).second; }

// Monic gcd. gcd(f, 0) is f made monic.
inline UniPoly uni_gcd(UniPoly a, UniPoly b)
{
    if (a.is_zero() && b.is_zero()) throw invalid_param("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// f must have zero derivative, i.e. only exponents divisible by p. Over F_p
// the Frobenius map fixes every scalar, so the p-th root just compresses the
// exponents.
inline UniPoly pth_root(const UniPoly& f)
{
    const auto& F = f.field();
    const std::size_t p = F.modulus();
    auto c = f.coeffs();
    std::vector<Fp> out;
    for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
    return UniPoly(F, std::move(out));
}

// Radical of f: the monic product of its distinct irreducible factors.
// f / gcd(f, f') alone drops factors whose multiplicity is divisible by p;
// those are recovered from the p-th root of what remains.
inline UniPoly squarefree_part(const UniPoly& f)
{
    const auto& F = f.field();
    if (f.is_zero()) throw zero_polynomial("squarefree part of the zero polynomial");
    if (*f.degree() == 0) return UniPoly::constant(F, F.one());
    UniPoly d = derivative(f);
    if (d.is_zero()) return squarefree_part(pth_root(f));
    UniPoly u = uni_gcd(f, d);
    UniPoly w = make_monic(f / u);
    UniPoly v = u;
    for (UniPoly g = uni_gcd(v, w); *g.degree() > 0; g = uni_gcd(v, w)) v = v / g;
    if (*v.degree() == 0) return w;
    return make_monic(w * squarefree_part(pth_root(make_monic(v))));
}

// a^e mod m
inline UniPoly powmod(UniPoly a, std::uint64_t e, const UniPoly& m)
{
    UniPoly r = UniPoly::constant(m.field(), m.field().one()) % m;
    a = a % m;
    while (e != 0) {
        if (e & 1) r = (r * a) % m;
        e >>= 1;
        if (e != 0) a = (a * a) % m;
    }
    return r;
}

// Ben-Or: f of degree n is irreducible iff gcd(x^(p^i) - x, f) = 1 for all
// 1 <= i <= n/2.
inline bool is_irreducible_univariate(const UniPoly& f)
{
    const auto& F = f.field();
    if (f.is_zero()) throw zero_polynomial();
    const std::size_t n = *f.degree();
    if (n == 0) return false;
    if (n == 1) return true;
    const UniPoly x = UniPoly::monomial(F, F.one(), 1);
    UniPoly xp = x % f;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        xp = powmod(xp, F.modulus(), f);
        UniPoly g = uni_gcd(f, xp - x);
        if (*g.degree() > 0) return false;
    }
    return true;
}

} // namespace expc

#endif
