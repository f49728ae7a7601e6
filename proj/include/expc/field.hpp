#ifndef EXPC_FIELD_HPP
#define EXPC_FIELD_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "expc/error.hpp"

namespace expc {

// An element of F_p. The value is always the canonical representative in
// [0, p); the modulus lives in the PrimeField that produced it.
struct Fp {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Fp, Fp) = default;
    friend constexpr auto operator<=>(Fp, Fp) = default;
    constexpr bool is_zero() const { return v == 0; }
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v; }

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic context for F_p, p prime and below 2^31. Products are taken in
// 64 bits and reduced immediately.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p))
    {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw invalid_param("modulus must be a prime below 2^31, got " + std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }

    Fp zero() const { return Fp{0}; }
    Fp one() const { return Fp{1}; }

    Fp from_int(std::int64_t a) const
    {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return Fp{static_cast<std::uint32_t>(r)};
    }
    Fp from_uint(std::uint64_t a) const { return Fp{static_cast<std::uint32_t>(a % p_)}; }

    Fp add(Fp a, Fp b) const
    {
        std::uint32_t s = a.v + b.v;
        return Fp{s >= p_ ? s - p_ : s};
    }
    Fp sub(Fp a, Fp b) const { return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
    Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
    Fp mul(Fp a, Fp b) const
    {
        return Fp{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
    }

    // Extended Euclid; throws zero_inverse for a = 0.
    Fp inv(Fp a) const
    {
        if (a.v == 0) throw zero_inverse();
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a.v;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return from_int(t);
    }

    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

    Fp pow(Fp a, std::uint64_t e) const
    {
        Fp r = one();
        while (e != 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

// C(n, r) mod p by Lucas' theorem: the product of C(n_i, r_i) over the
// base-p digits of n and r.
inline Fp binom_mod_p(std::uint64_t n, std::uint64_t r, const PrimeField& F)
{
    if (r > n) return F.zero();
    const std::uint64_t p = F.modulus();
    Fp acc = F.one();
    while (n != 0 || r != 0) {
        std::uint64_t ni = n % p, ri = r % p;
        if (ri > ni) return F.zero();
        std::uint64_t k = ri < ni - ri ? ri : ni - ri;
        Fp num = F.one(), den = F.one();
        for (std::uint64_t j = 0; j < k; ++j) {
            num = F.mul(num, F.from_uint(ni - j));
            den = F.mul(den, F.from_uint(j + 1));
        }
        acc = F.mul(acc, F.div(num, den));
        n /= p;
        r /= p;
    }
    return acc;
}

} // namespace expc

#endif
