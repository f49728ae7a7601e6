#ifndef EXPC_GENERATORS_HPP
#define EXPC_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "expc/error.hpp"
#include "expc/field.hpp"
#include "expc/sequence.hpp"

namespace expc {

// s_n = (a n - b)^{-1} mod p, and 0 where a n = b.
inline SequencePrefix gen_inversive(std::uint32_t p, std::int64_t a, std::int64_t b, std::size_t len)
{
    if (p == 2) throw invalid_param("inversive generator needs p >= 3");
    const PrimeField F(p);
    const Fp fa = F.from_int(a), fb = F.from_int(b);
    if (fa.is_zero()) throw invalid_param("inversive generator needs a != 0 mod p");
    std::vector<Fp> s(len);
    for (std::size_t n = 0; n < len; ++n) {
        const Fp t = F.sub(F.mul(fa, F.from_uint(n)), fb);
        s[n] = t.is_zero() ? F.zero() : F.inv(t);
    }
    return SequencePrefix(F, std::move(s));
}

// a_n = C(n + k, k) mod p, generating function (1 - x)^(-1-k).
inline SequencePrefix gen_binomial(std::uint32_t p, std::uint64_t k, std::size_t len)
{
    const PrimeField F(p);
    std::vector<Fp> s(len);
    for (std::size_t n = 0; n < len; ++n) s[n] = binom_mod_p(n + k, k, F);
    return SequencePrefix(F, std::move(s));
}

// Counter-dependent recursion s_n = n s_{n-1} + 1.
inline SequencePrefix gen_sw(std::uint32_t p, std::int64_t s0, std::size_t len)
{
    if (len == 0) throw invalid_param("length must be positive");
    const PrimeField F(p);
    std::vector<Fp> s(len);
    s[0] = F.from_int(s0);
    for (std::size_t n = 1; n < len; ++n) s[n] = F.add(F.mul(F.from_uint(n), s[n - 1]), F.one());
    return SequencePrefix(F, std::move(s));
}

// s_{n+L} = c_{L-1} s_{n+L-1} + ... + c_0 s_n with taps = (c_0, ..., c_{L-1}).
inline SequencePrefix gen_lfsr(std::uint32_t p, const std::vector<std::int64_t>& taps,
                               const std::vector<std::int64_t>& init, std::size_t len)
{
    if (taps.empty() || taps.size() != init.size())
        throw invalid_param("lfsr needs nonempty taps and an init of the same length");
    const PrimeField F(p);
    const std::size_t L = taps.size();
    std::vector<Fp> c, s;
    for (auto t : taps) c.push_back(F.from_int(t));
    for (auto v : init) s.push_back(F.from_int(v));
    while (s.size() < len) {
        const std::size_t n = s.size() - L;
        Fp next = F.zero();
        for (std::size_t i = 0; i < L; ++i) next = F.add(next, F.mul(c[i], s[n + i]));
        s.push_back(next);
    }
    s.resize(len);
    return SequencePrefix(F, std::move(s));
}

// Counter-based splitmix64 stream: word k is mix(seed + k * golden).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection of the top partial block.
    std::uint64_t uniform(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
        for (;;) {
            const std::uint64_t z = next();
            if (z <= limit) return z % n;
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

inline SequencePrefix gen_random(std::uint32_t p, std::size_t len, std::uint64_t seed)
{
    const PrimeField F(p);
    CounterRng rng(seed);
    std::vector<Fp> s(len);
    for (auto& v : s) v = Fp{static_cast<std::uint32_t>(rng.uniform(p))};
    return SequencePrefix(F, std::move(s));
}

struct InversiveKind {
    std::int64_t a = 1;
    std::int64_t b = 0;
};
struct BinomialKind {
    std::uint64_t k = 0;
};
struct SwKind {
    std::int64_t s0 = 0;
};
struct LfsrKind {
    std::vector<std::int64_t> taps;
    std::vector<std::int64_t> init;
};
struct RandomKind {
    std::uint64_t seed = 0;
};

struct GeneratorSpec {
    std::variant<InversiveKind, BinomialKind, SwKind, LfsrKind, RandomKind> kind;
    std::uint32_t p = 2;
    std::size_t len = 0;
};

inline SequencePrefix generate(const GeneratorSpec& g)
{
    struct Visitor {
        const GeneratorSpec& g;
        SequencePrefix operator()(const InversiveKind& k) const { return gen_inversive(g.p, k.a, k.b, g.len); }
        SequencePrefix operator()(const BinomialKind& k) const { return gen_binomial(g.p, k.k, g.len); }
        SequencePrefix operator()(const SwKind& k) const { return gen_sw(g.p, k.s0, g.len); }
        SequencePrefix operator()(const LfsrKind& k) const { return gen_lfsr(g.p, k.taps, k.init, g.len); }
        SequencePrefix operator()(const RandomKind& k) const { return gen_random(g.p, g.len, k.seed); }
    };
    return std::visit(Visitor{g}, g.kind);
}

} // namespace expc

#endif
