#ifndef EXPC_LINEAR_COMPLEXITY_HPP
#define EXPC_LINEAR_COMPLEXITY_HPP

#include <cstddef>
#include <vector>

#include "expc/sequence.hpp"
#include "expc/unipoly.hpp"

namespace expc {

// Shortest linear recurrence s_{n+L} = c_{L-1} s_{n+L-1} + ... + c_0 s_n
// generating the prefix. connection is 1 - c_{L-1} x - ... - c_0 x^L.
struct LinearRecurrence {
    std::size_t length = 0;
    std::vector<Fp> taps; // c_0, ..., c_{L-1}
    UniPoly connection;
};

// Berlekamp-Massey over F_p.
inline LinearRecurrence berlekamp_massey(const SequencePrefix& s)
{
    const auto& F = s.field();
    const std::size_t n = s.size();
    std::vector<Fp> C{F.one()}, B{F.one()};
    std::size_t L = 0, m = 1;
    Fp b = F.one();
    for (std::size_t i = 0; i < n; ++i) {
        Fp d = s[i];
        for (std::size_t j = 1; j <= L && j < C.size(); ++j) d = F.add(d, F.mul(C[j], s[i - j]));
        if (d.is_zero()) {
            ++m;
            continue;
        }
        const Fp coef = F.div(d, b);
        std::vector<Fp> T = C;
        if (C.size() < B.size() + m) C.resize(B.size() + m, F.zero());
        for (std::size_t j = 0; j < B.size(); ++j) C[j + m] = F.sub(C[j + m], F.mul(coef, B[j]));
        if (2 * L <= i) {
            L = i + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            ++m;
        }
    }
    C.resize(L + 1, F.zero());
    LinearRecurrence r{L, std::vector<Fp>(L, F.zero()), UniPoly(F, C)};
    // s_i = -sum_{j=1}^{L} C_j s_{i-j}, so c_{L-j} = -C_j.
    for (std::size_t j = 1; j <= L; ++j) r.taps[L - j] = F.neg(C[j]);
    return r;
}

// L_n: linear complexity of the first n terms.
inline std::size_t linear_complexity(const SequencePrefix& s, std::size_t n)
{
    return berlekamp_massey(s.prefix(n)).length;
}

} // namespace expc

#endif
