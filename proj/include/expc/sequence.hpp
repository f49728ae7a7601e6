#ifndef EXPC_SEQUENCE_HPP
#define EXPC_SEQUENCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "expc/error.hpp"
#include "expc/field.hpp"
#include "expc/unipoly.hpp"

namespace expc {

// A finite prefix (s_0, ..., s_{N-1}) of a sequence over F_p.
class SequencePrefix {
public:
    SequencePrefix(const PrimeField& F, std::vector<Fp> s) : F_(F), s_(std::move(s))
    {
        for (auto a : s_)
            if (a.v >= F_.modulus()) throw invalid_param("sequence element not reduced mod p");
    }
    SequencePrefix(const PrimeField& F, std::initializer_list<std::int64_t> s) : F_(F)
    {
        for (auto a : s) s_.push_back(F.from_int(a));
    }

    const PrimeField& field() const { return F_; }
    std::uint32_t p() const { return F_.modulus(); }
    std::size_t size() const { return s_.size(); }
    const std::vector<Fp>& values() const { return s_; }
    Fp operator[](std::size_t i) const { return s_[i]; }

    bool is_zero_prefix(std::size_t n) const
    {
        return std::all_of(s_.begin(), s_.begin() + static_cast<std::ptrdiff_t>(std::min(n, s_.size())),
                           [](Fp a) { return a.is_zero(); });
    }

    SequencePrefix prefix(std::size_t n) const
    {
        require_length(n);
        return SequencePrefix(F_, std::vector<Fp>(s_.begin(), s_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

    void require_length(std::size_t n) const
    {
        if (n > s_.size())
            throw prefix_too_short("need " + std::to_string(n) + " terms, prefix has " +
                                   std::to_string(s_.size()));
    }

    friend bool operator==(const SequencePrefix&, const SequencePrefix&) = default;

private:
    PrimeField F_;
    std::vector<Fp> s_;
};

// G_N(x) = sum_{n<N} s_n x^n
inline UniPoly generating_polynomial(const SequencePrefix& s, std::size_t n)
{
    s.require_length(n);
    return UniPoly(s.field(), std::vector<Fp>(s.values().begin(), s.values().begin() + static_cast<std::ptrdiff_t>(n)));
}

inline UniPoly generating_polynomial(const SequencePrefix& s) { return generating_polynomial(s, s.size()); }

} // namespace expc

#endif
