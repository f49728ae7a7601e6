#ifndef EXPC_LINALG_HPP
#define EXPC_LINALG_HPP

#include <cstddef>
#include <vector>

#include "expc/field.hpp"

namespace expc {

// Dense row-major matrix over F_p.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Fp> a;

    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Fp& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Fp operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place. Columns are scanned left to right and
// the pivot row is the first row (from the current one down) with a nonzero
// entry. Returns the pivot column of each nonzero row.
inline std::vector<std::size_t> rref(Matrix& m, const PrimeField& F)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
        const Fp inv = F.inv(m(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) = F.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Fp t = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(t, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Kernel basis of a matrix already in reduced row echelon form, one vector
// per free column, in ascending free-column order. Vector for free column f
// has a 1 at f.
inline std::vector<std::vector<Fp>> kernel_basis(const Matrix& reduced, const std::vector<std::size_t>& pivots,
                                                 const PrimeField& F)
{
    std::vector<bool> is_pivot(reduced.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Fp>> out;
    for (std::size_t f = 0; f < reduced.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fp> v(reduced.cols, F.zero());
        v[f] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(reduced(r, f));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace expc

#endif
