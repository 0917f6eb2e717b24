// Copyright 2026 The foliage authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "foliage/exact/poly.hpp"
#include "foliage/exact/ratfunc.hpp"

#include <optional>
#include <vector>

namespace foliage::exact {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Solution set of a linear system: particular + span(kernel). The
/// particular solution has every free variable set to zero; kernel[j] has a
/// one at free_columns[j].
template <class F>
struct LinearSolution {
    std::vector<F> particular;
    std::vector<std::vector<F>> kernel;
    std::vector<std::size_t> free_columns;
};

inline std::size_t pivot_cost(const Scalar &) { return 0; }
inline std::size_t pivot_cost(const RatFunc &r)
{
    if (r.is_constant()) return 0;
    return r.num().size() + r.den().size();
}

// Gauss-Jordan elimination over a field. Returns nothing when inconsistent.
template <class F>
std::optional<LinearSolution<F>> solve_linear(Matrix<F> a, std::vector<F> b, std::size_t ncols, const F &zero,
                                              const F &one)
{
    std::size_t nrows = a.size();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t best = nrows, best_cost = 0;
        for (std::size_t r = row; r < nrows; ++r) {
            if (a[r][col].is_zero()) continue;
            std::size_t c = pivot_cost(a[r][col]);
            if (best == nrows || c < best_cost) {
                best = r;
                best_cost = c;
                if (c == 0) break;
            }
        }
        if (best == nrows) continue;
        std::swap(a[row], a[best]);
        std::swap(b[row], b[best]);
        F inv = one / a[row][col];
        for (std::size_t j = col; j < ncols; ++j)
            if (!a[row][j].is_zero()) a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            F factor = a[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (!a[row][j].is_zero()) a[r][j] = a[r][j] - factor * a[row][j];
            if (!b[row].is_zero()) b[r] = b[r] - factor * b[row];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r)
        if (!b[r].is_zero()) return std::nullopt;

    LinearSolution<F> sol;
    sol.particular.assign(ncols, zero);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        is_pivot[pivots[k]] = true;
        sol.particular[pivots[k]] = b[k];
    }
    for (std::size_t col = 0; col < ncols; ++col) {
        if (is_pivot[col]) continue;
        std::vector<F> v(ncols, zero);
        v[col] = one;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (!a[k][col].is_zero()) v[pivots[k]] = zero - a[k][col];
        sol.kernel.push_back(std::move(v));
        sol.free_columns.push_back(col);
    }
    return sol;
}

/// Fraction-free row echelon form of a polynomial matrix (Bareiss). The
/// matrix is reduced in place; columns >= ncols are carried along (augmented
/// part) but never used as pivots.
struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    Poly last_pivot; // product-like determinant of the pivot minor (up to sign)
};

Echelon bareiss_echelon(Matrix<Poly> &m, std::size_t ncols, std::size_t arity);

} // namespace foliage::exact
