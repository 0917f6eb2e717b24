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

#include "foliage/exact/linalg.hpp"

namespace foliage::exact {

Echelon bareiss_echelon(Matrix<Poly> &m, std::size_t ncols, std::size_t arity)
{
    Echelon e;
    std::size_t nrows = m.size();
    std::size_t width = nrows ? m[0].size() : 0;
    Poly prev = Poly::constant(arity, Scalar(1));
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t best = nrows;
        for (std::size_t r = row; r < nrows; ++r) {
            if (m[r][col].is_zero()) continue;
            if (best == nrows || m[r][col].total_degree() < m[best][col].total_degree() ||
                (m[r][col].total_degree() == m[best][col].total_degree() && m[r][col].size() < m[best][col].size()))
                best = r;
        }
        if (best == nrows) continue;
        std::swap(m[row], m[best]);
        const Poly piv = m[row][col];
        for (std::size_t r = row + 1; r < nrows; ++r) {
            for (std::size_t j = 0; j < width; ++j) {
                if (j == col) continue;
                Poly v = m[r][j] * piv - m[r][col] * m[row][j];
                m[r][j] = prev.is_one() ? v : divide_or_throw(v, prev);
            }
            m[r][col] = Poly(arity);
        }
        prev = piv;
        e.pivot_columns.push_back(col);
        ++row;
    }
    e.rank = row;
    e.last_pivot = prev;
    return e;
}

} // namespace foliage::exact
