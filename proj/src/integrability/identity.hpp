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

#include "foliage/exact/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace foliage::integrability::detail {

using exact::LinearSolution;
using exact::Poly;
using exact::Scalar;

// Constant unknowns u_j with sum u_j cols[j] = rhs as a polynomial identity
// in every indeterminate.
inline std::optional<LinearSolution<Scalar>> solve_identity(const std::vector<Poly> &cols, const Poly &rhs)
{
    std::map<exact::Exponents, std::size_t> rows;
    auto row_of = [&](const exact::Exponents &e) {
        auto [it, fresh] = rows.emplace(e, rows.size());
        return it->second;
    };
    for (const auto &c : cols)
        for (const auto &t : c.terms()) row_of(t.exps);
    for (const auto &t : rhs.terms()) row_of(t.exps);
    exact::Matrix<Scalar> a(rows.size(), std::vector<Scalar>(cols.size()));
    std::vector<Scalar> b(rows.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto &t : cols[j].terms()) a[rows[t.exps]][j] = t.coef;
    for (const auto &t : rhs.terms()) b[rows[t.exps]] = t.coef;
    return exact::solve_linear(std::move(a), std::move(b), cols.size(), Scalar(0), Scalar(1));
}

// The solution whose free unknown j takes the value free_value(column).
template <class Fn>
std::vector<Scalar> choose(const LinearSolution<Scalar> &sol, Fn free_value)
{
    std::vector<Scalar> u = sol.particular;
    for (std::size_t j = 0; j < sol.kernel.size(); ++j) {
        Scalar v = free_value(sol.free_columns[j]);
        if (v.is_zero()) continue;
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += v * sol.kernel[j][i];
    }
    return u;
}

// Monomials x^a y^b (first two indeterminates) of total degree in [lo, hi].
inline std::vector<Poly> plane_monomials(std::size_t arity, int lo, int hi)
{
    std::vector<Poly> out;
    for (int d = hi; d >= lo; --d)
        for (int a = d; a >= 0; --a) {
            exact::Exponents e(arity, 0);
            e[0] = a;
            e[1] = d - a;
            out.push_back(Poly::monomial(e, Scalar(1)));
        }
    return out;
}

} // namespace foliage::integrability::detail
