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

#include "foliage/exact/ratfunc.hpp"

#include <vector>

namespace foliage::exact {

/// Truncated power series in one variable, sum_{k<=N} c_k v^k. The
/// coefficients live in the full indeterminate space but must not involve v.
class Series1 {
public:
    Series1(std::size_t arity, std::size_t var, int order);
    Series1(std::size_t var, std::vector<RatFunc> coeffs);

    static Series1 variable(std::size_t arity, std::size_t var, int order);
    static Series1 constant(std::size_t arity, std::size_t var, int order, const RatFunc &c);
    // Taylor expansion at v = 0; throws when the denominator vanishes at 0.
    static Series1 expand(const RatFunc &f, std::size_t var, int order);

    std::size_t var() const { return var_; }
    std::size_t arity() const { return arity_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RatFunc &operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<RatFunc> &coefficients() const { return coeffs_; }
    void set(int k, RatFunc c);

    bool is_zero() const;
    int valuation() const; // -1 for the zero series

    Series1 operator-() const;
    Series1 &operator+=(const Series1 &o);
    Series1 &operator-=(const Series1 &o);
    friend Series1 operator+(Series1 a, const Series1 &b) { return a += b; }
    friend Series1 operator-(Series1 a, const Series1 &b) { return a -= b; }
    friend Series1 operator*(const Series1 &a, const Series1 &b);
    friend Series1 operator/(const Series1 &a, const Series1 &b);
    friend bool operator==(const Series1 &a, const Series1 &b);
    friend bool operator!=(const Series1 &a, const Series1 &b) { return !(a == b); }

    Series1 scaled(const RatFunc &c) const;
    Series1 truncate(int order) const;
    Series1 derivative() const; // order drops by one
    Series1 reciprocal() const; // requires a nonzero constant term

    // The truncated polynomial sum c_k v^k.
    RatFunc to_ratfunc() const;

private:
    std::size_t arity_;
    std::size_t var_;
    std::vector<RatFunc> coeffs_;
};

// Truncation of f∘g to order N; g must have zero constant term.
Series1 series_compose(const Series1 &f, const Series1 &g, int order);
// Compositional inverse; requires f(0) = 0 and f'(0) != 0.
Series1 series_invert(const Series1 &f, int order);

} // namespace foliage::exact
