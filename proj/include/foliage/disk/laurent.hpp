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

#include "foliage/exact/series.hpp"

#include <limits>
#include <vector>

namespace foliage::disk {

using exact::RatFunc;
using exact::Series1;

/// Truncated Laurent series sum_{e < prec} c_e x^e with e >= low. Only the
/// coefficients below prec are known; prec = kExact marks exact data.
class Laurent {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    Laurent(std::size_t arity, int low, int prec);
    static Laurent from_series(const Series1 &s);
    // Exact Laurent polynomial from a RatFunc whose denominator is a power of x.
    static Laurent monomial(std::size_t arity, int exponent, const RatFunc &c);

    std::size_t arity() const { return arity_; }
    int low() const { return low_; }
    int prec() const { return prec_; }
    RatFunc coeff(int e) const;
    void add_to(int e, const RatFunc &c);

    // First exponent with a nonzero known coefficient, or prec when none.
    int valuation() const;

    Laurent operator-() const;
    friend Laurent operator+(const Laurent &a, const Laurent &b);
    friend Laurent operator-(const Laurent &a, const Laurent &b) { return a + (-b); }
    friend Laurent operator*(const Laurent &a, const Laurent &b);
    friend Laurent operator/(const Laurent &a, const Laurent &b);
    Laurent derivative() const;

    // Substitute a series germ into a coefficient in the series variable.
    static Laurent compose(const RatFunc &h, std::size_t var, const Laurent &f);

private:
    void cap();

    std::size_t arity_;
    int low_;
    int prec_;
    std::vector<RatFunc> c_; // c_[e - low_] for low_ <= e < min(prec, stored)
};

} // namespace foliage::disk
