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

#include <random>

namespace foliage::testing {

// Small random exact objects for property tests. Deterministic given the seed.
class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    exact::Scalar rational(long bound = 5)
    {
        long d = integer(1, 3);
        return exact::Scalar::fraction(integer(-bound, bound), d);
    }

    exact::Scalar gaussian(long bound = 3)
    {
        if (integer(0, 2) == 0) return exact::Scalar(rational(bound).re(), rational(bound).re());
        return rational(bound);
    }

    exact::Poly poly(std::size_t arity, int degree, int terms, bool complex = false)
    {
        std::vector<exact::Term> t;
        for (int k = 0; k < terms; ++k) {
            exact::Exponents e(arity, 0);
            int budget = static_cast<int>(integer(0, degree));
            for (int j = 0; j < budget; ++j) e[static_cast<std::size_t>(integer(0, static_cast<long>(arity) - 1))]++;
            t.push_back({e, complex ? gaussian() : rational()});
        }
        return exact::Poly::from_terms(arity, std::move(t));
    }

    exact::Poly nonzero_poly(std::size_t arity, int degree, int terms, bool complex = false)
    {
        while (true) {
            auto p = poly(arity, degree, terms, complex);
            if (!p.is_zero()) return p;
        }
    }

    exact::RatFunc ratfunc(std::size_t arity, int degree = 2, int terms = 3, bool complex = false)
    {
        auto n = poly(arity, degree, terms, complex);
        if (integer(0, 2) == 0) return exact::RatFunc(n);
        return exact::RatFunc(n, nonzero_poly(arity, degree, 2, complex));
    }

    std::mt19937_64 &engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace foliage::testing
