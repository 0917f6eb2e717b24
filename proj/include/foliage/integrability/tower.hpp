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

#include "foliage/calculus/forms.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace foliage::integrability {

using calculus::KForm;
using exact::Exponents;
using exact::RatFunc;
using exact::Scalar;

/// Truncated power series in local coordinates u_i = x_i - base_i over the
/// first nvars indeterminates; coefficients are functions of the parameters.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(std::size_t nvars, std::size_t arity, int order);

    // Taylor expansion at base; throws DomainError on a pole there.
    static TruncSeries expand(const RatFunc &f, std::span<const Scalar> base, int order);

    std::size_t nvars() const { return nvars_; }
    std::size_t arity() const { return arity_; }
    int order() const { return order_; }
    const std::map<Exponents, RatFunc> &terms() const { return terms_; }
    RatFunc coeff(const Exponents &e) const;
    void set(const Exponents &e, const RatFunc &c);
    bool is_zero() const { return terms_.empty(); }

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
    friend bool operator==(const TruncSeries &a, const TruncSeries &b);

    TruncSeries scaled(const RatFunc &c) const;
    // Order drops by one.
    TruncSeries derivative(std::size_t i) const;
    TruncSeries truncated(int order) const;
    TruncSeries inverse() const;

private:
    std::size_t nvars_ = 0, arity_ = 0;
    int order_ = 0;
    std::map<Exponents, RatFunc> terms_;
};

// All exponent vectors of total degree d in n variables, in a fixed order.
std::vector<Exponents> exponents_of_degree(std::size_t n, int d);

enum class TowerKind { Darboux, Liouville, Riccati };

struct TowerInput {
    std::optional<RatFunc> F; // Darboux kind: d(F^(1/k) omega) = 0
    int k = 1;
    std::optional<KForm> alpha, beta;
    // Initial values at the basepoint. The Darboux branch R = F^(1/k) starts at
    // F(base) when k = 1 and at branch (default 1) otherwise.
    Scalar G0{0}, F0{1}, H0{0};
    std::optional<Scalar> branch;
};

struct TowerSeries {
    std::vector<Scalar> basepoint;
    int order = 0;
    std::optional<TruncSeries> G;
    TruncSeries F, H;
    int mixed_partials_checked = 0; // orders at which every partial agreed
    bool verified = false;          // dH ^ omega vanishes through the order
};

TowerSeries tower_series(TowerKind kind, const KForm &omega, const TowerInput &input, std::vector<Scalar> basepoint,
                         int order);

} // namespace foliage::integrability
