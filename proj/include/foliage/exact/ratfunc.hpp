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

#include <optional>
#include <span>
#include <vector>

namespace foliage::exact {

/// Reduced fraction num/den over Q(i). The denominator is monic under the
/// graded-lex order and coprime to the numerator; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(0), den_(Poly::constant(0, Scalar(1))) {}
    explicit RatFunc(std::size_t arity) : num_(arity), den_(Poly::constant(arity, Scalar(1))) {}
    RatFunc(Poly num);
    RatFunc(Poly num, Poly den);

    static RatFunc constant(std::size_t arity, const Scalar &c);
    static RatFunc variable(std::size_t arity, std::size_t index);

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }
    std::size_t arity() const { return num_.arity(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    std::optional<Scalar> as_constant() const;
    bool depends_on(std::size_t v) const { return num_.depends_on(v) || den_.depends_on(v); }

    RatFunc operator-() const;
    RatFunc &operator+=(const RatFunc &o);
    RatFunc &operator-=(const RatFunc &o);
    RatFunc &operator*=(const RatFunc &o);
    RatFunc &operator/=(const RatFunc &o);

    friend RatFunc operator+(RatFunc a, const RatFunc &b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc &b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc &b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc &b) { return a /= b; }
    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    RatFunc scaled(const Scalar &c) const;
    RatFunc inverse() const;
    RatFunc pow(long e) const;
    RatFunc derivative(std::size_t v) const;
    RatFunc conj() const;

    // Simultaneous substitution of every variable.
    RatFunc compose(std::span<const RatFunc> images) const;
    RatFunc substitute(std::size_t v, const RatFunc &value) const;
    RatFunc remap(std::size_t new_arity, std::span<const std::size_t> map) const;
    // Value at a point; throws if the denominator vanishes there.
    Scalar evaluate(std::span<const Scalar> point) const;

    std::string str() const;

private:
    struct Raw {};
    RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    Poly num_;
    Poly den_;
};

RatFunc operator*(const RatFunc &a, const Scalar &c);

} // namespace foliage::exact
