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

#include "foliage/exact/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace foliage::exact {

using Exponents = std::vector<int>;

int total_degree(const Exponents &e);

// Graded lexicographic comparison: total degree first, then the earlier
// variable wins. Returns -1, 0, 1.
int grlex_compare(const Exponents &a, const Exponents &b);

struct Term {
    Exponents exps;
    Scalar coef;
};

/// Sparse multivariate polynomial over Q(i). Terms are kept sorted in
/// decreasing graded-lex order with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t arity) : arity_(arity) {}

    static Poly constant(std::size_t arity, const Scalar &c);
    static Poly variable(std::size_t arity, std::size_t index);
    static Poly monomial(Exponents exps, const Scalar &c);
    static Poly from_terms(std::size_t arity, std::vector<Term> terms);

    std::size_t arity() const { return arity_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::optional<Scalar> as_constant() const;
    Scalar constant_term() const;
    Scalar coefficient(const Exponents &e) const;

    const Term &leading_term() const { return terms_.front(); }
    const Scalar &leading_coefficient() const { return terms_.front().coef; }

    int total_degree() const;
    int degree_in(std::size_t v) const;
    int low_degree() const; // smallest total degree of a term
    bool depends_on(std::size_t v) const;
    bool has_real_coefficients() const;

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const Scalar &c);

    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Scalar &c) { return a *= c; }
    friend Poly operator*(const Scalar &c, Poly a) { return a *= c; }
    friend bool operator==(const Poly &a, const Poly &b);
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Poly pow(unsigned e) const;
    Poly derivative(std::size_t v) const;
    Poly conj() const;
    Poly monic() const;

    // Homogeneous part of total degree d.
    Poly homogeneous_part(int d) const;
    // Part of degree <= d.
    Poly truncate(int d) const;

    Scalar evaluate(std::span<const Scalar> point) const;
    Poly substitute(std::size_t v, const Poly &value) const;
    // Simultaneous substitution of every variable; images share a common arity.
    Poly compose(std::span<const Poly> images) const;
    // Same polynomial seen in a space with a different number of variables;
    // map[i] is the new index of variable i.
    Poly remap(std::size_t new_arity, std::span<const std::size_t> map) const;

    // Coefficients with respect to variable v, index = power of v.
    std::vector<Poly> coefficients_in(std::size_t v) const;
    static Poly from_coefficients_in(std::size_t arity, std::size_t v, const std::vector<Poly> &c);
    Poly leading_coefficient_in(std::size_t v) const;

    std::string str() const;

private:
    void normalize();

    std::size_t arity_ = 0;
    std::vector<Term> terms_;
};

// Exact quotient a / b, or nothing if b does not divide a.
std::optional<Poly> divide_exact(const Poly &a, const Poly &b);
Poly divide_or_throw(const Poly &a, const Poly &b);

// Pseudo-remainder of a by b seen as polynomials in v.
Poly pseudo_remainder(const Poly &a, const Poly &b, std::size_t v);

// Monic gcd (leading coefficient one under graded lex); gcd(0, 0) = 0.
Poly gcd(const Poly &a, const Poly &b);
Poly content_in(const Poly &a, std::size_t v);
Poly squarefree_part(const Poly &a);

// Univariate division with remainder in variable v; requires the leading
// coefficient of b in v to be a constant.
std::pair<Poly, Poly> divide_univariate(const Poly &a, const Poly &b, std::size_t v);

Poly resultant(const Poly &a, const Poly &b, std::size_t v);

// Real and imaginary coefficient parts: p = re + i*im.
Poly real_part(const Poly &p);
Poly imag_part(const Poly &p);

} // namespace foliage::exact
