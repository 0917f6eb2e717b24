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

#include <map>
#include <vector>

namespace foliage::calculus {

using exact::RatFunc;

// Strictly increasing tuple of geometric variable indices.
using Index = std::vector<std::size_t>;

/// Vector field sum X_i d/dx_i over the first dim indeterminates.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(std::vector<RatFunc> components);

    std::size_t dim() const { return comps_.size(); }
    std::size_t arity() const { return comps_.empty() ? 0 : comps_[0].arity(); }
    const RatFunc &operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<RatFunc> &components() const { return comps_; }

    // X(f) = sum X_i df/dx_i
    RatFunc apply(const RatFunc &f) const;

    friend bool operator==(const VectorField &a, const VectorField &b) { return a.comps_ == b.comps_; }

private:
    std::vector<RatFunc> comps_;
};

/// Differential k-form with rational coefficients, stored sparsely. The
/// zero form keeps its degree.
class KForm {
public:
    KForm() = default;
    KForm(std::size_t dim, int degree, std::size_t arity);

    static KForm function(const RatFunc &f, std::size_t dim);
    static KForm one_form(const std::vector<RatFunc> &components);
    static KForm basis(std::size_t dim, std::size_t i, std::size_t arity);

    std::size_t dim() const { return dim_; }
    int degree() const { return degree_; }
    std::size_t arity() const { return arity_; }
    const std::map<Index, RatFunc> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatFunc component(const Index &i) const;
    // Component of a 1-form along dx_i.
    RatFunc operator[](std::size_t i) const { return component({i}); }
    // Coefficient of a 0-form.
    RatFunc value() const;
    void set(const Index &i, const RatFunc &c);

    KForm operator-() const;
    KForm &operator+=(const KForm &o);
    KForm &operator-=(const KForm &o);
    friend KForm operator+(KForm a, const KForm &b) { return a += b; }
    friend KForm operator-(KForm a, const KForm &b) { return a -= b; }
    friend KForm operator*(const RatFunc &f, const KForm &a);
    friend KForm operator*(const KForm &a, const RatFunc &f) { return f * a; }
    friend bool operator==(const KForm &a, const KForm &b);
    friend bool operator!=(const KForm &a, const KForm &b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    int degree_ = 0;
    std::size_t arity_ = 0;
    std::map<Index, RatFunc> terms_;
};

KForm wedge(const KForm &a, const KForm &b);
KForm ext_d(const KForm &a);
KForm contract(const VectorField &x, const KForm &a);
KForm lie_derivative(const VectorField &x, const KForm &a);
// phi has one component per geometric variable; parameters are left fixed.
KForm pullback(const std::vector<RatFunc> &phi, const KForm &a);
// f∘phi for a function in the same space.
RatFunc compose_geometric(const RatFunc &f, const std::vector<RatFunc> &phi);

// Logarithmic differential dF/F.
KForm dlog(const RatFunc &f, std::size_t dim);

} // namespace foliage::calculus
