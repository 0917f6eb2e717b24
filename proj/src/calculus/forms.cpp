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

#include "foliage/calculus/forms.hpp"

#include "foliage/error.hpp"

#include <algorithm>

namespace foliage::calculus {

using exact::Scalar;

VectorField::VectorField(std::vector<RatFunc> components) : comps_(std::move(components))
{
    for (const auto &c : comps_)
        if (c.arity() != comps_[0].arity()) throw DomainError("vector field component arity mismatch");
    if (!comps_.empty() && comps_[0].arity() < comps_.size()) throw DomainError("vector field has too many components");
}

RatFunc VectorField::apply(const RatFunc &f) const
{
    if (f.arity() != arity()) throw DomainError("vector field and function arity mismatch");
    RatFunc acc(f.arity());
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (!comps_[i].is_zero()) acc += comps_[i] * f.derivative(i);
    return acc;
}

KForm::KForm(std::size_t dim, int degree, std::size_t arity) : dim_(dim), degree_(degree), arity_(arity)
{
    if (degree < 0) throw DomainError("negative form degree");
    if (dim > arity) throw DomainError("form dimension exceeds arity");
}

KForm KForm::function(const RatFunc &f, std::size_t dim)
{
    KForm k(dim, 0, f.arity());
    k.set({}, f);
    return k;
}

KForm KForm::one_form(const std::vector<RatFunc> &components)
{
    if (components.empty()) throw DomainError("one-form needs at least one component");
    KForm k(components.size(), 1, components[0].arity());
    for (std::size_t i = 0; i < components.size(); ++i) k.set({i}, components[i]);
    return k;
}

KForm KForm::basis(std::size_t dim, std::size_t i, std::size_t arity)
{
    KForm k(dim, 1, arity);
    k.set({i}, RatFunc::constant(arity, Scalar(1)));
    return k;
}

RatFunc KForm::component(const Index &i) const
{
    auto it = terms_.find(i);
    return it == terms_.end() ? RatFunc(arity_) : it->second;
}

RatFunc KForm::value() const
{
    if (degree_ != 0) throw DomainError("value() of a form of positive degree");
    return component({});
}

void KForm::set(const Index &i, const RatFunc &c)
{
    if (static_cast<int>(i.size()) != degree_) throw DomainError("index length does not match form degree");
    for (std::size_t k = 0; k < i.size(); ++k) {
        if (i[k] >= dim_) throw DomainError("form index out of range");
        if (k && i[k - 1] >= i[k]) throw DomainError("form index not strictly increasing");
    }
    if (c.arity() != arity_) throw DomainError("form coefficient arity mismatch");
    if (c.is_zero())
        terms_.erase(i);
    else
        terms_[i] = c;
}

namespace {

void check_same(const KForm &a, const KForm &b)
{
    if (a.dim() != b.dim() || a.arity() != b.arity()) throw DomainError("forms live in different spaces");
}

// Sign of the permutation sorting the concatenation, or 0 on repeats.
int merge_sign(const Index &a, const Index &b, Index &out)
{
    out = a;
    out.insert(out.end(), b.begin(), b.end());
    int sign = 1;
    // bubble sort, counting transpositions
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j + 1 < out.size() - i; ++j) {
            if (out[j] == out[j + 1]) return 0;
            if (out[j] > out[j + 1]) {
                std::swap(out[j], out[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < out.size(); ++j)
        if (out[j] == out[j + 1]) return 0;
    return sign;
}

} // namespace

KForm KForm::operator-() const
{
    KForm r = *this;
    for (auto &[i, c] : r.terms_) c = -c;
    return r;
}

KForm &KForm::operator+=(const KForm &o)
{
    check_same(*this, o);
    if (degree_ != o.degree_) throw DomainError("adding forms of different degree");
    for (const auto &[i, c] : o.terms_) {
        auto it = terms_.find(i);
        if (it == terms_.end()) {
            terms_.emplace(i, c);
            continue;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

KForm &KForm::operator-=(const KForm &o) { return *this += -o; }

KForm operator*(const RatFunc &f, const KForm &a)
{
    KForm r(a.dim_, a.degree_, a.arity_);
    if (f.arity() != a.arity_) throw DomainError("form coefficient arity mismatch");
    if (f.is_zero()) return r;
    for (const auto &[i, c] : a.terms_) r.terms_.emplace(i, f * c);
    return r;
}

bool operator==(const KForm &a, const KForm &b)
{
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

KForm wedge(const KForm &a, const KForm &b)
{
    check_same(a, b);
    KForm r(a.dim(), a.degree() + b.degree(), a.arity());
    if (static_cast<std::size_t>(r.degree()) > a.dim()) return r;
    Index merged;
    for (const auto &[i, c] : a.terms())
        for (const auto &[j, e] : b.terms()) {
            int s = merge_sign(i, j, merged);
            if (s == 0) continue;
            RatFunc prod = c * e;
            if (s < 0) prod = -prod;
            r.set(merged, r.component(merged) + prod);
        }
    return r;
}

KForm ext_d(const KForm &a)
{
    KForm r(a.dim(), a.degree() + 1, a.arity());
    if (static_cast<std::size_t>(r.degree()) > a.dim()) return r;
    Index merged;
    for (const auto &[i, c] : a.terms())
        for (std::size_t v = 0; v < a.dim(); ++v) {
            if (!c.depends_on(v)) continue;
            int s = merge_sign(Index{v}, i, merged);
            if (s == 0) continue;
            RatFunc dc = c.derivative(v);
            if (s < 0) dc = -dc;
            r.set(merged, r.component(merged) + dc);
        }
    return r;
}

KForm contract(const VectorField &x, const KForm &a)
{
    if (a.degree() == 0) throw DomainError("contraction of a 0-form");
    if (x.dim() != a.dim() || x.arity() != a.arity()) throw DomainError("vector field and form live in different spaces");
    KForm r(a.dim(), a.degree() - 1, a.arity());
    for (const auto &[i, c] : a.terms())
        for (std::size_t k = 0; k < i.size(); ++k) {
            if (x[i[k]].is_zero()) continue;
            Index rest = i;
            rest.erase(rest.begin() + static_cast<long>(k));
            RatFunc term = x[i[k]] * c;
            if (k % 2) term = -term;
            r.set(rest, r.component(rest) + term);
        }
    return r;
}

KForm lie_derivative(const VectorField &x, const KForm &a)
{
    KForm r = contract(x, ext_d(a));
    if (a.degree() > 0) r += ext_d(contract(x, a));
    return r;
}

RatFunc compose_geometric(const RatFunc &f, const std::vector<RatFunc> &phi)
{
    std::vector<RatFunc> images;
    images.reserve(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i) images.push_back(i < phi.size() ? phi[i] : RatFunc::variable(f.arity(), i));
    return f.compose(images);
}

KForm pullback(const std::vector<RatFunc> &phi, const KForm &a)
{
    if (phi.size() != a.dim()) throw DomainError("pullback map has wrong number of components");
    for (const auto &p : phi)
        if (p.arity() != a.arity()) throw DomainError("pullback map arity mismatch");
    std::vector<KForm> dphi;
    for (const auto &p : phi) dphi.push_back(ext_d(KForm::function(p, a.dim())));
    KForm r(a.dim(), a.degree(), a.arity());
    for (const auto &[i, c] : a.terms()) {
        KForm t = KForm::function(compose_geometric(c, phi), a.dim());
        for (std::size_t k : i) t = wedge(t, dphi[k]);
        r += t;
    }
    return r;
}

KForm dlog(const RatFunc &f, std::size_t dim)
{
    if (f.is_zero()) throw DomainError("logarithmic differential of zero");
    return f.inverse() * ext_d(KForm::function(f, dim));
}

} // namespace foliage::calculus
