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

#include "foliage/exact/series.hpp"

#include "foliage/error.hpp"

#include <algorithm>

namespace foliage::exact {

Series1::Series1(std::size_t arity, std::size_t var, int order)
    : arity_(arity), var_(var), coeffs_(static_cast<std::size_t>(std::max(order, 0) + 1), RatFunc(arity))
{
    if (order < 0) throw DomainError("negative series order");
    if (var >= arity) throw DomainError("series variable out of range");
}

Series1::Series1(std::size_t var, std::vector<RatFunc> coeffs) : arity_(0), var_(var), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
    arity_ = coeffs_[0].arity();
    if (var >= arity_) throw DomainError("series variable out of range");
    for (const auto &c : coeffs_) {
        if (c.arity() != arity_) throw DomainError("series coefficient arity mismatch");
        if (c.depends_on(var_)) throw DomainError("series coefficient depends on the series variable");
    }
}

Series1 Series1::variable(std::size_t arity, std::size_t var, int order)
{
    Series1 s(arity, var, order);
    if (order >= 1) s.coeffs_[1] = RatFunc::constant(arity, Scalar(1));
    return s;
}

Series1 Series1::constant(std::size_t arity, std::size_t var, int order, const RatFunc &c)
{
    Series1 s(arity, var, order);
    if (c.depends_on(var)) throw DomainError("series coefficient depends on the series variable");
    s.coeffs_[0] = c;
    return s;
}

Series1 Series1::expand(const RatFunc &f, std::size_t var, int order)
{
    std::size_t n = f.arity();
    auto lift = [&](const Poly &p) {
        Series1 s(n, var, order);
        auto c = p.coefficients_in(var);
        for (std::size_t k = 0; k < c.size() && static_cast<int>(k) <= order; ++k) s.coeffs_[k] = RatFunc(c[k]);
        return s;
    };
    Series1 num = lift(f.num());
    if (f.den().is_one()) return num;
    Series1 den = lift(f.den());
    if (den[0].is_zero()) throw DomainError("expansion point is a pole");
    return num / den;
}

void Series1::set(int k, RatFunc c)
{
    if (k < 0 || k > order()) throw DomainError("series index out of range");
    if (c.depends_on(var_)) throw DomainError("series coefficient depends on the series variable");
    coeffs_[static_cast<std::size_t>(k)] = std::move(c);
}

bool Series1::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatFunc &c) { return c.is_zero(); });
}

int Series1::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Series1 Series1::operator-() const
{
    Series1 r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

namespace {

void check_compatible(const Series1 &a, const Series1 &b)
{
    if (a.var() != b.var() || a.arity() != b.arity()) throw DomainError("series in different variables");
}

} // namespace

Series1 &Series1::operator+=(const Series1 &o)
{
    check_compatible(*this, o);
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size(), RatFunc(arity_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Series1 &Series1::operator-=(const Series1 &o)
{
    check_compatible(*this, o);
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size(), RatFunc(arity_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

Series1 operator*(const Series1 &a, const Series1 &b)
{
    check_compatible(a, b);
    int n = std::min(a.order(), b.order());
    Series1 r(a.arity(), a.var(), n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j)
            if (!b[j].is_zero()) r.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return r;
}

Series1 operator/(const Series1 &a, const Series1 &b)
{
    check_compatible(a, b);
    if (b[0].is_zero()) throw DomainError("series division by a series without constant term");
    int n = std::min(a.order(), b.order());
    Series1 q(a.arity(), a.var(), n);
    RatFunc inv = b[0].inverse();
    for (int k = 0; k <= n; ++k) {
        RatFunc acc = a[k];
        for (int j = 1; j <= k; ++j)
            if (!b[j].is_zero() && !q[k - j].is_zero()) acc -= b[j] * q[k - j];
        q.coeffs_[static_cast<std::size_t>(k)] = acc * inv;
    }
    return q;
}

bool operator==(const Series1 &a, const Series1 &b)
{
    return a.var_ == b.var_ && a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
}

Series1 Series1::scaled(const RatFunc &c) const
{
    if (c.depends_on(var_)) throw DomainError("series coefficient depends on the series variable");
    Series1 r = *this;
    for (auto &k : r.coeffs_) k *= c;
    return r;
}

Series1 Series1::truncate(int order) const
{
    if (order > this->order()) throw DomainError("cannot raise the order of a truncated series");
    Series1 r = *this;
    r.coeffs_.resize(static_cast<std::size_t>(order + 1), RatFunc(arity_));
    return r;
}

Series1 Series1::derivative() const
{
    if (order() == 0) throw DomainError("derivative of an order-0 series has no known terms");
    Series1 r(arity_, var_, order() - 1);
    for (int k = 1; k <= order(); ++k) r.coeffs_[static_cast<std::size_t>(k - 1)] = coeffs_[k].scaled(Scalar(k));
    return r;
}

Series1 Series1::reciprocal() const
{
    return constant(arity_, var_, order(), RatFunc::constant(arity_, Scalar(1))) / *this;
}

RatFunc Series1::to_ratfunc() const
{
    RatFunc acc(arity_);
    RatFunc v = RatFunc::variable(arity_, var_);
    for (int k = order(); k >= 0; --k) acc = acc * v + coeffs_[k];
    return acc;
}

Series1 series_compose(const Series1 &f, const Series1 &g, int order)
{
    check_compatible(f, g);
    if (!g[0].is_zero()) throw DomainError("inner series has a nonzero constant term");
    int n = std::min({order, f.order(), g.order()});
    Series1 inner = g.truncate(n);
    Series1 acc = Series1::constant(f.arity(), f.var(), n, f[n]);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * inner;
        acc.set(0, acc[0] + f[k]);
    }
    return acc;
}

Series1 series_invert(const Series1 &f, int order)
{
    if (f.order() < 1 || !f[0].is_zero()) throw DomainError("germ does not fix the origin");
    if (f[1].is_zero()) throw DomainError("germ is not invertible (zero linear term)");
    int n = std::min(order, f.order());
    RatFunc inv = f[1].inverse();
    Series1 h(f.arity(), f.var(), n);
    if (n >= 1) h.set(1, inv);
    for (int k = 2; k <= n; ++k) {
        Series1 c = series_compose(f.truncate(k), h.truncate(k), k);
        h.set(k, -(c[k] * inv));
    }
    return h;
}

} // namespace foliage::exact
