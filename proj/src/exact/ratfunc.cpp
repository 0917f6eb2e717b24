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

#include "foliage/exact/ratfunc.hpp"

#include "foliage/error.hpp"

#include <algorithm>

namespace foliage::exact {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.arity(), Scalar(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.arity() != den_.arity()) throw DomainError("rational function arity mismatch");
    reduce();
}

void RatFunc::reduce()
{
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.arity(), Scalar(1));
        return;
    }
    if (auto c = den_.as_constant()) {
        if (!c->is_one()) num_ *= c->inverse();
        den_ = Poly::constant(num_.arity(), Scalar(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_or_throw(num_, g);
        den_ = divide_or_throw(den_, g);
    }
    Scalar lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_constant()) den_ = Poly::constant(num_.arity(), Scalar(1));
}

RatFunc RatFunc::constant(std::size_t arity, const Scalar &c) { return RatFunc(Poly::constant(arity, c)); }

RatFunc RatFunc::variable(std::size_t arity, std::size_t index) { return RatFunc(Poly::variable(arity, index)); }

std::optional<Scalar> RatFunc::as_constant() const
{
    if (!den_.is_one()) return std::nullopt;
    return num_.as_constant();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc &RatFunc::operator+=(const RatFunc &o)
{
    if (arity() != o.arity()) throw DomainError("rational function arity mismatch");
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        reduce();
        return *this;
    }
    Poly da = divide_or_throw(den_, g), db = divide_or_throw(o.den_, g);
    num_ = num_ * db + o.num_ * da;
    den_ = den_ * db;
    reduce();
    return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o) { return *this += -o; }

RatFunc &RatFunc::operator*=(const RatFunc &o)
{
    if (arity() != o.arity()) throw DomainError("rational function arity mismatch");
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    if (auto c = o.as_constant()) {
        num_ *= *c;
        return *this;
    }
    if (auto c = as_constant()) {
        Scalar s = *c;
        *this = o;
        num_ *= s;
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Poly na = g1.is_one() ? num_ : divide_or_throw(num_, g1);
    Poly db = g1.is_one() ? o.den_ : divide_or_throw(o.den_, g1);
    Poly nb = g2.is_one() ? o.num_ : divide_or_throw(o.num_, g2);
    Poly da = g2.is_one() ? den_ : divide_or_throw(den_, g2);
    num_ = na * nb;
    den_ = da * db;
    Scalar lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_constant()) den_ = Poly::constant(arity(), Scalar(1));
    return *this;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw DomainError("division by zero rational function");
    Poly n = den_, d = num_;
    Scalar inv = d.leading_coefficient().inverse();
    n *= inv;
    d *= inv;
    if (d.is_constant()) d = Poly::constant(arity(), Scalar(1));
    return RatFunc(std::move(n), std::move(d), Raw{});
}

RatFunc &RatFunc::operator/=(const RatFunc &o) { return *this *= o.inverse(); }

RatFunc RatFunc::scaled(const Scalar &c) const
{
    if (c.is_zero()) return RatFunc(arity());
    Poly n = num_;
    n *= c;
    return RatFunc(std::move(n), den_, Raw{});
}

RatFunc operator*(const RatFunc &a, const Scalar &c) { return a.scaled(c); }

RatFunc RatFunc::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Raw{});
}

RatFunc RatFunc::derivative(std::size_t v) const
{
    if (den_.is_one()) return RatFunc(num_.derivative(v));
    Poly dd = den_.derivative(v);
    if (dd.is_zero()) return RatFunc(num_.derivative(v), den_);
    Poly g = gcd(den_, dd);
    if (g.is_one()) {
        // every factor of den is simple in v, so nothing cancels
        Poly n = num_.derivative(v) * den_ - num_ * dd;
        if (n.is_zero()) return RatFunc(arity());
        return RatFunc(std::move(n), den_ * den_, Raw{});
    }
    Poly dg = divide_or_throw(den_, g);
    return RatFunc(num_.derivative(v) * dg - num_ * divide_or_throw(dd, g), den_ * dg);
}

RatFunc RatFunc::conj() const
{
    return RatFunc(num_.conj(), den_.conj(), Raw{});
}

namespace {

Poly homogenized_compose(const Poly &p, std::span<const RatFunc> images, const std::vector<int> &top,
                         std::vector<std::vector<Poly>> &npow, std::vector<std::vector<Poly>> &dpow,
                         std::size_t out_arity)
{
    Poly acc(out_arity);
    for (const auto &t : p.terms()) {
        Poly m = Poly::constant(out_arity, t.coef);
        for (std::size_t i = 0; i < images.size(); ++i) {
            int a = t.exps[i], b = images[i].is_polynomial() ? 0 : top[i] - t.exps[i];
            while (static_cast<int>(npow[i].size()) <= a) npow[i].push_back(npow[i].back() * images[i].num());
            while (static_cast<int>(dpow[i].size()) <= b) dpow[i].push_back(dpow[i].back() * images[i].den());
            if (a) m = m * npow[i][a];
            if (b) m = m * dpow[i][b];
        }
        acc += m;
    }
    return acc;
}

} // namespace

RatFunc RatFunc::compose(std::span<const RatFunc> images) const
{
    if (images.size() != arity()) throw DomainError("substitution has wrong arity");
    std::size_t out_arity = images.empty() ? 0 : images[0].arity();
    for (const auto &im : images)
        if (im.arity() != out_arity) throw DomainError("substitution images differ in arity");
    bool polynomial = std::all_of(images.begin(), images.end(), [](const RatFunc &r) { return r.is_polynomial(); });
    if (polynomial) {
        std::vector<Poly> nums;
        nums.reserve(images.size());
        for (const auto &im : images) nums.push_back(im.num());
        if (den_.is_one()) return RatFunc(num_.compose(nums));
        return RatFunc(num_.compose(nums), den_.compose(nums));
    }
    std::vector<int> top(images.size(), 0);
    for (std::size_t i = 0; i < images.size(); ++i)
        top[i] = images[i].is_polynomial() ? 0 : std::max(num_.degree_in(i), den_.degree_in(i));
    std::vector<std::vector<Poly>> npow(images.size()), dpow(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        npow[i].push_back(Poly::constant(out_arity, Scalar(1)));
        dpow[i].push_back(Poly::constant(out_arity, Scalar(1)));
    }
    Poly n = homogenized_compose(num_, images, top, npow, dpow, out_arity);
    Poly d = homogenized_compose(den_, images, top, npow, dpow, out_arity);
    if (d.is_zero()) throw DomainError("substitution makes the denominator vanish");
    return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::substitute(std::size_t v, const RatFunc &value) const
{
    std::vector<RatFunc> images;
    images.reserve(arity());
    for (std::size_t i = 0; i < arity(); ++i) images.push_back(i == v ? value : variable(arity(), i));
    return compose(images);
}

RatFunc RatFunc::remap(std::size_t new_arity, std::span<const std::size_t> map) const
{
    return RatFunc(num_.remap(new_arity, map), den_.remap(new_arity, map));
}

Scalar RatFunc::evaluate(std::span<const Scalar> point) const
{
    Scalar d = den_.evaluate(point);
    if (d.is_zero()) throw DomainError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

std::string RatFunc::str() const
{
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace foliage::exact
