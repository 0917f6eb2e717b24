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

#include "foliage/disk/laurent.hpp"

#include "foliage/error.hpp"

#include <algorithm>

namespace foliage::disk {

using exact::Scalar;

namespace {

int sat_add(long a, long b)
{
    long s = a + b;
    if (s >= Laurent::kExact) return Laurent::kExact;
    return static_cast<int>(s);
}

bool finite(int prec) { return prec < Laurent::kExact; }

} // namespace

Laurent::Laurent(std::size_t arity, int low, int prec) : arity_(arity), low_(low), prec_(prec) {}

Laurent Laurent::from_series(const Series1 &s)
{
    Laurent l(s.arity(), 0, s.order() + 1);
    for (int k = 0; k <= s.order(); ++k)
        if (!s[k].is_zero()) l.add_to(k, s[k]);
    return l;
}

Laurent Laurent::monomial(std::size_t arity, int exponent, const RatFunc &c)
{
    Laurent l(arity, exponent, kExact);
    l.add_to(exponent, c);
    return l;
}

RatFunc Laurent::coeff(int e) const
{
    if (e < low_ || e >= prec_) return RatFunc(arity_);
    std::size_t idx = static_cast<std::size_t>(e - low_);
    return idx < c_.size() ? c_[idx] : RatFunc(arity_);
}

void Laurent::add_to(int e, const RatFunc &c)
{
    if (e >= prec_ || c.is_zero()) return;
    if (e < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - e), RatFunc(arity_));
        low_ = e;
    }
    std::size_t idx = static_cast<std::size_t>(e - low_);
    if (idx >= c_.size()) c_.resize(idx + 1, RatFunc(arity_));
    c_[idx] += c;
}

void Laurent::cap()
{
    if (finite(prec_)) {
        long keep = static_cast<long>(prec_) - low_;
        if (keep < 0) keep = 0;
        if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep), RatFunc(arity_));
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Laurent::valuation() const
{
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero() && low_ + static_cast<int>(k) < prec_) return low_ + static_cast<int>(k);
    return prec_;
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto &c : r.c_) c = -c;
    return r;
}

Laurent operator+(const Laurent &a, const Laurent &b)
{
    Laurent r(a.arity_, std::min(a.low_, b.low_), std::min(a.prec_, b.prec_));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.add_to(a.low_ + static_cast<int>(k), a.c_[k]);
    for (std::size_t k = 0; k < b.c_.size(); ++k) r.add_to(b.low_ + static_cast<int>(k), b.c_[k]);
    r.cap();
    return r;
}

Laurent operator*(const Laurent &a, const Laurent &b)
{
    int va = a.valuation(), vb = b.valuation();
    long rel_a = finite(a.prec_) ? a.prec_ - va : Laurent::kExact;
    long rel_b = finite(b.prec_) ? b.prec_ - vb : Laurent::kExact;
    // a zero product of exact data stays exact
    if ((!finite(a.prec_) && va >= Laurent::kExact) || (!finite(b.prec_) && vb >= Laurent::kExact))
        return Laurent(a.arity_, 0, Laurent::kExact);
    int prec = sat_add(static_cast<long>(va) + vb, std::min(rel_a, rel_b));
    Laurent r(a.arity_, std::min(va + vb, prec), prec);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        int ea = a.low_ + static_cast<int>(i);
        if (ea >= a.prec_ || a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            int eb = b.low_ + static_cast<int>(j);
            if (eb >= b.prec_ || ea + eb >= prec) break;
            if (!b.c_[j].is_zero()) r.add_to(ea + eb, a.c_[i] * b.c_[j]);
        }
    }
    r.cap();
    return r;
}

Laurent operator/(const Laurent &a, const Laurent &b)
{
    int vb = b.valuation();
    if (vb >= b.prec_) throw DomainError("Laurent division by a series with no known nonzero term");
    int va = a.valuation();
    if (va >= a.prec_ && !finite(a.prec_)) return Laurent(a.arity_, 0, Laurent::kExact);
    std::vector<RatFunc> bs; // b / x^vb
    for (int e = vb; e < b.low_ + static_cast<int>(b.c_.size()) && e < b.prec_; ++e) bs.push_back(b.coeff(e));
    bool b_monomial = std::count_if(bs.begin(), bs.end(), [](const RatFunc &c) { return !c.is_zero(); }) == 1;
    if (!finite(b.prec_) && b_monomial) {
        int prec = finite(a.prec_) ? a.prec_ - vb : Laurent::kExact;
        Laurent r(a.arity_, va - vb, prec);
        RatFunc inv = bs[0].inverse();
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            int e = a.low_ + static_cast<int>(k);
            if (e < a.prec_ && !a.c_[k].is_zero()) r.add_to(e - vb, a.c_[k] * inv);
        }
        r.cap();
        return r;
    }
    long rel_a = finite(a.prec_) ? a.prec_ - va : Laurent::kExact;
    long rel_b = finite(b.prec_) ? b.prec_ - vb : Laurent::kExact;
    long rel = std::min(rel_a, rel_b);
    if (rel >= Laurent::kExact) throw DomainError("exact Laurent division needs a working precision");
    int prec = sat_add(static_cast<long>(va) - vb, rel);
    Laurent r(a.arity_, va - vb, prec);
    RatFunc inv = bs[0].inverse();
    std::vector<RatFunc> q;
    for (int k = 0; va - vb + k < prec; ++k) {
        RatFunc acc = a.coeff(va + k);
        for (int j = 1; j <= k && j < static_cast<int>(bs.size()); ++j)
            if (!bs[static_cast<std::size_t>(j)].is_zero())
                acc -= bs[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        q.push_back(acc * inv);
        r.add_to(va - vb + k, q.back());
    }
    r.cap();
    return r;
}

Laurent Laurent::derivative() const
{
    Laurent r(arity_, low_ - 1, finite(prec_) ? prec_ - 1 : prec_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        int e = low_ + static_cast<int>(k);
        if (e != 0 && !c_[k].is_zero()) r.add_to(e - 1, c_[k].scaled(Scalar(e)));
    }
    r.cap();
    return r;
}

Laurent Laurent::compose(const RatFunc &h, std::size_t var, const Laurent &f)
{
    std::size_t n = h.arity();
    auto poly_of = [&](const exact::Poly &p) {
        auto coeffs = p.coefficients_in(var);
        Laurent acc(n, 0, kExact);
        Laurent power = monomial(n, 0, RatFunc::constant(n, Scalar(1)));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (k) power = power * f;
            if (!coeffs[k].is_zero()) acc = acc + power * monomial(n, 0, RatFunc(coeffs[k]));
        }
        return acc;
    };
    Laurent num = poly_of(h.num());
    if (h.den().is_one()) return num;
    return num / poly_of(h.den());
}

} // namespace foliage::disk
