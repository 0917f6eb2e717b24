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

#include "foliage/integrability/tower.hpp"

#include "foliage/error.hpp"

#include <functional>

namespace foliage::integrability {

using exact::Poly;

TruncSeries::TruncSeries(std::size_t nvars, std::size_t arity, int order) : nvars_(nvars), arity_(arity), order_(order)
{
    if (order < 0) throw DomainError("negative series order");
    if (nvars > arity) throw DomainError("series has more variables than indeterminates");
}

std::vector<Exponents> exponents_of_degree(std::size_t n, int d)
{
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    auto rec = [&](auto &&self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

namespace {

int degree(const Exponents &e)
{
    int d = 0;
    for (int k : e) d += k;
    return d;
}

// Splits a polynomial in u and the parameters into a series in u.
TruncSeries split(const Poly &p, std::size_t n, int order)
{
    TruncSeries s(n, p.arity(), order);
    std::map<Exponents, Poly> acc;
    for (const auto &t : p.terms()) {
        Exponents geo(t.exps.begin(), t.exps.begin() + static_cast<long>(n));
        if (degree(geo) > order) continue;
        Exponents par = t.exps;
        for (std::size_t i = 0; i < n; ++i) par[i] = 0;
        auto it = acc.try_emplace(geo, Poly(p.arity())).first;
        it->second += Poly::monomial(par, t.coef);
    }
    for (auto &[e, c] : acc) s.set(e, RatFunc(c));
    return s;
}

} // namespace

TruncSeries TruncSeries::expand(const RatFunc &f, std::span<const Scalar> base, int order)
{
    std::size_t n = base.size(), arity = f.arity();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < arity; ++i) {
        Poly v = Poly::variable(arity, i);
        if (i < n && !base[i].is_zero()) v += Poly::constant(arity, base[i]);
        images.push_back(v);
    }
    TruncSeries num = split(f.num().compose(images), n, order);
    TruncSeries den = split(f.den().compose(images), n, order);
    if (den.coeff(Exponents(n, 0)).is_zero()) throw DomainError("pole at the basepoint");
    return num * den.inverse();
}

RatFunc TruncSeries::coeff(const Exponents &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc(arity_) : it->second;
}

void TruncSeries::set(const Exponents &e, const RatFunc &c)
{
    if (e.size() != nvars_) throw DomainError("series exponent has the wrong length");
    if (degree(e) > order_) return;
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries out = *this;
    for (auto &[e, c] : out.terms_) c = -c;
    return out;
}

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
{
    TruncSeries out(a.nvars_, a.arity_, std::min(a.order_, b.order_));
    for (const auto &[e, c] : a.terms_) out.set(e, c);
    for (const auto &[e, c] : b.terms_) out.set(e, out.coeff(e) + c);
    return out;
}

TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) { return a + (-b); }

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
{
    if (a.nvars_ != b.nvars_) throw DomainError("series in different variables");
    TruncSeries out(a.nvars_, a.arity_, std::min(a.order_, b.order_));
    std::map<Exponents, RatFunc> acc;
    for (const auto &[ea, ca] : a.terms_) {
        int da = degree(ea);
        if (da > out.order_) continue;
        for (const auto &[eb, cb] : b.terms_) {
            if (da + degree(eb) > out.order_) continue;
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto it = acc.try_emplace(e, RatFunc(a.arity_)).first;
            it->second += ca * cb;
        }
    }
    for (auto &[e, c] : acc) out.set(e, c);
    return out;
}

bool operator==(const TruncSeries &a, const TruncSeries &b)
{
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

TruncSeries TruncSeries::scaled(const RatFunc &c) const
{
    TruncSeries out(nvars_, arity_, order_);
    for (const auto &[e, v] : terms_) out.set(e, v * c);
    return out;
}

TruncSeries TruncSeries::derivative(std::size_t i) const
{
    TruncSeries out(nvars_, arity_, std::max(order_ - 1, 0));
    for (const auto &[e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents f = e;
        --f[i];
        out.set(f, c.scaled(Scalar(e[i])));
    }
    return out;
}

TruncSeries TruncSeries::truncated(int order) const
{
    TruncSeries out(nvars_, arity_, std::min(order, order_));
    for (const auto &[e, c] : terms_) out.set(e, c);
    return out;
}

TruncSeries TruncSeries::inverse() const
{
    RatFunc d0 = coeff(Exponents(nvars_, 0));
    if (d0.is_zero()) throw DomainError("series is not invertible");
    RatFunc inv0 = d0.inverse();
    TruncSeries g(nvars_, arity_, order_);
    g.set(Exponents(nvars_, 0), inv0);
    for (int n = 1; n <= order_; ++n)
        for (const auto &e : exponents_of_degree(nvars_, n)) {
            RatFunc s(arity_);
            for (const auto &[ed, cd] : terms_) {
                if (degree(ed) == 0) continue;
                Exponents rest = e;
                bool ok = true;
                for (std::size_t i = 0; i < e.size() && ok; ++i) {
                    ok = ed[i] <= e[i];
                    rest[i] -= ed[i];
                }
                if (ok) s += cd * g.coeff(rest);
            }
            g.set(e, -(s * inv0));
        }
    return g;
}

namespace {

using Partials = std::function<std::vector<TruncSeries>(const TruncSeries &)>;

// U with U(0) = u0 and dU/du_i = partials(U)_i, built one total degree at a
// time; every partial must give the same coefficient.
TruncSeries integrate(std::size_t n, std::size_t arity, int order, const RatFunc &u0, const Partials &partials)
{
    TruncSeries u(n, arity, order);
    u.set(Exponents(n, 0), u0);
    for (int d = 1; d <= order; ++d) {
        auto p = partials(u.truncated(d - 1));
        for (const auto &e : exponents_of_degree(n, d)) {
            std::optional<RatFunc> value;
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                Exponents f = e;
                --f[i];
                RatFunc v = p[i].coeff(f) * RatFunc::constant(arity, Scalar::fraction(1, e[i]));
                if (value && *value != v)
                    throw InconsistentData("mixed partials disagree at order " + std::to_string(d));
                value = v;
            }
            u.set(e, *value);
        }
    }
    return u;
}

std::vector<TruncSeries> expand_form(const KForm &f, std::span<const Scalar> base, int order, const char *what)
{
    std::vector<TruncSeries> out;
    try {
        for (std::size_t i = 0; i < f.dim(); ++i) out.push_back(TruncSeries::expand(f[i], base, order));
    } catch (const DomainError &) {
        throw DomainError(std::string("singular basepoint: ") + what + " has a pole there");
    }
    return out;
}

void require_form(const std::optional<KForm> &f, const KForm &omega, const char *what)
{
    if (!f) throw DomainError(std::string("tower needs ") + what);
    if (f->degree() != 1 || f->dim() != omega.dim() || f->arity() != omega.arity())
        throw DomainError(std::string(what) + " does not match omega");
}

} // namespace

TowerSeries tower_series(TowerKind kind, const KForm &omega, const TowerInput &input, std::vector<Scalar> basepoint,
                         int order)
{
    if (omega.degree() != 1) throw DomainError("tower needs a 1-form");
    std::size_t n = omega.dim(), arity = omega.arity();
    if (basepoint.size() != n) throw DomainError("basepoint has the wrong number of coordinates");
    if (order < 1) throw DomainError("tower order must be positive");
    auto w = expand_form(omega, basepoint, order, "omega");
    bool vanishes = true;
    for (const auto &c : w) vanishes = vanishes && c.coeff(Exponents(n, 0)).is_zero();
    if (vanishes) throw DomainError("singular basepoint: omega vanishes there");

    auto cst = [&](const Scalar &s) { return RatFunc::constant(arity, s); };
    TowerSeries out;
    out.basepoint = basepoint;
    out.order = order;

    if (kind == TowerKind::Darboux) {
        if (!input.F || input.F->is_zero()) throw DomainError("tower needs F");
        if (input.k < 1) throw DomainError("tower needs k >= 1");
        if (input.F->arity() != arity) throw DomainError("F does not match omega");
        TruncSeries fs;
        try {
            fs = TruncSeries::expand(*input.F, basepoint, order);
        } catch (const DomainError &) {
            throw DomainError("singular basepoint: F has a pole there");
        }
        if (fs.coeff(Exponents(n, 0)).is_zero()) throw DomainError("singular basepoint: F vanishes there");
        if (input.k == 1) {
            out.F = fs;
        } else {
            std::vector<TruncSeries> phi;
            RatFunc inv_k = cst(Scalar::fraction(1, input.k));
            for (std::size_t i = 0; i < n; ++i)
                phi.push_back(TruncSeries::expand(input.F->derivative(i) / *input.F * inv_k, basepoint, order));
            out.F = integrate(n, arity, order, cst(input.branch.value_or(Scalar(1))), [&](const TruncSeries &r) {
                std::vector<TruncSeries> p;
                for (const auto &f : phi) p.push_back(r * f);
                return p;
            });
        }
    } else {
        require_form(input.alpha, omega, "alpha");
        auto a = expand_form(*input.alpha, basepoint, order, "alpha");
        if (kind == TowerKind::Riccati) {
            require_form(input.beta, omega, "beta");
            auto b = expand_form(*input.beta, basepoint, order, "beta");
            RatFunc half = cst(Scalar::fraction(1, 2));
            out.G = integrate(n, arity, order, cst(input.G0), [&](const TruncSeries &g) {
                std::vector<TruncSeries> p;
                for (std::size_t i = 0; i < n; ++i) p.push_back((g * g * w[i]).scaled(half) + g * a[i] + b[i]);
                return p;
            });
        }
        out.F = integrate(n, arity, order, cst(input.F0), [&](const TruncSeries &f) {
            std::vector<TruncSeries> p;
            for (std::size_t i = 0; i < n; ++i) p.push_back(out.G ? f * (*out.G * w[i] + a[i]) : f * a[i]);
            return p;
        });
    }
    std::vector<TruncSeries> fw;
    for (std::size_t i = 0; i < n; ++i) fw.push_back(out.F * w[i]);
    out.H = integrate(n, arity, order, cst(input.H0), [&](const TruncSeries &) { return fw; });
    out.mixed_partials_checked = order;

    out.verified = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            TruncSeries r = out.H.derivative(i) * w[j] - out.H.derivative(j) * w[i];
            out.verified = out.verified && r.is_zero();
        }
    return out;
}

} // namespace foliage::integrability
