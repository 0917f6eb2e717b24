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

#include "foliage/exact/poly.hpp"

#include "foliage/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace foliage::exact {

int total_degree(const Exponents &e) { return std::accumulate(e.begin(), e.end(), 0); }

int grlex_compare(const Exponents &a, const Exponents &b)
{
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

bool term_greater(const Term &a, const Term &b) { return grlex_compare(a.exps, b.exps) > 0; }

void check_arity(const Poly &a, const Poly &b)
{
    if (a.arity() != b.arity()) throw DomainError("polynomial arity mismatch");
}

Exponents add_exps(const Exponents &a, const Exponents &b)
{
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace

Poly Poly::constant(std::size_t arity, const Scalar &c)
{
    Poly p(arity);
    if (!c.is_zero()) p.terms_.push_back({Exponents(arity, 0), c});
    return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index)
{
    if (index >= arity) throw DomainError("variable index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    Poly p(arity);
    p.terms_.push_back({std::move(e), Scalar(1)});
    return p;
}

Poly Poly::monomial(Exponents exps, const Scalar &c)
{
    Poly p(exps.size());
    if (!c.is_zero()) p.terms_.push_back({std::move(exps), c});
    return p;
}

Poly Poly::from_terms(std::size_t arity, std::vector<Term> terms)
{
    Poly p(arity);
    for (auto &t : terms)
        if (t.exps.size() != arity) throw DomainError("term arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coef += t.coef;
        else {
            if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && exact::total_degree(terms_[0].exps) == 0);
}

bool Poly::is_one() const
{
    return terms_.size() == 1 && exact::total_degree(terms_[0].exps) == 0 && terms_[0].coef.is_one();
}

std::optional<Scalar> Poly::as_constant() const
{
    if (terms_.empty()) return Scalar();
    if (is_constant()) return terms_[0].coef;
    return std::nullopt;
}

Scalar Poly::constant_term() const
{
    if (!terms_.empty() && exact::total_degree(terms_.back().exps) == 0) return terms_.back().coef;
    return Scalar();
}

Scalar Poly::coefficient(const Exponents &e) const
{
    for (const auto &t : terms_)
        if (t.exps == e) return t.coef;
    return Scalar();
}

int Poly::total_degree() const
{
    if (terms_.empty()) return -1;
    return exact::total_degree(terms_.front().exps);
}

int Poly::degree_in(std::size_t v) const
{
    int d = terms_.empty() ? -1 : 0;
    for (const auto &t : terms_) d = std::max(d, t.exps[v]);
    return d;
}

int Poly::low_degree() const
{
    if (terms_.empty()) return -1;
    return exact::total_degree(terms_.back().exps);
}

bool Poly::depends_on(std::size_t v) const
{
    for (const auto &t : terms_)
        if (t.exps[v] != 0) return true;
    return false;
}

bool Poly::has_real_coefficients() const
{
    for (const auto &t : terms_)
        if (!t.coef.is_real()) return false;
    return true;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto &t : r.terms_) t.coef = -t.coef;
    return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term> &a, const std::vector<Term> &b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = grlex_compare(a[i].exps, b[j].exps);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (subtract) out.back().coef = -out.back().coef;
        } else {
            Scalar s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
            if (!s.is_zero()) out.push_back({a[i].exps, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly &Poly::operator+=(const Poly &o)
{
    check_arity(*this, o);
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    check_arity(*this, o);
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly &Poly::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto &t : terms_) t.coef *= c;
    return *this;
}

Poly &Poly::operator*=(const Poly &o)
{
    *this = *this * o;
    return *this;
}

Poly operator+(const Poly &a, const Poly &b)
{
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly &a, const Poly &b)
{
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly &a, const Poly &b)
{
    check_arity(a, b);
    Poly r(a.arity());
    if (a.is_zero() || b.is_zero()) return r;
    const Poly &small = a.size() <= b.size() ? a : b;
    const Poly &large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) {
        // monomial multiplication preserves the order
        const Term &m = small.terms_[0];
        r.terms_.reserve(large.size());
        for (const auto &t : large.terms_) r.terms_.push_back({add_exps(t.exps, m.exps), t.coef * m.coef});
        return r;
    }
    r.terms_.reserve(a.size() * b.size());
    for (const auto &s : a.terms_)
        for (const auto &t : b.terms_) r.terms_.push_back({add_exps(s.exps, t.exps), s.coef * t.coef});
    r.normalize();
    return r;
}

bool operator==(const Poly &a, const Poly &b)
{
    if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

Poly Poly::pow(unsigned e) const
{
    Poly acc = constant(arity_, Scalar(1)), base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

Poly Poly::derivative(std::size_t v) const
{
    Poly r(arity_);
    for (const auto &t : terms_) {
        if (t.exps[v] == 0) continue;
        Term d = t;
        d.coef *= Scalar(static_cast<long>(d.exps[v]));
        d.exps[v] -= 1;
        r.terms_.push_back(std::move(d));
    }
    r.normalize();
    return r;
}

Poly Poly::conj() const
{
    Poly r = *this;
    for (auto &t : r.terms_) t.coef = t.coef.conj();
    return r;
}

Poly Poly::monic() const
{
    if (terms_.empty() || terms_[0].coef.is_one()) return *this;
    Poly r = *this;
    r *= terms_[0].coef.inverse();
    return r;
}

Poly Poly::homogeneous_part(int d) const
{
    Poly r(arity_);
    for (const auto &t : terms_)
        if (exact::total_degree(t.exps) == d) r.terms_.push_back(t);
    return r;
}

Poly Poly::truncate(int d) const
{
    Poly r(arity_);
    for (const auto &t : terms_)
        if (exact::total_degree(t.exps) <= d) r.terms_.push_back(t);
    return r;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const
{
    if (point.size() != arity_) throw DomainError("evaluation point has wrong arity");
    Scalar acc;
    for (const auto &t : terms_) {
        Scalar m = t.coef;
        for (std::size_t i = 0; i < arity_; ++i)
            if (t.exps[i] != 0) m *= point[i].pow(t.exps[i]);
        acc += m;
    }
    return acc;
}

Poly Poly::substitute(std::size_t v, const Poly &value) const
{
    check_arity(*this, value);
    auto coeffs = coefficients_in(v);
    Poly acc(arity_);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * value;
        acc += coeffs[k];
    }
    return acc;
}

Poly Poly::compose(std::span<const Poly> images) const
{
    if (images.size() != arity_) throw DomainError("substitution has wrong arity");
    if (terms_.empty()) return images.empty() ? Poly(0) : Poly(images[0].arity());
    std::size_t out_arity = images.empty() ? 0 : images[0].arity();
    std::vector<std::vector<Poly>> powers(arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
        if (images[i].arity() != out_arity) throw DomainError("substitution images differ in arity");
        powers[i].push_back(constant(out_arity, Scalar(1)));
    }
    Poly acc(out_arity);
    for (const auto &t : terms_) {
        Poly m = constant(out_arity, t.coef);
        for (std::size_t i = 0; i < arity_; ++i) {
            int e = t.exps[i];
            while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
            if (e) m = m * powers[i][e];
        }
        acc += m;
    }
    return acc;
}

Poly Poly::remap(std::size_t new_arity, std::span<const std::size_t> map) const
{
    if (map.size() != arity_) throw DomainError("remap has wrong arity");
    Poly r(new_arity);
    for (const auto &t : terms_) {
        Exponents e(new_arity, 0);
        for (std::size_t i = 0; i < arity_; ++i) {
            if (t.exps[i] == 0) continue;
            if (map[i] >= new_arity) throw DomainError("variable dropped by remap is used");
            e[map[i]] += t.exps[i];
        }
        r.terms_.push_back({std::move(e), t.coef});
    }
    r.normalize();
    return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t v) const
{
    int d = degree_in(v);
    std::vector<Poly> out(d < 0 ? 0 : d + 1, Poly(arity_));
    for (const auto &t : terms_) {
        Term s = t;
        s.exps[v] = 0;
        out[t.exps[v]].terms_.push_back(std::move(s));
    }
    for (auto &p : out) p.normalize();
    return out;
}

Poly Poly::from_coefficients_in(std::size_t arity, std::size_t v, const std::vector<Poly> &c)
{
    Poly r(arity);
    for (std::size_t k = 0; k < c.size(); ++k)
        for (const auto &t : c[k].terms_) {
            Term s = t;
            s.exps[v] += static_cast<int>(k);
            r.terms_.push_back(std::move(s));
        }
    r.normalize();
    return r;
}

Poly Poly::leading_coefficient_in(std::size_t v) const
{
    int d = degree_in(v);
    Poly r(arity_);
    for (const auto &t : terms_)
        if (t.exps[v] == d) {
            Term s = t;
            s.exps[v] = 0;
            r.terms_.push_back(std::move(s));
        }
    r.normalize();
    return r;
}

std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) s += " + ";
        s += terms_[k].coef.str();
        for (std::size_t i = 0; i < arity_; ++i)
            if (terms_[k].exps[i]) s += "*x" + std::to_string(i) + "^" + std::to_string(terms_[k].exps[i]);
    }
    return s;
}

std::optional<Poly> divide_exact(const Poly &a, const Poly &b)
{
    check_arity(a, b);
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return Poly(a.arity());
    if (auto c = b.as_constant()) return a * c->inverse();
    const Term &lb = b.leading_term();
    int db = total_degree(lb.exps);
    Scalar inv = lb.coef.inverse();
    // remainder kept ordered so each step touches only |b| entries
    auto greater = [](const Exponents &x, const Exponents &y) { return grlex_compare(x, y) > 0; };
    std::map<Exponents, Scalar, decltype(greater)> r(greater);
    for (const auto &t : a.terms()) r.emplace(t.exps, t.coef);
    std::vector<Term> q;
    while (!r.empty()) {
        auto top = r.begin();
        if (total_degree(top->first) < db) return std::nullopt;
        Exponents e(a.arity());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = top->first[i] - lb.exps[i];
            if (e[i] < 0) return std::nullopt;
        }
        Scalar c = top->second * inv;
        for (const auto &t : b.terms()) {
            Exponents m = add_exps(e, t.exps);
            auto it = r.find(m);
            Scalar d = c * t.coef;
            if (it == r.end()) {
                r.emplace(std::move(m), -d);
            } else {
                it->second -= d;
                if (it->second.is_zero()) r.erase(it);
            }
        }
        q.push_back({std::move(e), std::move(c)});
    }
    return Poly::from_terms(a.arity(), std::move(q));
}

Poly divide_or_throw(const Poly &a, const Poly &b)
{
    auto q = divide_exact(a, b);
    if (!q) throw InconsistentData("inexact polynomial division");
    return *q;
}

Poly pseudo_remainder(const Poly &a, const Poly &b, std::size_t v)
{
    check_arity(a, b);
    int db = b.degree_in(v);
    if (db < 0) throw DomainError("pseudo-remainder by zero");
    if (db == 0) return Poly(a.arity());
    Poly lb = b.leading_coefficient_in(v);
    Poly r = a;
    int e = a.degree_in(v) - db + 1;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Poly lr = r.leading_coefficient_in(v);
        Exponents sh(a.arity(), 0);
        sh[v] = dr - db;
        r = lb * r - (lr * Poly::monomial(sh, Scalar(1))) * b;
        --e;
    }
    if (e > 0) r = lb.pow(static_cast<unsigned>(e)) * r;
    return r;
}

namespace {

Poly monomial_gcd(const Term &m, const Poly &p)
{
    Exponents e = m.exps;
    for (const auto &t : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], t.exps[i]);
    return Poly::monomial(e, Scalar(1));
}

// Last nonzero subresultant-PRS remainder of primitive a, b in v. Returns a
// constant when the gcd is free of v.
Poly subresultant_gcd(Poly a, Poly b, std::size_t v)
{
    std::size_t n = a.arity();
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    Poly g = Poly::constant(n, Scalar(1)), h = Poly::constant(n, Scalar(1));
    while (true) {
        int delta = a.degree_in(v) - b.degree_in(v);
        Poly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) return b;
        if (r.degree_in(v) == 0) return Poly::constant(n, Scalar(1));
        a = b;
        b = divide_or_throw(r, g * h.pow(static_cast<unsigned>(delta)));
        g = a.leading_coefficient_in(v);
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = divide_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
}

using Dense = std::vector<Scalar>;

void trim(Dense &d)
{
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

// a with every variable except v replaced by point[i]
Dense specialize(const Poly &a, std::size_t v, const std::vector<Scalar> &point)
{
    Dense d(static_cast<std::size_t>(std::max(a.degree_in(v), 0)) + 1, Scalar(0));
    for (const auto &t : a.terms()) {
        Scalar c = t.coef;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (i != v && t.exps[i]) c *= point[i].pow(t.exps[i]);
        d[static_cast<std::size_t>(t.exps[v])] += c;
    }
    trim(d);
    return d;
}

int dense_gcd_degree(Dense a, Dense b)
{
    while (!b.empty()) {
        Scalar inv = b.back().inverse();
        while (a.size() >= b.size()) {
            Scalar q = a.back() * inv;
            std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Upper bound for deg_v gcd(a, b) from a specialization of the other
// variables that keeps both leading coefficients in v alive; -1 if none found.
int gcd_degree_bound(const Poly &a, const Poly &b, std::size_t v)
{
    int da = a.degree_in(v), db = b.degree_in(v);
    for (long seed = 0; seed < 4; ++seed) {
        std::vector<Scalar> point;
        for (std::size_t i = 0; i < a.arity(); ++i) point.push_back(Scalar(static_cast<long>(3 + 7 * seed + 11 * i + i * i)));
        Dense sa = specialize(a, v, point), sb = specialize(b, v, point);
        if (static_cast<int>(sa.size()) - 1 != da || static_cast<int>(sb.size()) - 1 != db) continue;
        return dense_gcd_degree(sa, sb);
    }
    return -1;
}

} // namespace

Poly content_in(const Poly &a, std::size_t v)
{
    Poly c(a.arity());
    for (const auto &k : a.coefficients_in(v)) {
        if (k.is_zero()) continue;
        c = gcd(c, k);
        if (c.is_one()) break;
    }
    return c;
}

namespace {

// gcd(a, b) when it is known not to involve v. Specializing v gives a
// multiple of the gcd; when that multiple divides both inputs it is the gcd.
Poly gcd_free_of(const Poly &a, const Poly &b, std::size_t v)
{
    Poly c = Poly::constant(a.arity(), Scalar(2));
    Poly sa = a.depends_on(v) ? a.substitute(v, c) : a, sb = b.depends_on(v) ? b.substitute(v, c) : b;
    if (!sa.is_zero() && !sb.is_zero()) {
        Poly h = gcd(sa, sb);
        if (h.is_one() || (divide_exact(a, h) && divide_exact(b, h))) return h;
    }
    Poly ca = a.depends_on(v) ? content_in(a, v) : a, cb = b.depends_on(v) ? content_in(b, v) : b;
    return gcd(ca, cb);
}

} // namespace

Poly gcd(const Poly &a, const Poly &b)
{
    check_arity(a, b);
    std::size_t n = a.arity();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(n, Scalar(1));
    if (a.size() == 1) return monomial_gcd(a.leading_term(), b);
    if (b.size() == 1) return monomial_gcd(b.leading_term(), a);
    if (a == b) return a.monic();

    for (std::size_t k = 0; k < n; ++k)
        if (a.depends_on(k) != b.depends_on(k)) return gcd_free_of(a, b, k);
    // PRS variable: smallest positive degree bound; a zero bound drops the variable
    std::size_t v = n;
    int best = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!a.depends_on(k)) continue;
        int bound = gcd_degree_bound(a, b, k);
        if (bound == 0) return gcd_free_of(a, b, k);
        if (bound < 0) bound = std::max(a.degree_in(k), b.degree_in(k));
        if (v == n || bound < best) {
            v = k;
            best = bound;
        }
    }

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly pa = divide_or_throw(a, ca), pb = divide_or_throw(b, cb);
    Poly c = gcd(ca, cb);
    Poly g = subresultant_gcd(pa, pb, v);
    if (g.degree_in(v) <= 0)
        g = Poly::constant(n, Scalar(1));
    else
        g = divide_or_throw(g, content_in(g, v));
    return (c * g).monic();
}

Poly squarefree_part(const Poly &a)
{
    if (a.is_constant()) return a.is_zero() ? a : Poly::constant(a.arity(), Scalar(1));
    Poly g = a;
    for (std::size_t v = 0; v < a.arity(); ++v)
        if (a.depends_on(v)) g = gcd(g, a.derivative(v));
    return divide_or_throw(a, g).monic();
}

std::pair<Poly, Poly> divide_univariate(const Poly &a, const Poly &b, std::size_t v)
{
    check_arity(a, b);
    int db = b.degree_in(v);
    if (db < 0) throw DomainError("division by zero polynomial");
    auto lb = b.leading_coefficient_in(v).as_constant();
    if (!lb) throw DomainError("divisor leading coefficient is not constant");
    Scalar inv = lb->inverse();
    Poly q(a.arity()), r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Exponents sh(a.arity(), 0);
        sh[v] = dr - db;
        Poly t = r.leading_coefficient_in(v) * Poly::monomial(sh, inv);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

namespace {

Poly bareiss_determinant(std::vector<std::vector<Poly>> m, std::size_t arity)
{
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(arity, Scalar(1));
    Poly prev = Poly::constant(arity, Scalar(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Poly(arity);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_or_throw(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly(arity);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace

Poly resultant(const Poly &a, const Poly &b, std::size_t v)
{
    check_arity(a, b);
    std::size_t arity = a.arity();
    if (a.is_zero() || b.is_zero()) return Poly(arity);
    int m = a.degree_in(v), n = b.degree_in(v);
    if (m == 0) return a.pow(static_cast<unsigned>(n));
    if (n == 0) return b.pow(static_cast<unsigned>(m));
    auto ca = a.coefficients_in(v), cb = b.coefficients_in(v);
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size, Poly(arity)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) syl[r][r + k] = ca[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) syl[n + r][r + k] = cb[n - k];
    return bareiss_determinant(std::move(syl), arity);
}

Poly real_part(const Poly &p)
{
    std::vector<Term> t;
    for (const auto &s : p.terms())
        if (sgn(s.coef.re()) != 0) t.push_back({s.exps, Scalar(s.coef.re())});
    return Poly::from_terms(p.arity(), std::move(t));
}

Poly imag_part(const Poly &p)
{
    std::vector<Term> t;
    for (const auto &s : p.terms())
        if (sgn(s.coef.im()) != 0) t.push_back({s.exps, Scalar(s.coef.im())});
    return Poly::from_terms(p.arity(), std::move(t));
}

} // namespace foliage::exact
