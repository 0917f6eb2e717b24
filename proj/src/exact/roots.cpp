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

#include "foliage/exact/roots.hpp"

#include "foliage/error.hpp"

#include <algorithm>

namespace foliage::exact {

namespace {

using Dense = std::vector<mpq_class>; // index = power

Dense to_dense(const Poly &p)
{
    Dense d(static_cast<std::size_t>(std::max(p.total_degree(), 0) + 1), mpq_class(0));
    for (const auto &t : p.terms()) {
        if (!t.coef.is_real()) throw DomainError("expected rational coefficients");
        d[static_cast<std::size_t>(t.exps[0])] = t.coef.re();
    }
    return d;
}

void trim(Dense &d)
{
    while (d.size() > 1 && sgn(d.back()) == 0) d.pop_back();
}

bool is_zero(const Dense &d) { return d.size() == 1 && sgn(d[0]) == 0; }

mpq_class eval(const Dense &d, const mpq_class &x)
{
    mpq_class acc = 0;
    for (std::size_t k = d.size(); k-- > 0;) acc = acc * x + d[k];
    return acc;
}

Dense derivative(const Dense &d)
{
    if (d.size() == 1) return Dense{0};
    Dense r(d.size() - 1);
    for (std::size_t k = 1; k < d.size(); ++k) r[k - 1] = d[k] * static_cast<long>(k);
    return r;
}

Dense remainder(Dense a, const Dense &b)
{
    while (a.size() >= b.size() && !is_zero(a)) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a.pop_back();
        if (a.empty()) a.push_back(0);
        trim(a);
        if (a.size() < b.size()) break;
    }
    trim(a);
    return a;
}

// Positive multiple with coprime integer coefficients; signs are unchanged.
Dense primitive(Dense d)
{
    mpz_class den = 1, num = 0;
    for (const auto &c : d) den = lcm(den, mpz_class(c.get_den()));
    for (auto &c : d) {
        c *= den;
        num = gcd(num, mpz_class(c.get_num()));
    }
    if (num != 0)
        for (auto &c : d) c /= num;
    return d;
}

int sign_changes(const std::vector<Dense> &chain, const mpq_class &x)
{
    int changes = 0, last = 0;
    for (const auto &p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

struct Isolator {
    Dense p;
    std::vector<Dense> chain;
    mpz_class lead; // leading coefficient after clearing denominators
    std::vector<mpq_class> found;
    bool deflate = false;
    mpq_class hit;

    void search(const mpq_class &lo, const mpq_class &hi, int vlo, int vhi)
    {
        if (deflate || vlo - vhi <= 0) return;
        mpq_class width = hi - lo;
        if (width * lead < 1) {
            mpq_class scaled = lo * lead;
            mpz_class m = scaled.get_num() / scaled.get_den(); // truncation toward zero
            if (m * scaled.get_den() > scaled.get_num()) m -= 1; // floor
            for (mpz_class k = m + 1;; ++k) {
                mpq_class cand(k, lead);
                cand.canonicalize();
                if (cand >= hi) break;
                if (sgn(eval(p, cand)) == 0) found.push_back(cand);
            }
            return;
        }
        mpq_class mid = (lo + hi) / 2;
        if (sgn(eval(p, mid)) == 0) {
            deflate = true;
            hit = mid;
            return;
        }
        int vmid = sign_changes(chain, mid);
        search(lo, mid, vlo, vmid);
        search(mid, hi, vmid, vhi);
    }
};

Dense squarefree(const Dense &p)
{
    // p / gcd(p, p')
    Dense a = p, b = derivative(p);
    trim(b);
    while (!is_zero(b)) {
        Dense r = remainder(a, b);
        a = b;
        b = r;
    }
    if (a.size() == 1) return p;
    // exact division p / a
    Dense q(p.size() - a.size() + 1, mpq_class(0)), r = p;
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = r[k + a.size() - 1] / a.back();
        for (std::size_t j = 0; j < a.size(); ++j) r[k + j] -= q[k] * a[j];
    }
    return q;
}

} // namespace

std::vector<mpq_class> rational_roots(const Poly &poly)
{
    if (poly.arity() != 1) throw DomainError("rational_roots expects a univariate polynomial");
    if (poly.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<mpq_class> roots;
    Dense p = to_dense(poly);
    trim(p);
    // factor out z^k
    std::size_t low = 0;
    while (low < p.size() && sgn(p[low]) == 0) ++low;
    if (low > 0) {
        roots.push_back(0);
        p.erase(p.begin(), p.begin() + static_cast<long>(low));
    }
    while (p.size() > 1) {
        p = squarefree(p);
        if (p.size() == 2) {
            roots.push_back(-p[0] / p[1]);
            break;
        }
        Dense ip = primitive(p);
        Isolator iso;
        iso.p = ip;
        iso.lead = abs(ip.back().get_num());
        iso.chain.push_back(ip);
        Dense d = derivative(ip);
        trim(d);
        iso.chain.push_back(primitive(d));
        while (iso.chain.back().size() > 1) {
            Dense r = remainder(iso.chain[iso.chain.size() - 2], iso.chain.back());
            for (auto &c : r) c = -c;
            if (is_zero(r)) break;
            iso.chain.push_back(primitive(r));
        }
        mpq_class bound = 0;
        for (const auto &c : ip) bound = std::max(bound, mpq_class(abs(c) / abs(ip.back())));
        bound += 1;
        iso.search(-bound, bound, sign_changes(iso.chain, -bound), sign_changes(iso.chain, bound));
        for (auto &r : iso.found) roots.push_back(r);
        if (!iso.deflate) break;
        roots.push_back(iso.hit);
        // restart on the deflated polynomial: divide by (z - hit) and drop the roots already found
        Dense q = p;
        auto divide_linear = [](Dense a, const mpq_class &r) {
            Dense out(a.size() - 1);
            mpq_class carry = 0;
            for (std::size_t k = a.size(); k-- > 1;) {
                carry = a[k] + carry * r;
                out[k - 1] = carry;
            }
            return out;
        };
        q = divide_linear(q, iso.hit);
        for (auto &r : iso.found) q = divide_linear(q, r);
        p = q;
        trim(p);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Scalar> gaussian_roots(const Poly &poly)
{
    if (poly.arity() != 1) throw DomainError("gaussian_roots expects a univariate polynomial");
    if (poly.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<Scalar> roots;
    if (poly.is_constant()) return roots;
    Poly p = squarefree_part(poly);
    auto push_sorted = [&roots] {
        std::sort(roots.begin(), roots.end(), [](const Scalar &a, const Scalar &b) { return compare(a, b) < 0; });
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    };
    int deg = p.total_degree();
    Scalar c0 = p.coefficient({0}), c1 = p.coefficient({1});
    if (deg == 1) {
        roots.push_back(-c0 / c1);
        return roots;
    }
    if (deg == 2) {
        Scalar a = p.coefficient({2});
        Scalar disc = c1 * c1 - Scalar(4) * a * c0;
        if (auto s = disc.sqrt()) {
            roots.push_back((-c1 + *s) / (Scalar(2) * a));
            roots.push_back((-c1 - *s) / (Scalar(2) * a));
        }
        push_sorted();
        return roots;
    }
    // z = a + i b, split into real and imaginary parts over Q[a, b]
    Poly a = Poly::variable(2, 0), b = Poly::variable(2, 1);
    Poly z = a + b * Scalar::imaginary_unit();
    std::vector<Poly> images{z};
    Poly big = p.compose(images);
    Poly u = real_part(big), v = imag_part(big);
    if (v.is_zero() || u.is_zero()) return roots;
    Poly res = resultant(u, v, 1);
    if (res.is_zero()) throw InconsistentData("degenerate resultant in root isolation");
    // b is absent from the resultant
    Poly ra = res.remap(1, std::vector<std::size_t>{0, 1});
    for (const auto &a0 : rational_roots(ra)) {
        Poly bvar = Poly::variable(1, 0);
        std::vector<Poly> sub{Poly::constant(1, Scalar(a0)), bvar};
        Poly ub = u.compose(sub), vb = v.compose(sub);
        Poly g = gcd(ub, vb);
        if (g.is_constant()) continue;
        for (const auto &b0 : rational_roots(g)) {
            Scalar cand(a0, b0);
            std::vector<Scalar> pt{cand};
            if (p.evaluate(pt).is_zero()) roots.push_back(cand);
        }
    }
    push_sorted();
    return roots;
}

} // namespace foliage::exact
