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

#include "foliage/integrability/darboux.hpp"

#include "foliage/error.hpp"
#include "foliage/exact/linalg.hpp"
#include "foliage/exact/roots.hpp"
#include "identity.hpp"

#include <algorithm>
#include <numeric>

namespace foliage::integrability {

using detail::choose;
using detail::plane_monomials;
using detail::solve_identity;
using exact::Exponents;
using exact::Matrix;

Poly apply_dual(const PlanarFoliation &fol, const Poly &f)
{
    return fol.B() * f.derivative(0) - fol.A() * f.derivative(1);
}

Poly dual_divergence(const PlanarFoliation &fol) { return fol.B().derivative(0) - fol.A().derivative(1); }

namespace {

constexpr std::size_t kMaxUnknowns = 400;

class Collector {
public:
    Collector(const PlanarFoliation &fol, DarbouxData &out) : fol_(fol), out_(out) {}

    // Adds f when it is a nonconstant Darboux polynomial coprime to the others.
    bool offer(const Poly &raw)
    {
        if (raw.is_zero() || raw.is_constant()) return false;
        Poly f = raw.monic();
        auto K = exact::divide_exact(apply_dual(fol_, f), f);
        if (!K) return false;
        for (const auto &p : out_.pairs)
            if (!exact::gcd(p.f, f).is_constant()) return false;
        out_.pairs.push_back({f, *K});
        return true;
    }

private:
    const PlanarFoliation &fol_;
    DarbouxData &out_;
};

void compositions(int total, std::size_t parts, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = total; k >= 0; --k) {
        cur.push_back(k);
        compositions(total - k, parts, cur, out);
        cur.pop_back();
    }
}

// Linear factors over Q(i) of a binary form in the first two variables.
std::vector<Poly> linear_factors(const Poly &c)
{
    std::size_t n = c.arity();
    std::vector<exact::Term> uni;
    for (const auto &t : c.terms()) uni.push_back({{t.exps[0]}, t.coef});
    Poly u = Poly::from_terms(1, std::move(uni));
    std::vector<Poly> out;
    Poly x = Poly::variable(n, 0), y = Poly::variable(n, 1);
    for (const auto &r : exact::gaussian_roots(u)) out.push_back(x - y * r);
    if (u.total_degree() < c.total_degree()) out.push_back(y);
    return out;
}

// Coefficient of the plane monomial e in p, for parameter-free p.
Scalar coeff(const Poly &p, const Exponents &e) { return p.coefficient(e); }

// Values of t for which M(t) u = b(t) may gain a solution (or a kernel when
// b = 0), read off a fraction-free elimination over Q(i)[t].
std::vector<Scalar> pencil_candidates(Matrix<Poly> m, std::size_t ncols, bool &generic)
{
    auto ech = exact::bareiss_echelon(m, ncols, 1);
    std::vector<Scalar> out;
    auto add_roots = [&](const Poly &p) {
        if (p.is_zero() || p.is_constant()) return;
        for (auto &r : exact::gaussian_roots(p)) out.push_back(r);
    };
    for (std::size_t r = 0; r < ech.rank; ++r) add_roots(m[r][ech.pivot_columns[r]]);
    bool homogeneous = m.empty() || m[0].size() == ncols;
    if (homogeneous) {
        generic = ech.rank < ncols;
    } else {
        Poly g(1);
        for (std::size_t r = ech.rank; r < m.size(); ++r) g = exact::gcd(g, m[r][ncols]);
        generic = g.is_zero();
        add_roots(g);
    }
    if (generic) out.push_back(Scalar(0));
    std::sort(out.begin(), out.end(), [](const Scalar &a, const Scalar &b) { return compare(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly lift_t(const Scalar &c0, const Scalar &c1)
{
    Poly p = Poly::constant(1, c0);
    if (!c1.is_zero()) p += Poly::monomial({1}, c1);
    return p;
}

struct Stage2 {
    const PlanarFoliation &fol;
    Collector &collect;
    DarbouxData &out;
    int m;
    Poly Pm, Qm;

    // (X - K_top - t) applied to a monomial, split into t^0 and t^1 parts.
    std::pair<Poly, Poly> column(const Poly &mu, const Poly &k_top) const
    {
        return {apply_dual(fol, mu) - k_top * mu, -mu};
    }

    std::vector<Exponents> row_index(const std::vector<std::pair<Poly, Poly>> &cols, const Poly &b0,
                                     const Poly &b1) const
    {
        std::vector<Exponents> rows;
        auto add = [&](const Poly &p) {
            for (const auto &t : p.terms()) rows.push_back(t.exps);
        };
        for (const auto &c : cols) {
            add(c.first);
            add(c.second);
        }
        add(b0);
        add(b1);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        return rows;
    }

    // f = top + sum u_j mu_j with cofactor k_top + t (t free only when m = 2).
    void solve(const Poly &top, const Poly &k_top, const std::vector<Poly> &monos)
    {
        bool has_t = m == 2;
        std::vector<std::pair<Poly, Poly>> cols;
        for (const auto &mu : monos) cols.push_back(column(mu, k_top));
        Poly b0 = -(apply_dual(fol, top) - k_top * top), b1 = top;
        bool homogeneous = top.is_zero();
        auto rows = row_index(cols, b0, b1);
        std::size_t n = monos.size();

        auto at = [&](const Scalar &t) {
            Matrix<Scalar> a(rows.size(), std::vector<Scalar>(n));
            std::vector<Scalar> b(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t j = 0; j < n; ++j) a[i][j] = coeff(cols[j].first, rows[i]) + t * coeff(cols[j].second, rows[i]);
                b[i] = coeff(b0, rows[i]) + t * coeff(b1, rows[i]);
            }
            auto sol = exact::solve_linear(std::move(a), std::move(b), n, Scalar(0), Scalar(1));
            if (!sol) return;
            auto build = [&](const std::vector<Scalar> &u) {
                Poly f = top;
                for (std::size_t j = 0; j < n; ++j)
                    if (!u[j].is_zero()) f += monos[j] * u[j];
                return f;
            };
            if (homogeneous)
                for (const auto &v : sol->kernel) collect.offer(build(v));
            else
                collect.offer(build(sol->particular));
        };

        if (!has_t) {
            at(Scalar(0));
            return;
        }
        Matrix<Poly> pm(rows.size(), std::vector<Poly>(n + (homogeneous ? 0 : 1), Poly(1)));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < n; ++j) pm[i][j] = lift_t(coeff(cols[j].first, rows[i]), coeff(cols[j].second, rows[i]));
            if (!homogeneous) pm[i][n] = lift_t(coeff(b0, rows[i]), coeff(b1, rows[i]));
        }
        bool generic = false;
        auto ts = pencil_candidates(std::move(pm), n, generic);
        if (generic) out.notes.push_back("cofactor family at degree " + std::to_string(top.total_degree()) + "; only t = 0 tried");
        for (const auto &t : ts) at(t);
    }

    void degree(int d)
    {
        std::size_t arity = fol.A().arity();
        Poly x = Poly::variable(arity, 0), y = Poly::variable(arity, 1);
        Poly C = x * Qm - y * Pm;
        if (C.is_zero()) {
            // radial top part: every top is invariant, cofactor top d*R
            auto R = exact::divide_exact(Pm, x);
            if (!R) throw InconsistentData("radial top part without x factor");
            auto monos = plane_monomials(arity, 0, d);
            if (monos.size() > kMaxUnknowns) {
                out.budget_exceeded = true;
                return;
            }
            solve(Poly(arity), *R * Scalar(d), monos);
            return;
        }
        auto factors = linear_factors(C);
        if (factors.empty()) return;
        std::vector<std::vector<int>> exps;
        std::vector<int> cur;
        compositions(d, factors.size(), cur, exps);
        auto monos = plane_monomials(arity, 0, d - 1);
        if (monos.size() + 1 > kMaxUnknowns) {
            out.budget_exceeded = true;
            return;
        }
        for (const auto &e : exps) {
            Poly top = Poly::constant(arity, Scalar(1));
            for (std::size_t i = 0; i < factors.size(); ++i) top *= factors[i].pow(static_cast<unsigned>(e[i]));
            Poly k_top(arity);
            if (m >= 1) {
                auto q = exact::divide_exact(Pm * top.derivative(0) + Qm * top.derivative(1), top);
                if (!q) continue;
                k_top = *q;
            }
            solve(top, k_top, monos);
        }
    }
};

} // namespace

DarbouxData darboux_search(const PlanarFoliation &fol, int dmax, const std::vector<Poly> &hints)
{
    if (dmax < 1) throw DomainError("darboux search needs dmax >= 1");
    DarbouxData out;
    std::size_t arity = fol.A().arity();
    out.arity = arity;
    out.divergence = dual_divergence(fol);
    Collector collect(fol, out);

    collect.offer(Poly::variable(arity, 0));
    collect.offer(Poly::variable(arity, 1));
    for (const auto &h : hints) {
        if (h.arity() != arity) throw DomainError("hint has the wrong arity");
        collect.offer(h);
    }

    Poly P = fol.B(), Q = -fol.A();
    int m = std::max(P.total_degree(), Q.total_degree());
    bool params = false;
    for (std::size_t v = 2; v < arity; ++v) params = params || P.depends_on(v) || Q.depends_on(v);
    if (params || m > 2) {
        out.notes.push_back("automatic search needs a parameter-free field of degree <= 2; hints and axes only");
        return out;
    }
    Stage2 stage{fol, collect, out, m, P.homogeneous_part(m), Q.homogeneous_part(m)};
    for (int d = 1; d <= dmax; ++d) stage.degree(d);
    return out;
}

bool verify_darboux(const PlanarFoliation &fol, const DarbouxData &data)
{
    for (std::size_t i = 0; i < data.pairs.size(); ++i) {
        const auto &p = data.pairs[i];
        if (p.f.is_constant() || apply_dual(fol, p.f) != p.K * p.f) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!exact::gcd(p.f, data.pairs[j].f).is_constant()) return false;
    }
    return data.divergence == dual_divergence(fol);
}

std::optional<ExponentSolution> integrating_factor_exponents(const DarbouxData &data)
{
    std::vector<Poly> cols;
    for (const auto &p : data.pairs) cols.push_back(p.K);
    Poly rhs = data.divergence.is_zero() ? Poly(data.arity) : -data.divergence;
    auto sol = solve_identity(cols, rhs);
    if (!sol) return std::nullopt;
    ExponentSolution out;
    out.rho = choose(*sol, [](std::size_t) { return Scalar(-1); });
    out.kernel = sol->kernel;
    mpz_class k = 1;
    for (const auto &r : out.rho) {
        if (!r.is_real()) return std::nullopt;
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), r.re().get_den().get_mpz_t());
    }
    if (!k.fits_sint_p()) return std::nullopt;
    out.k = static_cast<int>(k.get_si());
    out.F = RatFunc::constant(data.arity, Scalar(1));
    for (std::size_t i = 0; i < out.rho.size(); ++i) {
        mpq_class e = out.rho[i].re() * out.k;
        out.F *= RatFunc(data.pairs[i].f).pow(e.get_num().get_si());
    }
    return out;
}

std::optional<RatFunc> meromorphic_integral_search(const PlanarFoliation &fol, const DarbouxData &data)
{
    std::vector<Poly> cols;
    for (const auto &p : data.pairs) cols.push_back(p.K);
    auto sol = solve_identity(cols, Poly(data.arity));
    if (!sol) return std::nullopt;
    for (const auto &v : sol->kernel) {
        if (!std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_real(); })) continue;
        mpz_class den = 1, num = 0;
        for (const auto &s : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.re().get_den().get_mpz_t());
        for (const auto &s : v) {
            mpz_class n = mpz_class(s.re() * den);
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        }
        auto first = std::find_if(v.begin(), v.end(), [](const Scalar &s) { return !s.is_zero(); });
        if (sgn(first->re()) < 0) num = -num;
        RatFunc h = RatFunc::constant(data.arity, Scalar(1));
        bool fits = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_class e = mpz_class(v[i].re() * den) / num;
            fits = fits && e.fits_slong_p();
            if (fits) h *= RatFunc(data.pairs[i].f).pow(e.get_si());
        }
        if (fits && planar::is_first_integral(h, fol)) return h;
    }
    return std::nullopt;
}

} // namespace foliage::integrability
