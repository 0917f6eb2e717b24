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

#include "foliage/integrability/search.hpp"

#include "foliage/error.hpp"
#include "foliage/godbillon/godbillon.hpp"
#include "identity.hpp"

#include <algorithm>

namespace foliage::integrability {

using calculus::dlog;
using calculus::ext_d;
using calculus::wedge;
using detail::choose;
using detail::plane_monomials;
using detail::solve_identity;

namespace {

constexpr std::size_t kMaxUnknowns = 400;

// Exponent vectors e with sum e_i deg_i <= budget, by increasing degree.
std::vector<std::vector<int>> denominator_exponents(const std::vector<int> &deg, int budget)
{
    std::vector<std::pair<int, std::vector<int>>> all;
    std::vector<int> cur;
    auto rec = [&](auto &&self, std::size_t i, int used) -> void {
        if (i == deg.size()) {
            all.push_back({used, cur});
            return;
        }
        for (int e = 0; used + e * deg[i] <= budget; ++e) {
            cur.push_back(e);
            self(self, i + 1, used + e * deg[i]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::stable_sort(all.begin(), all.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<std::vector<int>> out;
    for (auto &p : all) out.push_back(std::move(p.second));
    return out;
}

Poly lcm(const Poly &a, const Poly &b) { return exact::divide_or_throw(a * b, exact::gcd(a, b)); }

RatFunc dual_apply(const RatFunc &a, const RatFunc &b, const RatFunc &h)
{
    return h.derivative(0) * b - h.derivative(1) * a;
}

} // namespace

std::optional<LiouvillianAlpha> liouvillian_alpha_search(const PlanarFoliation &fol, const DarbouxData &data,
                                                         int dmax)
{
    if (data.pairs.empty()) return std::nullopt;
    std::size_t arity = data.arity, n = data.pairs.size();
    KForm omega = fol.omega();
    auto attempt = [&](const std::vector<Poly> &cols, const Poly &rhs, const std::vector<Poly> &numer,
                       const Poly &den) -> std::optional<LiouvillianAlpha> {
        auto sol = solve_identity(cols, rhs);
        if (!sol) return std::nullopt;
        auto u = choose(*sol, [&](std::size_t j) { return j < n ? Scalar(-1) : Scalar(0); });
        LiouvillianAlpha out;
        out.rho.assign(u.begin(), u.begin() + static_cast<long>(n));
        Poly N(arity);
        for (std::size_t j = 0; j < numer.size(); ++j)
            if (!u[n + j].is_zero()) N += numer[j] * u[n + j];
        out.g = RatFunc(N, den);
        out.alpha = ext_d(KForm::function(out.g, 2));
        for (std::size_t i = 0; i < n; ++i)
            if (!out.rho[i].is_zero()) out.alpha += RatFunc::constant(arity, out.rho[i]) * dlog(RatFunc(data.pairs[i].f), 2);
        if (!godbillon::length_certificate_check(omega, godbillon::LengthTwo{out.alpha})) return std::nullopt;
        return out;
    };

    std::vector<Poly> ks;
    for (const auto &p : data.pairs) ks.push_back(p.K);
    Poly one = Poly::constant(arity, Scalar(1));
    if (auto r = attempt(ks, -data.divergence, {}, one)) return r;

    std::vector<int> deg;
    for (const auto &p : data.pairs) deg.push_back(p.f.total_degree());
    auto numer = plane_monomials(arity, 1, dmax);
    if (n + numer.size() > kMaxUnknowns) return std::nullopt;
    for (const auto &e : denominator_exponents(deg, dmax)) {
        // D (sum rho K + div) + X(N) - N sum e K = 0
        Poly D = one, eK(arity);
        for (std::size_t i = 0; i < n; ++i) {
            D *= data.pairs[i].f.pow(static_cast<unsigned>(e[i]));
            eK += data.pairs[i].K * Scalar(e[i]);
        }
        std::vector<Poly> cols;
        for (const auto &k : ks) cols.push_back(D * k);
        for (const auto &mu : numer) cols.push_back(apply_dual(fol, mu) - mu * eK);
        if (auto r = attempt(cols, -(D * data.divergence), numer, D)) return r;
    }
    return std::nullopt;
}

std::optional<RiccatiBeta> riccati_beta_complete(const KForm &omega, const KForm &alpha, int dmax)
{
    if (omega.degree() != 1 || alpha.degree() != 1 || omega.dim() != 2 || alpha.dim() != 2)
        throw DomainError("riccati completion works with 1-forms in two variables");
    if (omega.is_zero()) throw DomainError("omega = 0");
    if (dmax < 0) throw DomainError("negative degree budget");
    if (ext_d(omega) != wedge(omega, alpha)) throw DomainError("d omega = omega ^ alpha does not hold");
    std::size_t arity = omega.arity();
    RatFunc A = omega[0], B = omega[1];
    RatFunc a = ext_d(alpha).component({0, 1});
    KForm beta0(2, 1, arity);
    if (!a.is_zero()) {
        if (!B.is_zero())
            beta0.set({0}, -(a / B));
        else
            beta0.set({1}, a / A);
    }
    RatFunc c = wedge(omega, alpha).component({0, 1});
    RatFunc r = (wedge(alpha, beta0) - ext_d(beta0)).component({0, 1});

    Poly dens = Poly::constant(arity, Scalar(1));
    for (const RatFunc *f : {&A, &B, &c, &r}) dens *= f->den();
    for (std::size_t i = 0; i < 2; ++i) {
        dens *= alpha[i].den();
        dens *= beta0[i].den();
    }
    Poly S = exact::squarefree_part(dens);
    RatFunc Sr(S), XS = dual_apply(A, B, Sr);
    Poly L = lcm(lcm(A.den(), B.den()), lcm(c.den(), r.den()));
    RatFunc Lr(L);

    std::optional<RiccatiBeta> out;
    for (int e = 0; e <= dmax; ++e) {
        auto monos = plane_monomials(arity, 0, dmax + e * S.total_degree());
        if (monos.size() > kMaxUnknowns) break;
        // X(N) S - e N X(S) + 2 c N S = r S^(e+1)
        std::vector<Poly> cols;
        bool polynomial = true;
        for (const auto &mu : monos) {
            RatFunc m(mu);
            RatFunc col = (dual_apply(A, B, m) * Sr - m * XS.scaled(Scalar(e)) + (c * m * Sr).scaled(Scalar(2))) * Lr;
            polynomial = polynomial && col.is_polynomial();
            cols.push_back(col.num());
        }
        RatFunc rhs = r * Sr.pow(e + 1) * Lr;
        if (!polynomial || !rhs.is_polynomial()) throw InconsistentData("riccati ansatz did not clear denominators");
        auto sol = solve_identity(cols, rhs.num());
        if (!sol) continue;
        RatFunc Se = Sr.pow(e);
        auto h_of = [&](const std::vector<Scalar> &u) {
            Poly N(arity);
            for (std::size_t j = 0; j < monos.size(); ++j)
                if (!u[j].is_zero()) N += monos[j] * u[j];
            return RatFunc(N) / Se;
        };
        if (!out) {
            out.emplace();
            out->beta = beta0 + h_of(sol->particular) * omega;
            out->denominator_power = e;
        }
        out->homogeneous.clear();
        for (const auto &v : sol->kernel) out->homogeneous.push_back(h_of(v) * omega);
    }
    if (out && !godbillon::length_certificate_check(omega, godbillon::LengthThree{alpha, out->beta}))
        throw InconsistentData("completed beta failed re-verification");
    return out;
}

} // namespace foliage::integrability
