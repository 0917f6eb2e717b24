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

#include "foliage/integrability/report.hpp"

#include "foliage/error.hpp"
#include "foliage/integrability/search.hpp"

namespace foliage::integrability {

using godbillon::length_certificate_check;

namespace {

// alpha with d omega = omega ^ alpha along a single coordinate direction.
KForm simple_alpha(const KForm &omega)
{
    RatFunc A = omega[0], B = omega[1];
    RatFunc curl = B.derivative(0) - A.derivative(1);
    KForm alpha(2, 1, omega.arity());
    if (!B.is_zero())
        alpha.set({0}, -(curl / B));
    else
        alpha.set({1}, curl / A);
    return alpha;
}

} // namespace

RankReport rank_report(const PlanarFoliation &fol, const Budgets &budgets)
{
    RankReport out;
    out.budget_used = budgets;
    KForm omega = fol.omega();
    out.darboux = darboux_search(fol, budgets.darboux);
    for (const auto &n : out.darboux.notes) out.notes.push_back(n);
    if (out.darboux.budget_exceeded) out.notes.push_back("darboux search stopped at the unknown limit");

    auto claim = [&](int rank, RankCertificate cert) {
        out.rank_bound = rank;
        out.certificate = std::move(cert);
        out.verified = true;
        return out;
    };

    if (auto h = meromorphic_integral_search(fol, out.darboux); h && planar::is_first_integral(*h, fol))
        return claim(0, FirstIntegral{*h});
    if (auto s = integrating_factor_exponents(out.darboux)) {
        godbillon::LengthOne c{s->F, s->k};
        if (length_certificate_check(omega, c)) return claim(1, c);
    }
    if (auto a = liouvillian_alpha_search(fol, out.darboux, budgets.g)) {
        godbillon::LengthTwo c{a->alpha};
        if (length_certificate_check(omega, c)) return claim(2, c);
    }
    KForm alpha = simple_alpha(omega);
    if (auto b = riccati_beta_complete(omega, alpha, budgets.beta)) {
        godbillon::LengthThree c{alpha, b->beta};
        if (length_certificate_check(omega, c)) return claim(3, c);
    }
    out.notes.push_back("no certificate within budget; this is not a lower bound");
    return out;
}

RankReport rank_report(const KForm &omega, const exact::Space &space, const Budgets &budgets)
{
    space.validate();
    if (omega.degree() != 1 || omega.dim() != space.dim() || omega.arity() != space.arity())
        throw DomainError("omega does not match the declared variables");
    if (!godbillon::frobenius_check(omega)) throw DomainError("omega is not integrable");
    if (space.dim() != 2) {
        RankReport out;
        out.budget_used = budgets;
        out.notes.push_back("certificate search is implemented for two variables; inconclusive");
        return out;
    }
    RatFunc A = omega[0], B = omega[1];
    Poly L = exact::divide_or_throw(A.den() * B.den(), exact::gcd(A.den(), B.den()));
    Poly a = (A * RatFunc(L)).num(), b = (B * RatFunc(L)).num();
    Poly g = exact::gcd(a, b);
    RankReport out;
    if (g.depends_on(0) || g.depends_on(1)) {
        a = exact::divide_or_throw(a, g);
        b = exact::divide_or_throw(b, g);
        out = rank_report(PlanarFoliation(space, a, b), budgets);
        out.notes.push_back("omega divided by " + g.str() + " before the search");
    } else {
        out = rank_report(PlanarFoliation(space, a, b), budgets);
    }
    return out;
}

} // namespace foliage::integrability
