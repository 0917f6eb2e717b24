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

#include "foliage/godbillon/godbillon.hpp"

#include "foliage/error.hpp"

namespace foliage::godbillon {

using calculus::contract;
using calculus::ext_d;
using calculus::wedge;
using exact::Scalar;

long binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

KForm GVSequence::term(std::size_t j) const
{
    if (j == 0) return omega;
    if (j <= tail.size()) return tail[j - 1];
    return KForm(omega.dim(), 1, omega.arity());
}

int certificate_length(const Certificate &c) { return static_cast<int>(c.index()) + 1; }

namespace {

void require_one_form(const KForm &a, const KForm &omega, const char *what)
{
    if (a.degree() != 1 || a.dim() != omega.dim() || a.arity() != omega.arity())
        throw DomainError(std::string(what) + " must be a 1-form in the same space as omega");
}

// sum_{k=1}^{j} C(j,k) omega_k ^ omega_{j-k+1}
KForm binomial_sum(const GVSequence &seq, std::size_t j)
{
    KForm acc(seq.omega.dim(), 2, seq.omega.arity());
    for (std::size_t k = 1; k <= j; ++k) {
        KForm a = seq.term(k), b = seq.term(j - k + 1);
        if (a.is_zero() || b.is_zero()) continue;
        long c = binomial(static_cast<long>(j), static_cast<long>(k));
        acc += RatFunc::constant(seq.omega.arity(), Scalar(c)) * wedge(a, b);
    }
    return acc;
}

} // namespace

bool frobenius_check(const KForm &omega)
{
    if (omega.degree() != 1) throw DomainError("frobenius_check expects a 1-form");
    return wedge(omega, ext_d(omega)).is_zero();
}

KForm gv_rhs(const GVSequence &seq, std::size_t j)
{
    return wedge(seq.omega, seq.term(j + 1)) + binomial_sum(seq, j);
}

bool gv_verify(GVSequence &seq, int n)
{
    if (seq.omega.degree() != 1) throw DomainError("GV sequence base must be a 1-form");
    for (const auto &t : seq.tail) require_one_form(t, seq.omega, "GV tail term");
    for (int j = 0; j <= n; ++j) {
        std::size_t uj = static_cast<std::size_t>(j);
        if (ext_d(seq.term(uj)) != gv_rhs(seq, uj)) {
            seq.verified_to = j - 1;
            return false;
        }
    }
    seq.verified_to = n;
    return true;
}

KForm gv_extend(const GVSequence &seq, const VectorField &x)
{
    const KForm &omega = seq.omega;
    if (omega.degree() != 1) throw DomainError("GV sequence base must be a 1-form");
    if (!contract(x, omega).value().is_one()) throw DomainError("omega(X) != 1");
    std::size_t j = seq.tail.size();
    GVSequence check = seq;
    if (j > 0 && !gv_verify(check, static_cast<int>(j) - 1))
        throw InconsistentData("sequence prefix does not satisfy the recurrence");
    KForm theta = ext_d(seq.term(j)) - binomial_sum(seq, j);
    if (!wedge(omega, theta).is_zero()) throw InconsistentData("omega ^ theta != 0: no extension exists");
    KForm next = contract(x, theta);
    if (wedge(omega, next) != theta) throw InconsistentData("extension postcondition failed");
    return next;
}

bool length_certificate_check(const KForm &omega, const Certificate &cert)
{
    if (omega.degree() != 1) throw DomainError("certificate check expects a 1-form");
    KForm domega = ext_d(omega);
    if (auto one = std::get_if<LengthOne>(&cert)) {
        if (one->F.is_zero()) throw DomainError("malformed certificate: F = 0");
        if (one->k < 1) throw DomainError("malformed certificate: k < 1");
        if (one->F.arity() != omega.arity()) throw DomainError("malformed certificate: F arity");
        KForm dF = ext_d(KForm::function(one->F, omega.dim()));
        RatFunc kF = one->F.scaled(Scalar(one->k));
        return (wedge(dF, omega) + kF * domega).is_zero();
    }
    if (auto two = std::get_if<LengthTwo>(&cert)) {
        require_one_form(two->alpha, omega, "alpha");
        return domega == wedge(omega, two->alpha) && ext_d(two->alpha).is_zero();
    }
    const auto &three = std::get<LengthThree>(cert);
    require_one_form(three.alpha, omega, "alpha");
    require_one_form(three.beta, omega, "beta");
    return domega == wedge(omega, three.alpha) && ext_d(three.alpha) == wedge(omega, three.beta) &&
           ext_d(three.beta) == wedge(three.alpha, three.beta);
}

GVSequence gv_gauge(const GVSequence &seq, const RatFunc &f, const RatFunc &g)
{
    if (f.is_zero()) throw DomainError("gauge factor f = 0");
    if (seq.tail.size() > 2) throw DomainError("gauge applies to sequences of length at most 3");
    const KForm &omega = seq.omega;
    std::size_t dim = omega.dim();
    KForm alpha = seq.term(1), beta = seq.term(2);
    GVSequence out;
    out.omega = f * omega;
    KForm a2 = alpha - calculus::dlog(f, dim) + g * omega;
    KForm dg = ext_d(KForm::function(g, dim));
    RatFunc half_g2 = (g * g).scaled(Scalar::fraction(1, 2));
    KForm b2 = f.inverse() * (beta - dg + g * alpha + half_g2 * omega);
    out.tail = {a2, b2};
    while (!out.tail.empty() && out.tail.back().is_zero()) out.tail.pop_back();
    return out;
}

RatFunc transverse_coeff(const StraightChart &chart, int rank)
{
    const RatFunc &w = chart.w;
    if (w.is_zero()) throw DomainError("chart has w = 0");
    std::size_t n = w.arity();
    std::size_t dim = chart.z.size() + 1;
    if (chart.t >= dim) throw DomainError("chart transverse variable out of range");
    auto depends_on_z = [&](const RatFunc &r) {
        for (std::size_t v : chart.z)
            if (r.depends_on(v)) return true;
        return false;
    };
    // collect a 1-form sum and read its dt part; dz parts must vanish
    auto dt_part = [&](const KForm &form) {
        for (std::size_t v : chart.z)
            if (!form[v].is_zero()) throw InconsistentData("chart data leaves a nonzero dz component");
        RatFunc mu = form[chart.t];
        if (depends_on_z(mu)) throw InconsistentData("transverse coefficient depends on tangential variables");
        return mu;
    };
    KForm dlog_w = calculus::dlog(w, dim);
    if (rank == 1) {
        if (!chart.F) throw DomainError("rank 1 needs F and k in the chart");
        if (chart.k < 1) throw DomainError("rank 1 needs k >= 1");
        KForm form = RatFunc::constant(n, Scalar::fraction(1, chart.k)) * calculus::dlog(*chart.F, dim) + dlog_w;
        return dt_part(form);
    }
    if (rank == 2) {
        if (!chart.alpha) throw DomainError("rank 2 needs alpha in the chart");
        return dt_part(*chart.alpha + dlog_w);
    }
    if (rank == 3) {
        if (!chart.alpha || !chart.beta) throw DomainError("rank 3 needs alpha and beta in the chart");
        RatFunc u = w.derivative(chart.t) / w + (*chart.alpha)[chart.t];
        KForm du = ext_d(KForm::function(u, dim));
        KForm form = w * *chart.beta + du - (u * u).scaled(Scalar::fraction(1, 2)) * KForm::basis(dim, chart.t, n);
        return dt_part(form);
    }
    throw DomainError("transverse rank must be 1, 2 or 3");
}

} // namespace foliage::godbillon
