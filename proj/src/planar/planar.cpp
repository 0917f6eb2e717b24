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

#include "foliage/planar/planar.hpp"

#include "foliage/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace foliage::planar {

using calculus::KForm;
using calculus::VectorField;

PlanarFoliation::PlanarFoliation(Space space, Poly a, Poly b) : space_(std::move(space)), a_(std::move(a)), b_(std::move(b))
{
    space_.validate();
    if (space_.dim() != 2) throw DomainError("a planar foliation needs exactly two variables");
    if (a_.arity() != space_.arity() || b_.arity() != space_.arity())
        throw DomainError("coefficients do not match the declared variables");
    if (a_.is_zero() && b_.is_zero()) throw DomainError("omega = 0");
    Poly g = exact::gcd(a_, b_);
    if (g.depends_on(0) || g.depends_on(1))
        throw DomainError("A and B share the factor " + g.str() + "; divide it out first");
}

PlanarFoliation PlanarFoliation::from_ratfuncs(Space space, const RatFunc &a, const RatFunc &b)
{
    Poly g = exact::gcd(a.den(), b.den());
    Poly l = exact::divide_or_throw(a.den() * b.den(), g);
    Poly pa = a.num() * exact::divide_or_throw(l, a.den());
    Poly pb = b.num() * exact::divide_or_throw(l, b.den());
    return PlanarFoliation(std::move(space), std::move(pa), std::move(pb));
}

KForm PlanarFoliation::omega() const { return KForm::one_form({RatFunc(a_), RatFunc(b_)}); }

VectorField PlanarFoliation::dual_field() const { return VectorField({RatFunc(b_), -RatFunc(a_)}); }

namespace {

// Coefficient of x^i y^j as a function of the parameters.
RatFunc coeff_xy(const Poly &p, int i, int j)
{
    std::vector<exact::Term> out;
    for (const auto &t : p.terms())
        if (t.exps[0] == i && t.exps[1] == j) {
            exact::Term s = t;
            s.exps[0] = s.exps[1] = 0;
            out.push_back(std::move(s));
        }
    return RatFunc(Poly::from_terms(p.arity(), std::move(out)));
}

// lambda1/lambda2 = s in the rationals, the Gaussian rationals, or neither.
SingularityClass from_constant_ratio(const Scalar &s)
{
    if (s.is_real()) {
        const mpq_class &r = s.re();
        if (sgn(r) < 0) return NotReduced{"eigenvalue ratio " + s.str() + " is a negative rational"};
        mpq_class big = r >= 1 ? r : mpq_class(1 / r);
        if (!big.get_num().fits_sint_p() || !big.get_den().fits_sint_p())
            throw DomainError("resonance ratio too large");
        return ResonantSaddle{static_cast<int>(big.get_den().get_si()), static_cast<int>(big.get_num().get_si())};
    }
    return Saddle{RatFunc::constant(1, s), ""};
}

} // namespace

std::string class_name(const SingularityClass &c)
{
    static const char *names[] = {"Regular", "Saddle", "ResonantSaddle", "SaddleNode", "NotReduced"};
    return names[c.index()];
}

SingularityClass classify_origin(const PlanarFoliation &f)
{
    const Poly &A = f.A(), &B = f.B();
    if (!coeff_xy(A, 0, 0).is_zero() || !coeff_xy(B, 0, 0).is_zero()) return Regular{};
    // linear part of X = B d/dx - A d/dy
    RatFunc m11 = coeff_xy(B, 1, 0), m12 = coeff_xy(B, 0, 1);
    RatFunc m21 = -coeff_xy(A, 1, 0), m22 = -coeff_xy(A, 0, 1);
    if (m11.is_zero() && m12.is_zero() && m21.is_zero() && m22.is_zero())
        return NotReduced{"zero linear part"};
    RatFunc tr = m11 + m22, det = m11 * m22 - m12 * m21;
    if (det.is_zero()) {
        if (tr.is_zero()) return NotReduced{"nilpotent linear part"};
        return SaddleNode{};
    }
    std::size_t n = A.arity();
    auto relabel = [&](SingularityClass c) {
        if (auto s = std::get_if<Saddle>(&c); s && s->ratio) s->ratio = RatFunc::constant(n, *s->ratio->as_constant());
        return c;
    };
    if (m12.is_zero() || m21.is_zero()) {
        // triangular: eigenvalues m11 = lambda1 and m22 = -lambda2
        RatFunc s = -(m11 / m22);
        if (auto c = s.as_constant()) return relabel(from_constant_ratio(*c));
        return Saddle{s, "ratio depends on parameters; treated as generic"};
    }
    RatFunc kappa = tr * tr / det;
    auto kc = kappa.as_constant();
    if (!kc) return Saddle{std::nullopt, "ratio depends on parameters; treated as generic"};
    // s + 1/s = 2 - kappa
    Scalar disc = *kc * *kc - Scalar(4) * *kc;
    auto root = disc.sqrt();
    if (!root)
        return Saddle{std::nullopt, "ratio is a root of s^2 + (" + (*kc - Scalar(2)).str() + ")*s + 1, not in Q(i)"};
    Scalar s1 = (Scalar(2) - *kc + *root) / Scalar(2), s2 = (Scalar(2) - *kc - *root) / Scalar(2);
    return relabel(from_constant_ratio(compare(s1, s2) >= 0 ? s1 : s2));
}

bool is_first_integral(const RatFunc &h, const PlanarFoliation &f)
{
    if (h.arity() != f.space().arity()) throw DomainError("first integral candidate has the wrong arity");
    if (!h.depends_on(0) && !h.depends_on(1)) throw DomainError("first integral candidate is constant");
    // dH ^ omega = (H_x B - H_y A) dx ^ dy
    return (h.derivative(0) * RatFunc(f.B()) - h.derivative(1) * RatFunc(f.A())).is_zero();
}

PlanarFoliation normal_form(const Space &space, const NormalFormParams &params)
{
    if (space.dim() != 2) throw DomainError("normal forms live in two variables");
    std::size_t n = space.arity();
    RatFunc x = space.var(0), y = space.var(1), one = space.constant(Scalar(1));
    if (auto sn = std::get_if<SaddleNodeParams>(&params)) {
        if (sn->k < 1) throw DomainError("normal form needs k >= 1");
        if (sn->lambda.arity() != n) throw DomainError("lambda has the wrong arity");
        RatFunc a = -(y * (one - sn->lambda * x.pow(sn->k)));
        RatFunc b = x.pow(sn->k + 1);
        return PlanarFoliation::from_ratfuncs(space, a, b);
    }
    const auto &rs = std::get<ResonantSaddleParams>(params);
    if (rs.k < 1 || rs.p < 1 || rs.q < 1) throw DomainError("normal form needs p, q, k >= 1");
    if (std::gcd(rs.p, rs.q) != 1) throw DomainError("normal form needs coprime p and q");
    if (rs.lambda.arity() != n) throw DomainError("lambda has the wrong arity");
    RatFunc m = (x.pow(rs.p) * y.pow(rs.q)).pow(rs.k);
    RatFunc a = (one + (rs.lambda - one) * m) * y.scaled(Scalar(rs.p));
    RatFunc b = (one + rs.lambda * m) * x.scaled(Scalar(rs.q));
    return PlanarFoliation::from_ratfuncs(space, a, b);
}

RatFunc holonomy_field(int k, const RatFunc &lambda, const RatFunc &tau, std::size_t var)
{
    if (k < 1) throw DomainError("holonomy field needs k >= 1");
    if (lambda.arity() != tau.arity()) throw DomainError("lambda and tau arity mismatch");
    RatFunc x = RatFunc::variable(tau.arity(), var), one = RatFunc::constant(tau.arity(), Scalar(1));
    return tau * x.pow(k + 1) / (one + lambda * x.pow(k));
}

bool holonomy_integral_identity(int k, const RatFunc &lambda, const RatFunc &tau, std::size_t var)
{
    RatFunc a = holonomy_field(k, lambda, tau, var);
    RatFunc x = RatFunc::variable(tau.arity(), var);
    // log H = -lambda log x + 1/(k x^k)
    RatFunc dlog_h = x.pow(-k).scaled(Scalar::fraction(1, k)).derivative(var) - lambda / x;
    return a * dlog_h == -tau;
}

int rank_upper_from_holonomy(HolonomyClass c)
{
    switch (c) {
    case HolonomyClass::Normalizable:
    case HolonomyClass::Linearizable:
        return 1;
    case HolonomyClass::Unitary:
        return 2;
    case HolonomyClass::Binary:
        return 3;
    case HolonomyClass::Unknown:
        break;
    }
    return -1;
}

std::optional<HolonomyClass> parse_holonomy_class(const std::string &name)
{
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "normalizable") return HolonomyClass::Normalizable;
    if (s == "linearizable") return HolonomyClass::Linearizable;
    if (s == "unitary") return HolonomyClass::Unitary;
    if (s == "binary") return HolonomyClass::Binary;
    if (s == "unknown") return HolonomyClass::Unknown;
    return std::nullopt;
}

} // namespace foliage::planar
