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

#include "foliage/disk/disk.hpp"

#include "foliage/disk/laurent.hpp"
#include "foliage/error.hpp"

#include <algorithm>

namespace foliage::disk {

using exact::Poly;
using exact::Scalar;

namespace {

RatFunc at_zero(const RatFunc &r, std::size_t var) { return r.substitute(var, RatFunc(r.arity())); }

RatFunc constant(std::size_t n, long v) { return RatFunc::constant(n, Scalar(v)); }

RatFunc sub(const RatFunc &h, std::size_t var, const RatFunc &phi) { return h.substitute(var, phi); }

} // namespace

int groupoid_rank(const DiskGroupoid &g)
{
    return std::holds_alternative<RankInf>(g) ? -1 : static_cast<int>(g.index());
}

RatFunc rank1_mu(const Rank1 &g, std::size_t var)
{
    if (g.gamma.is_zero()) throw DomainError("rank-1 groupoid with gamma = 0");
    if (g.k < 1) throw DomainError("rank-1 groupoid with k < 1");
    return (g.gamma.derivative(var) / g.gamma).scaled(Scalar::fraction(1, g.k));
}

void validate_germ(const Germ &f, std::size_t var)
{
    if (auto r = std::get_if<RatFunc>(&f)) {
        if (!at_zero(*r, var).is_zero()) throw DomainError("germ does not fix the origin");
        if (at_zero(r->derivative(var), var).is_zero()) throw DomainError("germ has zero derivative at the origin");
        return;
    }
    const auto &s = std::get<Series1>(f);
    if (s.var() != var) throw DomainError("germ series in the wrong variable");
    if (s.order() < 1 || !s[0].is_zero()) throw DomainError("germ does not fix the origin");
    if (s[1].is_zero()) throw DomainError("germ has zero derivative at the origin");
}

Germ lie_flow(const RatFunc &a, std::size_t var, int order)
{
    if (order < 1) throw DomainError("flow order must be at least 1");
    RatFunc a0;
    try {
        a0 = at_zero(a, var);
    } catch (const DomainError &) {
        throw DomainError("field has a pole at the origin");
    }
    if (!a0.is_zero()) throw DomainError("field does not vanish at the origin");
    std::size_t n = a.arity();
    Series1 as = Series1::expand(a, var, order);
    Series1 term = Series1::variable(n, var, order);
    Series1 flow = term;
    RatFunc factorial = constant(n, 1);
    for (int m = 1; m <= order; ++m) {
        // X(term) = a * term', kept to full order since a(0) = 0
        Series1 next(n, var, order);
        for (int k = 1; k <= order; ++k) {
            RatFunc acc(n);
            for (int j = 1; j <= k; ++j) {
                int e = k - j + 1; // term coefficient index feeding (term')_{k-j}
                if (!as[j].is_zero() && !term[e].is_zero()) acc += as[j] * term[e].scaled(Scalar(e));
            }
            next.set(k, acc);
        }
        term = next;
        if (term.is_zero()) break;
        factorial = factorial.scaled(Scalar(m));
        flow += term.scaled(factorial.inverse());
    }
    return flow;
}

RatFunc schwarzian(const RatFunc &f, std::size_t var)
{
    RatFunc f1 = f.derivative(var);
    if (f1.is_zero()) throw DomainError("Schwarzian of a map with zero derivative");
    RatFunc f2 = f1.derivative(var), f3 = f2.derivative(var);
    RatFunc r = f2 / f1;
    return (f3 / f1).scaled(Scalar(2)) - (r * r).scaled(Scalar(3));
}

Series1 schwarzian(const Series1 &f)
{
    if (f.order() < 3) throw DomainError("Schwarzian needs a series of order at least 3");
    Series1 f1 = f.derivative(), f2 = f1.derivative(), f3 = f2.derivative();
    if (f1[0].is_zero()) throw DomainError("Schwarzian of a germ with zero derivative");
    Series1 r = f2 / f1.truncate(f2.order());
    int n = f3.order();
    RatFunc two = RatFunc::constant(f.arity(), Scalar(2)), three = RatFunc::constant(f.arity(), Scalar(3));
    return (f3 / f1.truncate(n)).scaled(two) - (r.truncate(n) * r.truncate(n)).scaled(three);
}

Family family_from_field(const RatFunc &a, const exact::Space &space, std::size_t var, int rank)
{
    if (a.is_zero()) throw DomainError("field a = 0");
    if (rank < 1 || rank > 3) throw DomainError("family rank must be 1, 2 or 3");
    Family fam;
    fam.space = space;
    std::string name = "c";
    for (int k = 1; space.index_of(name); ++k) name = "c" + std::to_string(k);
    fam.space.parameters.push_back(name);
    std::size_t n = fam.space.arity();
    fam.parameter = n - 1;
    std::vector<std::size_t> map(space.arity());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    RatFunc af = a.remap(n, map);
    RatFunc c = RatFunc::variable(n, fam.parameter);
    RatFunc a1 = af.derivative(var), a2 = a1.derivative(var);
    if (rank == 1)
        fam.groupoid = Rank1{af.inverse(), 1};
    else if (rank == 2)
        fam.groupoid = Rank2{(c - a1) / af};
    else
        fam.groupoid = Rank3{(a1 * a1 - (af * a2).scaled(Scalar(2)) + c) / (af * af)};
    if (!algebra_check(af, fam.groupoid, var)) throw InconsistentData("family does not satisfy its defining equation");
    return fam;
}

namespace {

RatFunc exact_defect(const RatFunc &f, const DiskGroupoid &g, std::size_t var)
{
    RatFunc x = RatFunc::variable(f.arity(), var);
    RatFunc f1 = f.derivative(var);
    return std::visit(
        [&](const auto &G) -> RatFunc {
            using T = std::decay_t<decltype(G)>;
            if constexpr (std::is_same_v<T, Rank0>) {
                return sub(G.h, var, f) - G.h;
            } else if constexpr (std::is_same_v<T, Rank1>) {
                return sub(G.gamma, var, f) * f1.pow(G.k) - G.gamma;
            } else if constexpr (std::is_same_v<T, Rank2>) {
                return sub(G.mu, var, f) * f1 + f1.derivative(var) / f1 - G.mu;
            } else if constexpr (std::is_same_v<T, Rank3>) {
                return sub(G.nu, var, f) * f1 * f1 + schwarzian(f, var) - G.nu;
            } else {
                return RatFunc(f.arity());
            }
        },
        g);
}

Laurent series_defect(const Series1 &f, const DiskGroupoid &g, std::size_t var)
{
    std::size_t n = f.arity();
    int prec = f.order() + 1;
    Laurent F = Laurent::from_series(f);
    Laurent X(n, 1, prec);
    X.add_to(1, constant(n, 1));
    Laurent F1 = F.derivative();
    return std::visit(
        [&](const auto &G) -> Laurent {
            using T = std::decay_t<decltype(G)>;
            if constexpr (std::is_same_v<T, Rank0>) {
                return Laurent::compose(G.h, var, F) - Laurent::compose(G.h, var, X);
            } else if constexpr (std::is_same_v<T, Rank1>) {
                Laurent p = Laurent::monomial(n, 0, constant(n, 1));
                for (int k = 0; k < G.k; ++k) p = p * F1;
                return Laurent::compose(G.gamma, var, F) * p - Laurent::compose(G.gamma, var, X);
            } else if constexpr (std::is_same_v<T, Rank2>) {
                return Laurent::compose(G.mu, var, F) * F1 + F1.derivative() / F1 - Laurent::compose(G.mu, var, X);
            } else if constexpr (std::is_same_v<T, Rank3>) {
                Laurent F2 = F1.derivative(), F3 = F2.derivative();
                Laurent r = F2 / F1;
                Laurent two = Laurent::monomial(n, 0, constant(n, 2)), three = Laurent::monomial(n, 0, constant(n, 3));
                Laurent s = two * (F3 / F1) - three * r * r;
                return Laurent::compose(G.nu, var, F) * F1 * F1 + s - Laurent::compose(G.nu, var, X);
            } else {
                return Laurent(n, 0, Laurent::kExact);
            }
        },
        g);
}

} // namespace

SolutionCheck check_solution(const Germ &f, const DiskGroupoid &g, std::size_t var, int order)
{
    validate_germ(f, var);
    SolutionCheck out;
    if (std::holds_alternative<RankInf>(g)) {
        out.holds = true;
        out.checked_through = Laurent::kExact;
        return out;
    }
    if (auto r = std::get_if<RatFunc>(&f)) {
        out.holds = exact_defect(*r, g, var).is_zero();
        out.checked_through = Laurent::kExact;
        return out;
    }
    Laurent e = series_defect(std::get<Series1>(f), g, var);
    out.checked_through = std::min(e.prec() - 1, order);
    out.holds = true;
    for (int k = e.low(); k <= out.checked_through; ++k)
        if (!e.coeff(k).is_zero()) out.holds = false;
    return out;
}

bool is_solution(const Germ &f, const DiskGroupoid &g, std::size_t var, int order)
{
    return check_solution(f, g, var, order).holds;
}

bool is_mobius(const RatFunc &phi, std::size_t var)
{
    if (phi.num().degree_in(var) > 1 || phi.den().degree_in(var) > 1) return false;
    return !phi.derivative(var).is_zero();
}

DiskGroupoid coeff_transform(const DiskGroupoid &g, const RatFunc &phi, std::size_t var, Direction direction)
{
    RatFunc p1 = phi.derivative(var);
    if (p1.is_zero()) throw DomainError("coordinate change with zero derivative");
    if (direction == Direction::Pushforward) {
        if (!is_mobius(phi, var)) throw DomainError("pushforward is only supported for Moebius maps");
        // (a x + b)/(c x + e)  ->  (e x - b)/(-c x + a)
        auto cn = phi.num().coefficients_in(var), cd = phi.den().coefficients_in(var);
        std::size_t n = phi.arity();
        auto coef = [&](const std::vector<Poly> &c, std::size_t k) {
            return k < c.size() ? RatFunc(c[k]) : RatFunc(n);
        };
        RatFunc a = coef(cn, 1), b = coef(cn, 0), c = coef(cd, 1), e = coef(cd, 0);
        RatFunc x = RatFunc::variable(n, var);
        RatFunc inv = (e * x - b) / (a - c * x);
        return coeff_transform(g, inv, var, Direction::Pullback);
    }
    RatFunc p2 = p1.derivative(var);
    return std::visit(
        [&](const auto &G) -> DiskGroupoid {
            using T = std::decay_t<decltype(G)>;
            if constexpr (std::is_same_v<T, Rank0>) {
                return Rank0{sub(G.h, var, phi)};
            } else if constexpr (std::is_same_v<T, Rank1>) {
                return Rank1{sub(G.gamma, var, phi) * p1.pow(G.k), G.k};
            } else if constexpr (std::is_same_v<T, Rank2>) {
                return Rank2{sub(G.mu, var, phi) * p1 + p2 / p1};
            } else if constexpr (std::is_same_v<T, Rank3>) {
                return Rank3{sub(G.nu, var, phi) * p1 * p1 + schwarzian(phi, var)};
            } else {
                return RankInf{};
            }
        },
        g);
}

bool algebra_check(const RatFunc &a, const DiskGroupoid &g, std::size_t var)
{
    RatFunc a1 = a.derivative(var), a2 = a1.derivative(var), a3 = a2.derivative(var);
    if (auto r1 = std::get_if<Rank1>(&g)) return (a1 + rank1_mu(*r1, var) * a).is_zero();
    if (auto r2 = std::get_if<Rank2>(&g)) return (a2 + r2->mu * a1 + r2->mu.derivative(var) * a).is_zero();
    if (auto r3 = std::get_if<Rank3>(&g))
        return (a3 + r3->nu * a1 + (r3->nu.derivative(var) * a).scaled(Scalar::fraction(1, 2))).is_zero();
    throw DomainError("algebra_check needs a groupoid of rank 1, 2 or 3");
}

} // namespace foliage::disk
