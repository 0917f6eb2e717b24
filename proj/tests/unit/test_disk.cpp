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

#include <doctest.h>

#include "../support/random.hpp"
#include "foliage/cli/expr.hpp"
#include "foliage/disk/disk.hpp"
#include "foliage/error.hpp"

using namespace foliage;
using namespace foliage::disk;
using exact::Poly;
using exact::Scalar;
using exact::Space;

namespace {

Space xc() { return Space{{"x"}, {"c"}}; }
Space xs() { return Space{{"x"}, {}}; }

RatFunc P(const char *s, const Space &sp) { return cli::parse_expression(s, sp); }

Series1 ser(const char *s, const Space &sp, int order) { return Series1::expand(P(s, sp), 0, order); }

// Time-1 map of x' = a(x) by Picard iteration on x(t) = x + int_0^t a(x(s)) ds,
// done with bivariate truncated polynomials in (x, t). Independent of the
// Lie-series code: only Poly arithmetic is used.
std::vector<Scalar> picard_flow(const Poly &a, int order)
{
    // a is univariate in x; work in arity 2, variables (x, t)
    std::vector<Scalar> ac(static_cast<std::size_t>(order) + 1, Scalar(0));
    for (const auto &t : a.terms())
        if (t.exps[0] <= order) ac[static_cast<std::size_t>(t.exps[0])] = t.coef;
    auto trunc = [&](const Poly &p) {
        std::vector<exact::Term> keep;
        for (const auto &t : p.terms())
            if (t.exps[0] <= order && t.exps[1] <= order) keep.push_back(t);
        return Poly::from_terms(2, std::move(keep));
    };
    Poly x = Poly::variable(2, 0);
    Poly cur = x;
    for (int it = 0; it <= 2 * order + 2; ++it) {
        Poly acc(2), power = Poly::constant(2, Scalar(1));
        for (int k = 0; k <= order; ++k) {
            if (k) power = trunc(power * cur);
            if (!ac[static_cast<std::size_t>(k)].is_zero()) acc += power * ac[static_cast<std::size_t>(k)];
        }
        // integrate in t
        std::vector<exact::Term> integ;
        for (const auto &t : acc.terms()) {
            exact::Term s = t;
            s.exps[1] += 1;
            s.coef = s.coef * Scalar::fraction(1, s.exps[1]);
            integ.push_back(s);
        }
        Poly next = trunc(x + Poly::from_terms(2, std::move(integ)));
        if (next == cur) break;
        cur = next;
    }
    std::vector<Scalar> out(static_cast<std::size_t>(order) + 1, Scalar(0));
    for (const auto &t : cur.terms()) out[static_cast<std::size_t>(t.exps[0])] += t.coef; // t = 1
    return out;
}

RatFunc random_mobius(testing::Random &rnd, const Space &sp)
{
    while (true) {
        Scalar a = rnd.gaussian(), b = rnd.gaussian(), c = rnd.gaussian(), e = rnd.gaussian();
        if ((a * e - b * c).is_zero()) continue;
        RatFunc x = RatFunc::variable(sp.arity(), 0);
        RatFunc num = x * a + RatFunc::constant(sp.arity(), b), den = x * c + RatFunc::constant(sp.arity(), e);
        if (den.is_zero()) continue;
        return num / den;
    }
}

Series1 random_germ(testing::Random &rnd, std::size_t arity, int order)
{
    Series1 g(arity, 0, order);
    Scalar leads[] = {Scalar(1), Scalar(2), Scalar::imaginary_unit(), Scalar::fraction(-1, 3)};
    g.set(1, RatFunc::constant(arity, leads[rnd.integer(0, 3)]));
    for (int k = 2; k <= order; ++k) g.set(k, RatFunc::constant(arity, rnd.rational(3)));
    return g;
}

} // namespace

TEST_CASE("groupoid helpers")
{
    Space sp = xs();
    CHECK(groupoid_rank(Rank0{P("x^2", sp)}) == 0);
    CHECK(groupoid_rank(Rank3{P("x", sp)}) == 3);
    CHECK(groupoid_rank(RankInf{}) == -1);
    CHECK(rank1_mu(Rank1{P("1/x^2", sp), 1}, 0) == P("-2/x", sp));
    CHECK(rank1_mu(Rank1{P("x^4", sp), 2}, 0) == P("2/x", sp));
    CHECK_THROWS_AS(rank1_mu(Rank1{RatFunc(1), 1}, 0), DomainError);
}

TEST_CASE("germ validation")
{
    Space sp = xs();
    CHECK_NOTHROW(validate_germ(P("x/(1-x)", sp), 0));
    CHECK_THROWS_AS(validate_germ(P("x+1", sp), 0), DomainError);
    CHECK_THROWS_AS(validate_germ(P("x^2", sp), 0), DomainError);
    CHECK_THROWS_AS(validate_germ(P("1/x", sp), 0), DomainError);
    CHECK_THROWS_AS(validate_germ(ser("x^2", sp, 5), 0), DomainError);
}

TEST_CASE("lie_flow examples")
{
    Space sp = xs();
    auto f = std::get<Series1>(lie_flow(P("x^2", sp), 0, 12));
    CHECK(f == ser("x/(1-x)", sp, 12));

    Space ss{{"x"}, {"s"}};
    auto lin = std::get<Series1>(lie_flow(P("s*x", ss), 0, 6));
    RatFunc expected(2);
    RatFunc s = P("s", ss), term = RatFunc::constant(2, Scalar(1));
    for (int m = 0; m <= 6; ++m) {
        if (m) term = term * s * RatFunc::constant(2, Scalar::fraction(1, m));
        expected += term;
    }
    CHECK(lin[1] == expected);
    for (int k = 2; k <= 6; ++k) CHECK(lin[k].is_zero());

    auto cube = std::get<Series1>(lie_flow(P("x^3", sp), 0, 9));
    CHECK(cube[1].is_one());
    CHECK(cube[3].is_one());
    CHECK(cube[5] == P("3/2", sp));
    auto oracle = picard_flow(P("x^3", sp).num(), 9);
    for (int k = 0; k <= 9; ++k) CHECK(cube[k] == RatFunc::constant(1, oracle[static_cast<std::size_t>(k)]));

    CHECK_THROWS_AS(lie_flow(P("1+x", sp), 0, 5), DomainError);
    CHECK_THROWS_AS(lie_flow(P("1/x", sp), 0, 5), DomainError);
}

TEST_CASE("lie_flow matches Picard iteration on random fields")
{
    testing::Random rnd(41);
    Space sp = xs();
    for (int k = 0; k < 20; ++k) {
        std::vector<exact::Term> terms;
        int lowest = static_cast<int>(rnd.integer(2, 3));
        for (int e = lowest; e <= lowest + 2; ++e)
            if (e == lowest || rnd.integer(0, 1)) terms.push_back({{e}, rnd.rational(3)});
        Poly a = Poly::from_terms(1, terms);
        if (a.is_zero() || a.low_degree() < 2) continue;
        auto f = std::get<Series1>(lie_flow(RatFunc(a), 0, 12));
        auto oracle = picard_flow(a, 12);
        for (int j = 0; j <= 12; ++j) CHECK(f[j] == RatFunc::constant(1, oracle[static_cast<std::size_t>(j)]));
    }
}

TEST_CASE("schwarzian examples")
{
    Space sp = xs();
    CHECK(schwarzian(P("(2*x+1)/(3*x-5)", sp), 0).is_zero());
    CHECK(schwarzian(P("x^2", sp), 0) == P("-3/x^2", sp));
    CHECK(schwarzian(P("x/(1-x)", sp), 0).is_zero());
    CHECK_THROWS_AS(schwarzian(P("3", sp), 0), DomainError);
    CHECK(schwarzian(ser("x/(1-x)", sp, 10)).is_zero());
}

TEST_CASE("schwarzian kernel and cocycle")
{
    testing::Random rnd(42);
    Space sp = xs();
    for (int k = 0; k < 100; ++k) CHECK(schwarzian(random_mobius(rnd, sp), 0).is_zero());
    const int N = 10;
    for (int k = 0; k < 50; ++k) {
        Series1 f = random_germ(rnd, 1, N + 3), g = random_germ(rnd, 1, N + 3);
        Series1 fg = exact::series_compose(f, g, N + 3);
        Series1 lhs = schwarzian(fg);
        Series1 g1 = g.derivative();
        Series1 rhs = exact::series_compose(schwarzian(f), g.truncate(N), N) * (g1 * g1).truncate(N) + schwarzian(g);
        CHECK(lhs.truncate(N) == rhs.truncate(N));
    }
}

TEST_CASE("family_from_field examples")
{
    Space sp = xs();
    Family f2 = family_from_field(P("x^2", sp), sp, 0, 2);
    CHECK(f2.space.parameters == std::vector<std::string>{"c"});
    CHECK(std::get<Rank2>(f2.groupoid).mu == P("(c-2*x)/x^2", xc()));
    Family f3 = family_from_field(P("x^2", sp), sp, 0, 3);
    CHECK(std::get<Rank3>(f3.groupoid).nu == P("c/x^4", xc()));
    Family lin = family_from_field(P("x", sp), sp, 0, 2);
    CHECK(std::get<Rank2>(lin.groupoid).mu == P("(c-1)/x", xc()));
    Family f1 = family_from_field(P("x^2", sp), sp, 0, 1);
    CHECK(std::get<Rank1>(f1.groupoid).gamma == P("1/x^2", xc()));
    CHECK(rank1_mu(std::get<Rank1>(f1.groupoid), 0) == P("-2/x", xc()));

    // fresh name when c is taken
    Family taken = family_from_field(P("c*x^2", xc()), xc(), 0, 2);
    CHECK(taken.space.parameters == std::vector<std::string>{"c", "c1"});
    CHECK(algebra_check(P("c*x^2", xc()).remap(3, std::vector<std::size_t>{0, 1}), taken.groupoid, 0));

    CHECK_THROWS_AS(family_from_field(RatFunc(1), sp, 0, 2), DomainError);
    CHECK_THROWS_AS(family_from_field(P("x", sp), sp, 0, 4), DomainError);

    testing::Random rnd(43);
    for (int k = 0; k < 20; ++k) {
        RatFunc a = rnd.ratfunc(1, 3, 3);
        if (a.is_zero()) continue;
        for (int rank = 1; rank <= 3; ++rank) {
            Family f = family_from_field(a, sp, 0, rank);
            CHECK(algebra_check(a.remap(2, std::vector<std::size_t>{0}), f.groupoid, 0));
        }
    }
}

TEST_CASE("is_solution examples")
{
    Space sp = xs();
    CHECK(is_solution(P("x/(1-x)", sp), Rank1{P("1/x^2", sp), 1}, 0, 10));
    Space sq{{"x"}, {"q"}};
    CHECK(is_solution(P("q*x", sq), Rank1{P("1/x", sq), 1}, 0, 10));
    CHECK_FALSE(is_solution(P("2*x", sp), Rank1{P("1/x^2", sp), 1}, 0, 10));
    CHECK(is_solution(P("-x", sp), Rank0{P("x^2", sp)}, 0, 10));
    CHECK_FALSE(is_solution(P("2*x", sp), Rank0{P("x^2", sp)}, 0, 10));
    CHECK(is_solution(P("x^2+x", sp), RankInf{}, 0, 10));

    Space c = xc();
    Germ flow = lie_flow(P("x^2", c), 0, 12);
    SolutionCheck chk = check_solution(flow, Rank2{P("(c-2*x)/x^2", c)}, 0, 12);
    CHECK(chk.holds);
    CHECK(chk.checked_through >= 9);
    // a longer germ covers every coefficient through x^12
    SolutionCheck longer = check_solution(lie_flow(P("x^2", c), 0, 15), Rank2{P("(c-2*x)/x^2", c)}, 0, 12);
    CHECK(longer.holds);
    CHECK(longer.checked_through == 12);
    CHECK(is_solution(lie_flow(P("x^2", c), 0, 12), Rank3{P("c/x^4", c)}, 0, 12));
    CHECK_FALSE(is_solution(lie_flow(P("x^3", c), 0, 12), Rank2{P("(c-2*x)/x^2", c)}, 0, 12));
    CHECK_FALSE(is_solution(ser("2*x", c, 12), Rank3{P("c/x^4", c)}, 0, 12));
    CHECK(is_solution(ser("x/(1-x)", sp, 12), Rank1{P("1/x^2", sp), 1}, 0, 12));
    CHECK_THROWS_AS(is_solution(P("x+1", sp), Rank0{P("x", sp)}, 0, 5), DomainError);
}

TEST_CASE("groupoid closure under composition and inversion")
{
    Space sp = xs();
    Rank1 g{P("1/x^2", sp), 1};
    const char *sols[] = {"x/(1-x)", "x/(1+3*x)", "x/(1-x/2)"};
    for (const char *a : sols)
        for (const char *b : sols) {
            RatFunc fa = P(a, sp), fb = P(b, sp);
            CHECK(is_solution(fa.substitute(0, fb), g, 0, 10));
        }
    for (const char *a : sols) {
        Series1 inv = exact::series_invert(ser(a, sp, 12), 12);
        CHECK(is_solution(inv, g, 0, 12));
    }
    Space c = xc();
    Rank2 g2{P("(c-2*x)/x^2", c)};
    Series1 f = std::get<Series1>(lie_flow(P("x^2", c), 0, 15));
    CHECK(is_solution(exact::series_compose(f, f, 15), g2, 0, 12));
    CHECK(is_solution(exact::series_invert(f, 15), g2, 0, 12));
}

TEST_CASE("coeff_transform examples and functoriality")
{
    Space sp = xs();
    RatFunc id = P("x", sp);
    auto same = std::get<Rank2>(coeff_transform(Rank2{P("1/x", sp)}, id, 0));
    CHECK(same.mu == P("1/x", sp));
    auto zero = std::get<Rank3>(coeff_transform(Rank3{RatFunc(1)}, P("(x+1)/(2*x-1)", sp), 0));
    CHECK(zero.nu.is_zero());
    auto sq = std::get<Rank2>(coeff_transform(Rank2{P("-2/x", sp)}, P("x^2", sp), 0));
    CHECK(sq.mu == P("-3/x", sp));
    auto r1 = std::get<Rank1>(coeff_transform(Rank1{P("1/x^2", sp), 1}, P("x/(1-x)", sp), 0));
    CHECK(r1.gamma == P("1/x^2", sp));
    auto r0 = std::get<Rank0>(coeff_transform(Rank0{P("x^2", sp)}, P("-x", sp), 0));
    CHECK(r0.h == P("x^2", sp));
    CHECK_THROWS_AS(coeff_transform(Rank2{id}, P("3", sp), 0), DomainError);
    CHECK_THROWS_AS(coeff_transform(Rank2{id}, P("x^2", sp), 0, Direction::Pushforward), DomainError);

    // pushforward undoes pullback
    RatFunc m = P("(2*x+1)/(x+3)", sp);
    auto there = coeff_transform(Rank3{P("x", sp)}, m, 0);
    auto back = std::get<Rank3>(coeff_transform(there, m, 0, Direction::Pushforward));
    CHECK(back.nu == P("x", sp));

    testing::Random rnd(44);
    for (int k = 0; k < 20; ++k) {
        RatFunc phi = k % 2 ? random_mobius(rnd, sp) : RatFunc(rnd.nonzero_poly(1, 2, 3));
        RatFunc psi = k % 3 ? random_mobius(rnd, sp) : RatFunc(rnd.nonzero_poly(1, 2, 3));
        if (phi.derivative(0).is_zero() || psi.derivative(0).is_zero()) continue;
        RatFunc comp = phi.substitute(0, psi);
        RatFunc mu = rnd.ratfunc(1, 2, 2), nu = rnd.ratfunc(1, 2, 2), gamma(rnd.nonzero_poly(1, 2, 2));
        auto two = [&](const DiskGroupoid &g) {
            return coeff_transform(coeff_transform(g, phi, 0), psi, 0);
        };
        CHECK(std::get<Rank2>(two(Rank2{mu})).mu == std::get<Rank2>(coeff_transform(Rank2{mu}, comp, 0)).mu);
        CHECK(std::get<Rank3>(two(Rank3{nu})).nu == std::get<Rank3>(coeff_transform(Rank3{nu}, comp, 0)).nu);
        CHECK(std::get<Rank1>(two(Rank1{gamma, 2})).gamma ==
              std::get<Rank1>(coeff_transform(Rank1{gamma, 2}, comp, 0)).gamma);
    }
}

TEST_CASE("algebra_check examples")
{
    Space c = xc();
    CHECK(algebra_check(P("x^2", c), Rank2{P("(c-2*x)/x^2", c)}, 0));
    CHECK(algebra_check(P("x^2", c), Rank3{P("c/x^4", c)}, 0));
    Space sp = xs();
    CHECK_FALSE(algebra_check(P("x", sp), Rank1{P("1/x^2", sp), 1}, 0));
    CHECK(algebra_check(P("x^2", sp), Rank1{P("1/x^2", sp), 1}, 0));
    CHECK_THROWS_AS(algebra_check(P("x", sp), RankInf{}, 0), DomainError);
    CHECK_THROWS_AS(algebra_check(P("x", sp), Rank0{P("x", sp)}, 0), DomainError);
}
