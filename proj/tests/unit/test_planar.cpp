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
#include "foliage/planar/planar.hpp"

using namespace foliage;
using namespace foliage::planar;

namespace {

RatFunc P(const char *s, const Space &sp) { return cli::parse_expression(s, sp); }

PlanarFoliation fol(const char *a, const char *b, const Space &sp)
{
    return PlanarFoliation::from_ratfuncs(sp, P(a, sp), P(b, sp));
}

PlanarFoliation linear_change(const PlanarFoliation &f, const std::vector<RatFunc> &map)
{
    calculus::KForm w = calculus::pullback(map, f.omega());
    return PlanarFoliation::from_ratfuncs(f.space(), w[0], w[1]);
}

bool same_class(const SingularityClass &a, const SingularityClass &b)
{
    if (a.index() != b.index()) return false;
    if (auto r = std::get_if<ResonantSaddle>(&a)) {
        auto s = std::get<ResonantSaddle>(b);
        return r->p == s.p && r->q == s.q;
    }
    if (auto r = std::get_if<Saddle>(&a)) {
        auto s = std::get<Saddle>(b);
        if (!r->ratio || !s.ratio) return r->ratio.has_value() == s.ratio.has_value();
        // the eigenvalue order is not canonical
        return *r->ratio == *s.ratio || *r->ratio * *s.ratio == RatFunc::constant(r->ratio->arity(), Scalar(1));
    }
    return true;
}

} // namespace

TEST_CASE("classification examples")
{
    Space xy{{"x", "y"}, {}};
    auto rs = classify_origin(fol("y", "2*x", xy));
    REQUIRE(std::holds_alternative<ResonantSaddle>(rs));
    CHECK(std::get<ResonantSaddle>(rs).p == 1);
    CHECK(std::get<ResonantSaddle>(rs).q == 2);
    CHECK(class_name(rs) == "ResonantSaddle");

    CHECK(std::holds_alternative<SaddleNode>(classify_origin(fol("-y", "x^2", xy))));
    CHECK(std::holds_alternative<Regular>(classify_origin(fol("1+y", "x", xy))));
    CHECK(std::holds_alternative<NotReduced>(classify_origin(fol("y", "-x", xy))));
    CHECK(std::holds_alternative<NotReduced>(classify_origin(fol("y^2", "x^3", xy))));
    auto nilp = classify_origin(fol("x + y^2", "x^2", xy));
    REQUIRE(std::holds_alternative<NotReduced>(nilp));
    CHECK(std::get<NotReduced>(nilp).reason.find("nilpotent") != std::string::npos);

    auto gi = classify_origin(fol("y", "i*x", xy));
    REQUIRE(std::holds_alternative<Saddle>(gi));
    CHECK(*std::get<Saddle>(gi).ratio == P("i", xy));

    // tr^2/det = -4, so the ratio involves sqrt 2
    auto irr = classify_origin(fol("-x-y", "x+2*y", xy));
    REQUIRE(std::holds_alternative<Saddle>(irr));
    CHECK_FALSE(std::get<Saddle>(irr).ratio.has_value());

    Space par{{"x", "y"}, {"s"}};
    auto sym = classify_origin(fol("y", "s*x", par));
    REQUIRE(std::holds_alternative<Saddle>(sym));
    CHECK(*std::get<Saddle>(sym).ratio == P("s", par));

    CHECK_THROWS_AS(fol("x*y", "x^2", xy), DomainError);
    CHECK_THROWS_AS(fol("0", "0", xy), DomainError);
    CHECK_THROWS_AS(PlanarFoliation(Space{{"x"}, {}}, exact::Poly(1), exact::Poly(1)), DomainError);
    // parameter content is allowed
    CHECK_NOTHROW(fol("s*y", "s*x", par));
}

TEST_CASE("first integrals")
{
    Space xy{{"x", "y"}, {}};
    auto f = fol("y", "2*x", xy);
    CHECK(is_first_integral(P("x*y^2", xy), f));
    CHECK_FALSE(is_first_integral(P("x^2*y", xy), f));
    CHECK(is_first_integral(P("(x*y^2)^3 + 1", xy), f));
    CHECK_THROWS_AS(is_first_integral(P("7", xy), f), DomainError);
    CHECK_FALSE(is_first_integral(P("x^2/y", xy), fol("y", "-2*x", xy)));
}

TEST_CASE("classification is invariant under linear changes")
{
    Space xy{{"x", "y"}, {}};
    std::vector<PlanarFoliation> base{
        fol("y + x^2", "2*x", xy), fol("-y", "x^2", xy),     fol("3*y", "x + y^3", xy), fol("y", "i*x", xy),
        fol("y", "-x + x*y", xy),  fol("x + y^2", "x^2", xy), fol("-x-y", "x+2*y", xy),   fol("2*y", "5*x", xy),
    };
    testing::Random rnd(41);
    int done = 0;
    while (done < 50) {
        Scalar a = rnd.rational(), b = rnd.rational(), c = rnd.rational(), d = rnd.rational();
        if ((a * d - b * c).is_zero()) continue;
        RatFunc x = xy.var(0), y = xy.var(1);
        std::vector<RatFunc> map{x.scaled(a) + y.scaled(b), x.scaled(c) + y.scaled(d)};
        const auto &f = base[static_cast<std::size_t>(done) % base.size()];
        auto g = linear_change(f, map);
        INFO(class_name(classify_origin(f)));
        CHECK(same_class(classify_origin(f), classify_origin(g)));
        ++done;
    }
}

TEST_CASE("normal forms")
{
    Space xy{{"x", "y"}, {"l"}};
    RatFunc lambdas[] = {P("0", xy), P("1", xy), P("1/2", xy), P("i", xy), P("l", xy)};
    for (int k = 1; k <= 3; ++k)
        for (const auto &lam : lambdas) {
            auto sn = normal_form(xy, SaddleNodeParams{k, lam});
            CHECK(std::holds_alternative<SaddleNode>(classify_origin(sn)));
            CHECK(exact::gcd(sn.A(), sn.B()).is_one());
            for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
                auto rs = normal_form(xy, ResonantSaddleParams{p, q, k, lam});
                auto c = classify_origin(rs);
                REQUIRE(std::holds_alternative<ResonantSaddle>(c));
                CHECK(std::get<ResonantSaddle>(c).p == std::min(p, q));
                CHECK(std::get<ResonantSaddle>(c).q == std::max(p, q));
                CHECK(!exact::gcd(rs.A(), rs.B()).depends_on(0));
            }
        }
    auto sn = normal_form(xy, SaddleNodeParams{1, P("l", xy)});
    CHECK(RatFunc(sn.A()) == P("-y*(1 - l*x)", xy));
    CHECK(RatFunc(sn.B()) == P("x^2", xy));
    CHECK_THROWS_AS(normal_form(xy, SaddleNodeParams{0, P("0", xy)}), DomainError);
    CHECK_THROWS_AS(normal_form(xy, ResonantSaddleParams{2, 4, 1, P("0", xy)}), DomainError);
}

TEST_CASE("holonomy fields and their integrals")
{
    Space xs{{"x"}, {"l", "tau"}};
    RatFunc tau = P("tau", xs);
    RatFunc lambdas[] = {P("0", xs), P("1", xs), P("1/2", xs), P("i", xs), P("l", xs)};
    for (int k = 1; k <= 4; ++k)
        for (const auto &lam : lambdas) {
            CHECK(holonomy_integral_identity(k, lam, tau, 0));
            RatFunc a = holonomy_field(k, lam, tau, 0);
            // oracle: d/dx log H written out by hand
            RatFunc x = xs.var(0);
            RatFunc dlog = -(x.pow(-k - 1)) - lam / x;
            CHECK(a * dlog == -tau);
        }
    // a_{1,0} / tau = x^2 has time-one flow x/(1-x)
    RatFunc a = holonomy_field(1, P("0", xs), tau, 0) / tau;
    auto flow = std::get<exact::Series1>(disk::lie_flow(a, 0, 12));
    CHECK(flow == exact::Series1::expand(P("x/(1-x)", xs), 0, 12));
    CHECK_THROWS_AS(holonomy_field(0, P("0", xs), tau, 0), DomainError);
}

TEST_CASE("holonomy classes bound the rank")
{
    CHECK(rank_upper_from_holonomy(HolonomyClass::Normalizable) == 1);
    CHECK(rank_upper_from_holonomy(HolonomyClass::Linearizable) == 1);
    CHECK(rank_upper_from_holonomy(HolonomyClass::Unitary) == 2);
    CHECK(rank_upper_from_holonomy(HolonomyClass::Binary) == 3);
    CHECK(rank_upper_from_holonomy(HolonomyClass::Unknown) == -1);
    CHECK(parse_holonomy_class("binary") == HolonomyClass::Binary);
    CHECK(parse_holonomy_class("Unitary") == HolonomyClass::Unitary);
    CHECK_FALSE(parse_holonomy_class("ternary").has_value());
}
