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
#include "foliage/godbillon/godbillon.hpp"

using namespace foliage;
using namespace foliage::godbillon;
using calculus::dlog;
using calculus::ext_d;
using calculus::wedge;
using exact::Scalar;
using exact::Space;

namespace {

RatFunc P(const char *s, const Space &sp) { return cli::parse_expression(s, sp); }

KForm form1(const std::vector<const char *> &c, const Space &sp)
{
    std::vector<RatFunc> v;
    for (auto s : c) v.push_back(P(s, sp));
    return KForm::one_form(v);
}

// Saddle-node model x^2 dy - y dx with its integrating factor.
struct SaddleNode {
    Space sp{{"x", "y"}, {"c"}};
    KForm omega = form1({"-y", "x^2"}, sp);
    RatFunc F = P("1/(x^2*y)", sp);
    KForm alpha(const char *c) const { return dlog(F, 2) + (P(c, sp) * F) * omega; }
    KForm beta() const { return (F * F) * omega; }
};

} // namespace

TEST_CASE("frobenius examples")
{
    Space xy{{"x", "y"}, {}}, xyz{{"x", "y", "z"}, {}};
    CHECK(frobenius_check(form1({"-y", "x^2"}, xy)));
    CHECK_FALSE(frobenius_check(form1({"-y", "0", "1"}, xyz)));
    CHECK(frobenius_check(form1({"y*z", "x*z", "x*y"}, xyz)));
    CHECK_THROWS_AS(frobenius_check(KForm::function(P("x", xy), 2)), DomainError);
}

TEST_CASE("gv_verify on the saddle-node model")
{
    SaddleNode sn;
    GVSequence one{sn.omega, {dlog(sn.F, 2)}};
    CHECK(gv_verify(one, 0));
    CHECK(one.verified_to == 0);

    GVSequence bare{sn.omega, {}};
    CHECK_FALSE(gv_verify(bare, 0));
    CHECK(bare.verified_to == -1);

    GVSequence triple{sn.omega, {sn.alpha("c"), sn.beta()}};
    CHECK(gv_verify(triple, 2));
    CHECK(triple.verified_to == 2);
    CHECK(gv_verify(triple, 5));

    // beta = F omega passes j = 1 (both sides vanish) and fails at j = 2
    GVSequence wrong{sn.omega, {sn.alpha("c"), sn.F * sn.omega}};
    CHECK_FALSE(gv_verify(wrong, 2));
    CHECK(wrong.verified_to == 1);
}

TEST_CASE("gv_extend examples")
{
    SaddleNode sn;
    VectorField X({RatFunc(3), P("x^-2", sn.sp)});
    GVSequence seq{sn.omega, {}};
    KForm w1 = gv_extend(seq, X);
    CHECK(w1 == form1({"-(2*x+1)/x^2", "0"}, sn.sp));
    CHECK(w1 - dlog(sn.F, 2) == sn.F * sn.omega);
    CHECK(w1 == sn.alpha("1"));

    seq.tail.push_back(w1);
    KForm w2 = gv_extend(seq, X);
    CHECK(w2.is_zero());
    seq.tail.push_back(w2);
    CHECK(gv_verify(seq, 1));

    Space xy{{"x", "y"}, {}};
    GVSequence closed{form1({"y", "x"}, xy), {}};
    VectorField Y({P("1/(2*y)", xy), P("1/(2*x)", xy)});
    CHECK(gv_extend(closed, Y).is_zero());

    VectorField bad({RatFunc(3), RatFunc::constant(3, Scalar(1))});
    CHECK_THROWS_AS(gv_extend(GVSequence{sn.omega, {}}, bad), DomainError);
}

TEST_CASE("gv_extend reports an inconsistent prefix")
{
    Space xyz{{"x", "y", "z"}, {}};
    KForm omega = form1({"-y", "0", "1"}, xyz);
    VectorField Z({RatFunc(3), RatFunc(3), RatFunc::constant(3, Scalar(1))});
    CHECK_THROWS_AS(gv_extend(GVSequence{omega, {}}, Z), InconsistentData);
}

TEST_CASE("length certificates")
{
    SaddleNode sn;
    CHECK(length_certificate_check(sn.omega, LengthOne{sn.F, 1}));
    Space xy{{"x", "y"}, {}};
    CHECK(length_certificate_check(form1({"y", "x"}, xy), LengthOne{P("1/(x*y)", xy), 1}));
    CHECK_FALSE(length_certificate_check(sn.omega, LengthOne{P("1/x^2", sn.sp), 1}));
    CHECK(length_certificate_check(sn.omega, LengthTwo{sn.alpha("c")}));
    CHECK(length_certificate_check(sn.omega, LengthThree{sn.alpha("c"), sn.beta()}));
    CHECK_FALSE(length_certificate_check(sn.omega, LengthThree{sn.alpha("c"), sn.F * sn.omega}));
    CHECK_THROWS_AS(length_certificate_check(sn.omega, LengthOne{RatFunc(3), 1}), DomainError);
    CHECK_THROWS_AS(length_certificate_check(sn.omega, LengthOne{sn.F, 0}), DomainError);
    CHECK_THROWS_AS(length_certificate_check(sn.omega, LengthTwo{KForm::function(sn.F, 2)}), DomainError);
    // x^(-3/2) integrates 2x dy - y dx, so F = x^-3 with k = 2
    CHECK(length_certificate_check(form1({"-y", "2*x"}, xy), LengthOne{P("x^-3", xy), 2}));
    CHECK_FALSE(length_certificate_check(form1({"-y", "2*x"}, xy), LengthOne{P("x^-3", xy), 1}));
}

TEST_CASE("gauge examples")
{
    SaddleNode sn;
    RatFunc one = RatFunc::constant(3, Scalar(1)), zero(3);
    GVSequence triple{sn.omega, {sn.alpha("c"), sn.beta()}};
    GVSequence same = gv_gauge(triple, one, zero);
    CHECK(same.omega == triple.omega);
    CHECK(same.tail == triple.tail);

    GVSequence two{sn.omega, {dlog(sn.F, 2)}};
    GVSequence g2 = gv_gauge(two, P("x^2", sn.sp), zero);
    CHECK(g2.omega == P("x^2", sn.sp) * sn.omega);
    REQUIRE(g2.tail.size() == 1);
    CHECK(g2.tail[0] == dlog(sn.F, 2) - form1({"2/x", "0"}, sn.sp));
    CHECK(length_certificate_check(g2.omega, LengthTwo{g2.tail[0]}));

    GVSequence g3 = gv_gauge(triple, P("y", sn.sp), sn.F);
    CHECK(gv_verify(g3, 2));
    CHECK_THROWS_AS(gv_gauge(triple, zero, zero), DomainError);
}

TEST_CASE("gauge compositions re-verify")
{
    SaddleNode sn;
    testing::Random rnd(31);
    GVSequence triple{sn.omega, {sn.alpha("c"), sn.beta()}};
    for (int k = 0; k < 20; ++k) {
        RatFunc f1(rnd.nonzero_poly(3, 2, 2)), f2(rnd.nonzero_poly(3, 1, 2));
        RatFunc g1 = rnd.ratfunc(3, 1, 2), g2 = rnd.ratfunc(3, 1, 2);
        GVSequence once = gv_gauge(triple, f1, g1);
        CHECK(gv_verify(once, 2));
        GVSequence twice = gv_gauge(once, f2, g2);
        CHECK(gv_verify(twice, 2));
    }
    GVSequence two{sn.omega, {sn.alpha("c")}};
    for (int k = 0; k < 10; ++k) {
        // g must keep d(alpha) = 0 for a length-2 certificate: take g = 0
        RatFunc f(rnd.nonzero_poly(3, 2, 2));
        GVSequence g = gv_gauge(two, f, RatFunc(3));
        CHECK(length_certificate_check(g.omega, LengthTwo{g.term(1)}));
    }
}

TEST_CASE("transverse coefficient examples")
{
    Space tz{{"t", "z"}, {}};
    StraightChart flat;
    flat.t = 0;
    flat.z = {1};
    flat.w = RatFunc::constant(2, Scalar(1));
    flat.alpha = form1({"1/(t+1)", "0"}, tz);
    CHECK(transverse_coeff(flat, 2) == P("1/(t+1)", tz));

    StraightChart zw = flat;
    zw.w = P("z", tz);
    zw.alpha = form1({"1/(t+1)", "-1/z"}, tz);
    CHECK(transverse_coeff(zw, 2) == P("1/(t+1)", tz));

    StraightChart r1 = flat;
    r1.F = P("t^2", tz);
    r1.k = 2;
    CHECK(transverse_coeff(r1, 1) == P("1/t", tz));

    StraightChart bad = flat;
    bad.alpha = form1({"z", "0"}, tz);
    CHECK_THROWS_AS(transverse_coeff(bad, 2), InconsistentData);
    StraightChart leak = flat;
    leak.alpha = form1({"1", "1"}, tz);
    CHECK_THROWS_AS(transverse_coeff(leak, 2), InconsistentData);
    CHECK_THROWS_AS(transverse_coeff(flat, 3), DomainError);
    CHECK_THROWS_AS(transverse_coeff(flat, 1), DomainError);
    CHECK_THROWS_AS(transverse_coeff(flat, 4), DomainError);

    StraightChart r3 = flat;
    r3.beta = form1({"t", "0"}, tz);
    // u = 1/(t+1), nu = t + u' - u^2/2
    CHECK(transverse_coeff(r3, 3) == P("t - 3/(2*(t+1)^2)", tz));
}

TEST_CASE("transverse coefficients follow the disk coordinate cocycle")
{
    Space tz{{"t", "z"}, {}};
    const char *phis[] = {"t^2 + t", "t/(1-t)", "2*t + t^3", "(3*t+1)/(t+2)"};
    for (const char *ph : phis) {
        RatFunc phi = P(ph, tz);
        std::vector<RatFunc> map{phi, P("z", tz)};
        StraightChart chart;
        chart.t = 0;
        chart.z = {1};
        chart.w = P("z*(1+t)", tz);
        chart.alpha = form1({"t/(t-3)", "-1/z"}, tz);
        chart.beta = form1({"(t^2+1)/z", "0"}, tz);

        StraightChart moved = chart;
        moved.w = calculus::compose_geometric(chart.w, map) * phi.derivative(0);
        moved.alpha = calculus::pullback(map, *chart.alpha);
        moved.beta = calculus::pullback(map, *chart.beta);
        CHECK(calculus::pullback(map, P("z*(1+t)", tz) * KForm::basis(2, 0, 2)) == moved.w * KForm::basis(2, 0, 2));

        auto mu = std::get<disk::Rank2>(disk::coeff_transform(disk::Rank2{transverse_coeff(chart, 2)}, phi, 0));
        CHECK(transverse_coeff(moved, 2) == mu.mu);

        // rank-3 coefficient in the doubled Schwarzian normalization is twice the chart formula
        RatFunc nu2 = transverse_coeff(chart, 3).scaled(Scalar(2));
        auto nu = std::get<disk::Rank3>(disk::coeff_transform(disk::Rank3{nu2}, phi, 0));
        CHECK(transverse_coeff(moved, 3).scaled(Scalar(2)) == nu.nu);

        // rescaling omega by a function of t leaves mu unchanged
        StraightChart scaled = chart;
        RatFunc f = P("t^2+3", tz);
        scaled.w = f * chart.w;
        scaled.alpha = *chart.alpha - dlog(f, 2);
        CHECK(transverse_coeff(scaled, 2) == transverse_coeff(chart, 2));
    }
}
