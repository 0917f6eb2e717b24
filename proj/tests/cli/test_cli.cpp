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

#include "../support/fixture_runs.hpp"
#include "../support/random.hpp"
#include "foliage/cli/expr.hpp"
#include "foliage/cli/problem.hpp"
#include "foliage/error.hpp"

using namespace foliage;
using cli::Json;
using testing::run;

namespace {

const std::string kDir = FOLIAGE_FIXTURES;

Json report(const std::vector<std::string> &args)
{
    auto r = run(args);
    return Json::parse(r.out);
}

} // namespace

TEST_CASE("exit code contract")
{
    auto rr = run({"rank-report", kDir + "/saddle_node.json"});
    CHECK(rr.code == 0);
    Json j = Json::parse(rr.out);
    CHECK(j["result"]["rank_bound"] == 1);
    CHECK(j["result"]["certificate"]["F"] == "1/(x^2*y)");
    CHECK(j["result"]["verified"] == true);

    CHECK(run({"frobenius", kDir + "/nonintegrable.json"}).code == 1);
    CHECK(run({"gv-verify", kDir + "/malformed.json"}).code == 2);
    CHECK(run({"gv-verify", kDir + "/does_not_exist.json"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"flow", "--field", "x^2"}).code == 2);
}

TEST_CASE("fixture runs give the documented exit codes")
{
    for (const auto &f : testing::fixture_runs(kDir)) {
        CAPTURE(f.args[0]);
        CAPTURE(f.args.size() > 1 ? f.args[1] : "");
        CHECK(run(f.args).code == f.exit_code);
    }
}

TEST_CASE("reports are byte identical across runs")
{
    for (const auto &f : testing::fixture_runs(kDir)) {
        auto a = run(f.args), b = run(f.args);
        CAPTURE(f.args[0]);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("report payloads")
{
    Json ext = report({"gv-extend", kDir + "/saddle_node_field.json", "--steps", "2"});
    // alpha = dF/F + F omega with F = 1/(x^2 y)
    CHECK(ext["result"]["sequence"][0]["dx"] == "(-2*x - 1)/x^2");
    CHECK(ext["result"]["sequence"][1].empty());

    Json h = report({"rank-report", kDir + "/resonant_2_3.json"});
    CHECK(h["result"]["certificate"]["kind"] == "first_integral");
    CHECK(h["result"]["certificate"]["H"] == "x^2*y^3");

    Json dc = report({"disk-coeff", "--field", "x^2", "--rank", "3"});
    CHECK(dc["result"]["nu"] == "c/x^4");

    Json fl = report({"flow", "--field", "x^2", "--order", "3"});
    CHECK(fl["result"]["series"] == Json{"0", "1", "1", "1"});

    Json cl = report({"classify", kDir + "/resonant_2_3.json"});
    CHECK(cl["result"]["class"] == "ResonantSaddle");
    CHECK(cl["result"]["p"] == 2);
    CHECK(cl["result"]["q"] == 3);

    Json err = report({"rank-report", kDir + "/undeclared.json"});
    CHECK(err["error"]["kind"] == "parse");
    CHECK(err["error"]["offset"] == 0);

    // the JSON report comes first even with --pretty
    auto pretty = run({"classify", kDir + "/saddle_node.json", "--pretty"});
    auto split = pretty.out.find("\n\n");
    REQUIRE(split != std::string::npos);
    CHECK(Json::parse(pretty.out.substr(0, split))["result"]["class"] == "SaddleNode");
    CHECK(pretty.out.substr(split + 2) == "origin: SaddleNode\n");
}

TEST_CASE("problem file validation")
{
    auto bad = [](const char *text) {
        CAPTURE(text);
        CHECK_THROWS_AS(cli::parse_problem_text(text), Error);
    };
    bad("[]");
    bad("{}");
    bad(R"({"variables": []})");
    bad(R"({"variables": ["x", "x"]})");
    bad(R"({"variables": ["x"], "colour": 1})");
    bad(R"({"variables": ["x"], "form": {"dy": "x"}})");
    bad(R"({"variables": ["x"], "parameters": ["c"], "form": {"dc": "x"}})");
    bad(R"({"variables": ["x"], "form": {"dx": 3}})");
    bad(R"({"variables": ["x"], "form": {"dx": "x*"}})");
    bad(R"({"variables": ["x"], "germ": {"variable": "x", "map": "1+x"}})");
    bad(R"({"variables": ["x"], "groupoid": {"variable": "x", "rank": 4}})");
    bad(R"({"variables": ["x"], "groupoid": {"variable": "x", "rank": 2, "nu": "x"}})");
    bad(R"({"variables": ["x"], "certificate": {"F": "x", "alpha": {"dx": "1"}}})");
    bad(R"({"variables": ["x"], "initial": {"F0": "x"}})");

    auto p = cli::parse_problem_text(R"({"variables": ["x", "y"], "parameters": ["c"],
        "form": {"dx": "c*y", "dy": "(2+3*i)/x"}, "budgets": {"darboux": 1}})");
    CHECK(p.space.arity() == 3);
    CHECK(p.budget_darboux == 1);
    REQUIRE(p.form);
    CHECK(cli::print_one_form(*p.form, p.space) == Json{{"dx", "y*c"}, {"dy", "(2+3*i)/x"}});
    CHECK_FALSE(p.budget_g.has_value());
}

TEST_CASE("parse after print is the identity on 500 random values")
{
    testing::Random rng(2026);
    exact::Space space{{"x", "y"}, {"c"}};
    for (int n = 0; n < 500; ++n) {
        auto r = rng.ratfunc(3, 3, 3, n % 2 == 1);
        std::string text = cli::print(r, space);
        CAPTURE(text);
        CHECK(cli::parse_expression(text, space) == r);
    }
    // one-forms too
    for (int n = 0; n < 50; ++n) {
        auto form = calculus::KForm::one_form({rng.ratfunc(3), rng.ratfunc(3)});
        CHECK(cli::parse_one_form(cli::print_one_form(form, space), space) == form);
    }
}
