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

#include "foliage/cli/problem.hpp"

#include "foliage/cli/expr.hpp"
#include "foliage/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace foliage::cli {

using calculus::KForm;
using exact::RatFunc;
using exact::Scalar;
using exact::Space;

namespace {

const Json &require(const Json &obj, const char *key, const std::string &where)
{
    auto it = obj.find(key);
    if (it == obj.end()) throw DomainError(where + ": missing \"" + key + "\"");
    return *it;
}

std::string text_of(const Json &node, const std::string &where)
{
    if (!node.is_string()) throw DomainError(where + ": expected an expression string");
    return node.get<std::string>();
}

int int_of(const Json &node, const std::string &where)
{
    if (!node.is_number_integer()) throw DomainError(where + ": expected an integer");
    return node.get<int>();
}

std::vector<std::string> names_of(const Json &node, const std::string &where)
{
    if (!node.is_array()) throw DomainError(where + ": expected a list of names");
    std::vector<std::string> out;
    for (const auto &n : node) {
        if (!n.is_string()) throw DomainError(where + ": names must be strings");
        out.push_back(n.get<std::string>());
    }
    return out;
}

void check_keys(const Json &obj, const std::set<std::string> &allowed, const std::string &where)
{
    if (!obj.is_object()) throw DomainError(where + ": expected an object");
    for (const auto &[k, v] : obj.items())
        if (!allowed.count(k)) throw DomainError(where + ": unknown key \"" + k + "\"");
}

RatFunc expr(const Json &node, const Space &space, const std::string &where)
{
    try {
        return parse_expression(text_of(node, where), space);
    } catch (const ParseError &e) {
        // keep the offset, which is relative to the expression string
        std::string msg = e.what();
        std::string tail = " at offset " + std::to_string(e.offset());
        if (msg.ends_with(tail)) msg.resize(msg.size() - tail.size());
        throw ParseError(where + ": " + msg, e.offset());
    }
}

std::size_t variable_index(const Json &node, const Space &space, const std::string &where)
{
    if (!node.is_string()) throw DomainError(where + ": expected a variable name");
    auto idx = space.index_of(node.get<std::string>());
    if (!idx || space.is_parameter(*idx)) throw DomainError(where + ": \"" + node.get<std::string>() + "\" is not a variable");
    return *idx;
}

godbillon::Certificate parse_certificate(const Json &node, const Space &space)
{
    check_keys(node, {"F", "k", "alpha", "beta"}, "certificate");
    if (node.contains("F")) {
        if (node.contains("alpha") || node.contains("beta"))
            throw DomainError("certificate: give either F or alpha/beta");
        godbillon::LengthOne c{expr(node["F"], space, "certificate.F"), 1};
        if (node.contains("k")) c.k = int_of(node["k"], "certificate.k");
        return c;
    }
    if (node.contains("k")) throw DomainError("certificate: k needs F");
    KForm alpha = parse_one_form(require(node, "alpha", "certificate"), space);
    if (!node.contains("beta")) return godbillon::LengthTwo{alpha};
    return godbillon::LengthThree{alpha, parse_one_form(node["beta"], space)};
}

godbillon::StraightChart parse_chart(const Json &node, const Space &space)
{
    check_keys(node, {"t", "z", "w", "alpha", "beta", "F", "k"}, "chart");
    godbillon::StraightChart c;
    c.t = variable_index(require(node, "t", "chart"), space, "chart.t");
    const Json &z = require(node, "z", "chart");
    if (!z.is_array()) throw DomainError("chart.z: expected a list of variables");
    for (const auto &v : z) c.z.push_back(variable_index(v, space, "chart.z"));
    c.w = expr(require(node, "w", "chart"), space, "chart.w");
    if (node.contains("alpha")) c.alpha = parse_one_form(node["alpha"], space);
    if (node.contains("beta")) c.beta = parse_one_form(node["beta"], space);
    if (node.contains("F")) c.F = expr(node["F"], space, "chart.F");
    if (node.contains("k")) c.k = int_of(node["k"], "chart.k");
    return c;
}

GermSpec parse_germ(const Json &node, const Space &space)
{
    check_keys(node, {"variable", "map", "series"}, "germ");
    GermSpec g;
    g.var = variable_index(require(node, "variable", "germ"), space, "germ.variable");
    if (node.contains("map") == node.contains("series")) throw DomainError("germ: give exactly one of map or series");
    if (node.contains("map")) {
        g.germ = expr(node["map"], space, "germ.map");
    } else {
        const Json &s = node["series"];
        if (!s.is_array() || s.empty()) throw DomainError("germ.series: expected a nonempty list of coefficients");
        std::vector<RatFunc> coeffs;
        for (const auto &c : s) coeffs.push_back(expr(c, space, "germ.series"));
        for (const auto &c : coeffs)
            if (!exact::is_parameter_only(c, space.dim()))
                throw DomainError("germ.series: coefficients may only involve parameters");
        g.germ = exact::Series1(g.var, std::move(coeffs));
    }
    disk::validate_germ(g.germ, g.var);
    return g;
}

GroupoidSpec parse_groupoid(const Json &node, const Space &space)
{
    check_keys(node, {"variable", "rank", "h", "gamma", "k", "mu", "nu"}, "groupoid");
    GroupoidSpec g;
    g.var = variable_index(require(node, "variable", "groupoid"), space, "groupoid.variable");
    const Json &rank = require(node, "rank", "groupoid");
    auto only = [&](std::set<std::string> keys) {
        keys.insert({"variable", "rank"});
        check_keys(node, keys, "groupoid");
    };
    if (rank.is_string() && rank.get<std::string>() == "inf") {
        only({});
        g.groupoid = disk::RankInf{};
        return g;
    }
    switch (int_of(rank, "groupoid.rank")) {
    case 0:
        only({"h"});
        g.groupoid = disk::Rank0{expr(require(node, "h", "groupoid"), space, "groupoid.h")};
        break;
    case 1: {
        only({"gamma", "k"});
        disk::Rank1 r{expr(require(node, "gamma", "groupoid"), space, "groupoid.gamma"), 1};
        if (node.contains("k")) r.k = int_of(node["k"], "groupoid.k");
        if (r.k < 1) throw DomainError("groupoid.k must be positive");
        g.groupoid = r;
        break;
    }
    case 2:
        only({"mu"});
        g.groupoid = disk::Rank2{expr(require(node, "mu", "groupoid"), space, "groupoid.mu")};
        break;
    case 3:
        only({"nu"});
        g.groupoid = disk::Rank3{expr(require(node, "nu", "groupoid"), space, "groupoid.nu")};
        break;
    default:
        throw DomainError("groupoid.rank must be 0, 1, 2, 3 or \"inf\"");
    }
    return g;
}

} // namespace

Scalar parse_constant(const std::string &text, const Space &space)
{
    auto c = parse_expression(text, space).as_constant();
    if (!c) throw DomainError("\"" + text + "\" is not a constant");
    return *c;
}

KForm parse_one_form(const Json &node, const Space &space)
{
    if (!node.is_object()) throw DomainError("a 1-form is an object mapping d<variable> to an expression");
    KForm out(space.dim(), 1, space.arity());
    for (const auto &[key, value] : node.items()) {
        std::optional<std::size_t> idx;
        if (key.size() > 1 && key[0] == 'd') idx = space.index_of(key.substr(1));
        if (!idx || space.is_parameter(*idx)) throw DomainError("unknown covector \"" + key + "\"");
        out.set({*idx}, expr(value, space, key));
    }
    return out;
}

Json print_one_form(const KForm &form, const Space &space)
{
    Json out = Json::object();
    for (const auto &[idx, c] : form.terms()) out["d" + space.variables[idx[0]]] = print(c, space);
    return out;
}

ProblemFile parse_problem(const Json &doc)
{
    check_keys(doc,
               {"variables", "parameters", "form", "sequence", "field", "certificate", "chart", "germ", "groupoid",
                "initial", "budgets"},
               "problem");
    ProblemFile p;
    p.space.variables = names_of(require(doc, "variables", "problem"), "variables");
    if (doc.contains("parameters")) p.space.parameters = names_of(doc["parameters"], "parameters");
    if (p.space.variables.empty()) throw DomainError("variables: at least one variable is needed");
    p.space.validate();
    const Space &space = p.space;

    if (doc.contains("form")) p.form = parse_one_form(doc["form"], space);
    if (doc.contains("sequence")) {
        const Json &s = doc["sequence"];
        if (!s.is_array()) throw DomainError("sequence: expected a list of 1-forms");
        for (const auto &t : s) p.sequence.push_back(parse_one_form(t, space));
    }
    if (doc.contains("field")) {
        const Json &f = doc["field"];
        check_keys(f, std::set<std::string>(space.variables.begin(), space.variables.end()), "field");
        std::vector<RatFunc> comps(space.dim(), space.zero());
        for (std::size_t i = 0; i < space.dim(); ++i)
            if (f.contains(space.variables[i])) comps[i] = expr(f[space.variables[i]], space, "field");
        p.field = calculus::VectorField(std::move(comps));
    }
    if (doc.contains("certificate")) p.certificate = parse_certificate(doc["certificate"], space);
    if (doc.contains("chart")) p.chart = parse_chart(doc["chart"], space);
    if (doc.contains("germ")) p.germ = parse_germ(doc["germ"], space);
    if (doc.contains("groupoid")) p.groupoid = parse_groupoid(doc["groupoid"], space);
    if (doc.contains("initial")) {
        const Json &init = doc["initial"];
        check_keys(init, {"G0", "F0", "H0", "branch"}, "initial");
        auto get = [&](const char *key, std::optional<Scalar> &slot) {
            if (init.contains(key)) slot = parse_constant(text_of(init[key], key), space);
        };
        get("G0", p.initial.G0);
        get("F0", p.initial.F0);
        get("H0", p.initial.H0);
        get("branch", p.initial.branch);
    }
    if (doc.contains("budgets")) {
        const Json &b = doc["budgets"];
        check_keys(b, {"darboux", "g", "beta"}, "budgets");
        if (b.contains("darboux")) p.budget_darboux = int_of(b["darboux"], "budgets.darboux");
        if (b.contains("g")) p.budget_g = int_of(b["g"], "budgets.g");
        if (b.contains("beta")) p.budget_beta = int_of(b["beta"], "budgets.beta");
    }
    return p;
}

ProblemFile parse_problem_text(const std::string &text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_problem(doc);
    } catch (const Json::exception &e) {
        throw DomainError(std::string("malformed problem file: ") + e.what());
    }
}

ProblemFile load_problem(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

} // namespace foliage::cli
