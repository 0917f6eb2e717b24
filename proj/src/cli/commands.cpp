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

#include "foliage/cli/commands.hpp"

#include "foliage/cli/expr.hpp"
#include "foliage/cli/problem.hpp"
#include "foliage/disk/laurent.hpp"
#include "foliage/error.hpp"
#include "foliage/integrability/report.hpp"
#include "foliage/integrability/tower.hpp"
#include "foliage/planar/planar.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace foliage::cli {

using calculus::KForm;
using exact::RatFunc;
using exact::Scalar;
using exact::Space;

namespace {

// Outcome of a command body: exit code, result payload, summary lines.
struct Outcome {
    int code = kSuccess;
    Json result = Json::object();
    std::vector<std::string> human;
};

struct Options {
    std::string file;
    std::string field, lambda, kind, base;
    std::string var = "x";
    std::vector<std::string> params;
    int steps = 1, dmax = -1, rank = 0, order = 0, k = 0, n = -1;
};

Json print_form(const KForm &form, const Space &space)
{
    if (form.degree() == 1) return print_one_form(form, space);
    Json out = Json::object();
    for (const auto &[idx, c] : form.terms()) {
        std::string key;
        for (std::size_t v : idx) key += (key.empty() ? "d" : "^d") + space.variables[v];
        out[key.empty() ? "1" : key] = print(c, space);
    }
    return out;
}

Json print_series(const integrability::TruncSeries &s, const Space &space)
{
    Json out = Json::array();
    for (const auto &[e, c] : s.terms()) out.push_back(Json{{"exponents", e}, {"coefficient", print(c, space)}});
    return out;
}

Json print_certificate(const godbillon::Certificate &c, const Space &space)
{
    Json out;
    out["length"] = godbillon::certificate_length(c);
    if (auto *one = std::get_if<godbillon::LengthOne>(&c)) {
        out["F"] = print(one->F, space);
        out["k"] = one->k;
    } else if (auto *two = std::get_if<godbillon::LengthTwo>(&c)) {
        out["alpha"] = print_one_form(two->alpha, space);
    } else {
        const auto &three = std::get<godbillon::LengthThree>(c);
        out["alpha"] = print_one_form(three.alpha, space);
        out["beta"] = print_one_form(three.beta, space);
    }
    return out;
}

const KForm &need_form(const ProblemFile &p)
{
    if (!p.form) throw DomainError("problem file has no \"form\"");
    return *p.form;
}

Space flag_space(const Options &o)
{
    Space s;
    s.variables = {o.var};
    s.parameters = o.params;
    s.validate();
    return s;
}

Outcome cmd_frobenius(const Options &o)
{
    ProblemFile p = load_problem(o.file);
    const KForm &omega = need_form(p);
    if (omega.is_zero()) throw DomainError("omega = 0");
    KForm obstruction = calculus::wedge(omega, calculus::ext_d(omega));
    Outcome out;
    bool integrable = obstruction.is_zero();
    out.result["integrable"] = integrable;
    out.result["omega_wedge_domega"] = print_form(obstruction, p.space);
    out.code = integrable ? kSuccess : kFalse;
    out.human.push_back(integrable ? "omega ^ d omega = 0: integrable" : "omega ^ d omega != 0: not integrable");
    return out;
}

Outcome cmd_gv_verify(const Options &o)
{
    ProblemFile p = load_problem(o.file);
    godbillon::GVSequence seq{need_form(p), p.sequence, -1};
    int n = o.n >= 0 ? o.n : std::max<int>(0, 2 * static_cast<int>(seq.tail.size()) - 1);
    Outcome out;
    bool holds = godbillon::gv_verify(seq, n);
    out.result["n"] = n;
    out.result["holds"] = holds;
    out.result["verified_to"] = seq.verified_to;
    out.human.push_back("recurrence " + std::string(holds ? "holds" : "fails") + " (verified through index " +
                        std::to_string(seq.verified_to) + ")");
    if (p.certificate) {
        bool ok = godbillon::length_certificate_check(seq.omega, *p.certificate);
        Json c = print_certificate(*p.certificate, p.space);
        c["holds"] = ok;
        out.result["certificate"] = c;
        holds = holds && ok;
        out.human.push_back("length " + std::to_string(godbillon::certificate_length(*p.certificate)) +
                            " certificate " + (ok ? "holds" : "fails"));
    }
    if (p.chart) {
        int rank = p.chart->beta ? 3 : p.chart->alpha ? 2 : p.chart->F ? 1 : 0;
        if (rank == 0) throw DomainError("chart needs F, alpha or beta");
        RatFunc mu = godbillon::transverse_coeff(*p.chart, rank);
        Json tr{{"rank", rank}, {"coefficient", print(mu, p.space)}};
        // the rank-3 groupoid equation uses the doubled Schwarzian, hence 2 nu
        if (rank == 3) tr["groupoid_coefficient"] = print(mu.scaled(Scalar(2)), p.space);
        out.result["transverse"] = tr;
        out.human.push_back("transverse coefficient (rank " + std::to_string(rank) + "): " + print(mu, p.space));
    }
    out.code = holds ? kSuccess : kFalse;
    return out;
}

Outcome cmd_gv_extend(const Options &o)
{
    ProblemFile p = load_problem(o.file);
    if (!p.field) throw DomainError("gv-extend needs a \"field\" X with omega(X) = 1");
    if (o.steps < 0) throw DomainError("--steps must be nonnegative");
    godbillon::GVSequence seq{need_form(p), p.sequence, -1};
    Outcome out;
    int added = 0;
    std::string failure;
    try {
        for (; added < o.steps; ++added) seq.tail.push_back(godbillon::gv_extend(seq, *p.field));
    } catch (const InconsistentData &e) {
        failure = e.what();
    }
    Json terms = Json::array();
    for (const auto &t : seq.tail) terms.push_back(print_one_form(t, p.space));
    bool holds = seq.tail.empty() || godbillon::gv_verify(seq, static_cast<int>(seq.tail.size()) - 1);
    out.result["steps"] = added;
    out.result["sequence"] = terms;
    out.result["verified_to"] = seq.verified_to;
    out.human.push_back("extended by " + std::to_string(added) + " of " + std::to_string(o.steps) + " steps");
    for (std::size_t j = 0; j < seq.tail.size(); ++j)
        out.human.push_back("omega_" + std::to_string(j + 1) + " = " + terms[j].dump());
    if (!failure.empty()) {
        out.result["failure"] = failure;
        out.human.push_back("stopped: " + failure);
    }
    out.code = failure.empty() && holds ? kSuccess : kFalse;
    return out;
}

Outcome cmd_rank_report(const Options &o)
{
    ProblemFile p = load_problem(o.file);
    integrability::Budgets b;
    if (p.budget_darboux) b.darboux = *p.budget_darboux;
    if (p.budget_g) b.g = *p.budget_g;
    if (p.budget_beta) b.beta = *p.budget_beta;
    if (o.dmax >= 0) b.darboux = o.dmax;
    auto rep = integrability::rank_report(need_form(p), p.space, b);
    const Space &s = p.space;
    Outcome out;
    if (rep.rank_bound >= 0)
        out.result["rank_bound"] = rep.rank_bound;
    else
        out.result["rank_bound"] = "inconclusive";
    out.result["verified"] = rep.verified;
    Json cert = nullptr;
    std::visit(
        [&](const auto &c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, integrability::FirstIntegral>)
                cert = Json{{"kind", "first_integral"}, {"H", print(c.H, s)}};
            else if constexpr (!std::is_same_v<T, std::monostate>) {
                cert = print_certificate(godbillon::Certificate(c), s);
                cert.erase("length");
                Json tagged{{"kind", "length_" + std::to_string(godbillon::certificate_length(c))}};
                tagged.update(cert);
                cert = tagged;
            }
        },
        rep.certificate);
    out.result["certificate"] = cert;
    out.result["budgets"] = Json{{"darboux", b.darboux}, {"g", b.g}, {"beta", b.beta}};
    Json pairs = Json::array();
    for (const auto &d : rep.darboux.pairs)
        pairs.push_back(Json{{"f", print_poly(d.f, s.names())}, {"K", print_poly(d.K, s.names())}});
    out.result["darboux"] = pairs;
    out.result["notes"] = rep.notes;
    out.code = rep.rank_bound >= 0 && rep.verified ? kSuccess : kFalse;
    out.human.push_back(rep.rank_bound >= 0 ? "transverse rank <= " + std::to_string(rep.rank_bound)
                                            : std::string("inconclusive"));
    if (!cert.is_null())
        for (const auto &[k, v] : cert.items())
            if (k != "kind") out.human.push_back("  " + k + " = " + (v.is_string() ? v.get<std::string>() : v.dump()));
    for (const auto &n : rep.notes) out.human.push_back("note: " + n);
    return out;
}

Outcome cmd_classify(const Options &o)
{
    ProblemFile p = load_problem(o.file);
    const KForm &omega = need_form(p);
    if (p.space.dim() != 2) throw DomainError("classify needs exactly two variables");
    auto fol = planar::PlanarFoliation::from_ratfuncs(p.space, omega[0], omega[1]);
    auto cls = planar::classify_origin(fol);
    Outcome out;
    out.result["class"] = planar::class_name(cls);
    if (auto *s = std::get_if<planar::Saddle>(&cls)) {
        out.result["ratio"] = s->ratio ? Json(print(*s->ratio, p.space)) : Json(nullptr);
        if (!s->note.empty()) out.result["note"] = s->note;
    } else if (auto *r = std::get_if<planar::ResonantSaddle>(&cls)) {
        out.result["p"] = r->p;
        out.result["q"] = r->q;
    } else if (auto *n = std::get_if<planar::NotReduced>(&cls)) {
        out.result["reason"] = n->reason;
    }
    out.human.push_back("origin: " + planar::class_name(cls));
    return out;
}

Outcome cmd_disk_coeff(const Options &o)
{
    Space s = flag_space(o);
    RatFunc a = parse_expression(o.field, s);
    auto fam = disk::family_from_field(a, s, 0, o.rank);
    const Space &fs = fam.space;
    Outcome out;
    out.result["rank"] = o.rank;
    out.result["parameter"] = fs.names()[fam.parameter];
    std::string key, value;
    if (auto *g1 = std::get_if<disk::Rank1>(&fam.groupoid)) {
        key = "gamma";
        value = print(g1->gamma, fs);
        out.result["k"] = g1->k;
    } else if (auto *g2 = std::get_if<disk::Rank2>(&fam.groupoid)) {
        key = "mu";
        value = print(g2->mu, fs);
    } else {
        key = "nu";
        value = print(std::get<disk::Rank3>(fam.groupoid).nu, fs);
    }
    out.result[key] = value;
    out.result["verified"] = true;
    out.human.push_back(key + " = " + value);
    return out;
}

Outcome cmd_disk_membership(const Options &o)
{
    ProblemFile p = load_problem(o.file);
    if (!p.germ || !p.groupoid) throw DomainError("disk-membership needs \"germ\" and \"groupoid\"");
    if (p.germ->var != p.groupoid->var) throw DomainError("germ and groupoid use different variables");
    if (o.order < 0) throw DomainError("--order must be nonnegative");
    auto check = disk::check_solution(p.germ->germ, p.groupoid->groupoid, p.germ->var, o.order);
    Outcome out;
    out.result["rank"] = disk::groupoid_rank(p.groupoid->groupoid);
    out.result["holds"] = check.holds;
    if (check.checked_through == disk::Laurent::kExact)
        out.result["checked_through"] = "exact";
    else
        out.result["checked_through"] = check.checked_through;
    out.code = check.holds ? kSuccess : kFalse;
    out.human.push_back(std::string("germ ") + (check.holds ? "solves" : "does not solve") + " the groupoid equation");
    return out;
}

Outcome cmd_flow(const Options &o)
{
    Space s = flag_space(o);
    RatFunc a = parse_expression(o.field, s);
    if (o.order < 0) throw DomainError("--order must be nonnegative");
    auto g = disk::lie_flow(a, 0, o.order);
    Outcome out;
    out.result["order"] = o.order;
    if (auto *r = std::get_if<RatFunc>(&g)) {
        out.result["map"] = print(*r, s);
        out.human.push_back("exp(a d/dx)(x) = " + print(*r, s));
    } else {
        Json coeffs = Json::array();
        for (const auto &c : std::get<exact::Series1>(g).coefficients()) coeffs.push_back(print(c, s));
        out.result["series"] = coeffs;
        out.human.push_back("exp(a d/dx)(x) = " + print(std::get<exact::Series1>(g).to_ratfunc(), s) + " + O(" +
                            o.var + "^" + std::to_string(o.order + 1) + ")");
    }
    return out;
}

Outcome cmd_tower(const Options &o)
{
    using integrability::TowerKind;
    ProblemFile p = load_problem(o.file);
    const KForm &omega = need_form(p);
    TowerKind kind;
    if (o.kind == "darboux")
        kind = TowerKind::Darboux;
    else if (o.kind == "liouville")
        kind = TowerKind::Liouville;
    else if (o.kind == "riccati")
        kind = TowerKind::Riccati;
    else
        throw DomainError("--kind must be darboux, liouville or riccati");
    if (!p.certificate) throw DomainError("tower needs a \"certificate\"");
    integrability::TowerInput in;
    if (auto *one = std::get_if<godbillon::LengthOne>(&*p.certificate)) {
        in.F = one->F;
        in.k = one->k;
    } else if (auto *two = std::get_if<godbillon::LengthTwo>(&*p.certificate)) {
        in.alpha = two->alpha;
    } else {
        in.alpha = std::get<godbillon::LengthThree>(*p.certificate).alpha;
        in.beta = std::get<godbillon::LengthThree>(*p.certificate).beta;
    }
    if ((kind == TowerKind::Darboux) != static_cast<bool>(in.F) || (kind == TowerKind::Riccati) != static_cast<bool>(in.beta))
        throw DomainError("certificate does not match --kind " + o.kind);
    if (p.initial.G0) in.G0 = *p.initial.G0;
    if (p.initial.F0) in.F0 = *p.initial.F0;
    if (p.initial.H0) in.H0 = *p.initial.H0;
    in.branch = p.initial.branch;

    std::vector<Scalar> base;
    std::stringstream ss(o.base);
    for (std::string item; std::getline(ss, item, ',');) base.push_back(parse_constant(item, p.space));

    Outcome out;
    out.result["kind"] = o.kind;
    Json b = Json::array();
    for (const auto &c : base) b.push_back(print_scalar(c));
    out.result["basepoint"] = b;
    out.result["order"] = o.order;
    try {
        auto t = integrability::tower_series(kind, omega, in, base, o.order);
        out.result["verified"] = t.verified;
        out.result["mixed_partials_checked"] = t.mixed_partials_checked;
        if (t.G) out.result["G"] = print_series(*t.G, p.space);
        out.result["F"] = print_series(t.F, p.space);
        out.result["H"] = print_series(t.H, p.space);
        out.code = t.verified ? kSuccess : kFalse;
        out.human.push_back(std::string("dH ^ omega ") + (t.verified ? "vanishes" : "does not vanish") +
                            " through order " + std::to_string(o.order));
    } catch (const InconsistentData &e) {
        out.result["verified"] = false;
        out.result["failure"] = e.what();
        out.code = kFalse;
        out.human.push_back(std::string("tower failed: ") + e.what());
    }
    return out;
}

Outcome cmd_holonomy(const Options &o)
{
    Space s = flag_space(o);
    RatFunc lambda = parse_expression(o.lambda, s);
    std::string tau_name = "tau";
    while (s.index_of(tau_name)) tau_name += "_";
    Space st = s;
    st.parameters.push_back(tau_name);
    std::vector<std::size_t> map(s.arity());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    RatFunc lam = lambda.remap(st.arity(), map);
    RatFunc tau = RatFunc::variable(st.arity(), st.arity() - 1);
    if (o.k < 1) throw DomainError("--k must be positive");
    bool ok = planar::holonomy_integral_identity(o.k, lam, tau, 0);
    Outcome out;
    out.result["k"] = o.k;
    out.result["lambda"] = print(lam, st);
    out.result["field"] = print(planar::holonomy_field(o.k, lam, tau, 0), st);
    out.result["identity"] = ok;
    out.code = ok ? kSuccess : kFalse;
    out.human.push_back(std::string("a * d/dx log H = -") + tau_name + (ok ? " holds" : " fails"));
    return out;
}

Json error_json(const char *kind, const std::string &message)
{
    return Json{{"kind", kind}, {"message", message}};
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Certificates for transverse structures of codimension-one foliations", "foliage"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Append a human-readable summary after the JSON report");
    Options o;
    Json echo = Json::object();

    struct Entry {
        CLI::App *app;
        std::function<Outcome(const Options &)> body;
    };
    std::vector<Entry> entries;
    auto sub = [&](const char *name, const char *help, std::function<Outcome(const Options &)> body) {
        CLI::App *s = app.add_subcommand(name, help);
        entries.push_back({s, std::move(body)});
        return s;
    };
    auto file = [&](CLI::App *s) { s->add_option("FILE", o.file, "Problem file")->required(); };
    auto space_flags = [&](CLI::App *s) {
        s->add_option("--var", o.var, "Disk variable name");
        s->add_option("--params", o.params, "Parameter names")->delimiter(',');
    };

    file(sub("frobenius", "Check omega ^ d omega = 0", cmd_frobenius));
    auto *gv = sub("gv-verify", "Check a Godbillon-Vey sequence and optional certificate", cmd_gv_verify);
    file(gv);
    gv->add_option("--n", o.n, "Check the recurrence through this index");
    auto *ext = sub("gv-extend", "Extend a Godbillon-Vey sequence", cmd_gv_extend);
    file(ext);
    ext->add_option("--steps", o.steps, "Number of terms to add")->required();
    auto *rr = sub("rank-report", "Search for a transverse rank certificate", cmd_rank_report);
    file(rr);
    rr->add_option("--dmax", o.dmax, "Degree budget of the Darboux search");
    file(sub("classify", "Classify the singularity at the origin", cmd_classify));
    auto *dc = sub("disk-coeff", "Groupoid family invariant under a field", cmd_disk_coeff);
    dc->add_option("--field", o.field, "Field coefficient a(x)")->required();
    dc->add_option("--rank", o.rank, "Groupoid rank 1, 2 or 3")->required();
    space_flags(dc);
    auto *dm = sub("disk-membership", "Check that a germ solves a groupoid equation", cmd_disk_membership);
    file(dm);
    dm->add_option("--order", o.order, "Series order for truncated germs")->required();
    auto *fl = sub("flow", "Time-one flow of a(x) d/dx", cmd_flow);
    fl->add_option("--field", o.field, "Field coefficient a(x)")->required();
    fl->add_option("--order", o.order, "Series order")->required();
    space_flags(fl);
    auto *tw = sub("tower", "Series expansion of a first integral tower", cmd_tower);
    file(tw);
    tw->add_option("--kind", o.kind, "darboux, liouville or riccati")->required();
    tw->add_option("--base", o.base, "Basepoint, comma separated")->required();
    tw->add_option("--order", o.order, "Series order")->required();
    auto *hc = sub("holonomy-check", "Check the holonomy integral identity", cmd_holonomy);
    hc->add_option("--k", o.k, "Order k")->required();
    hc->add_option("--lambda", o.lambda, "Formal invariant lambda")->required();
    space_flags(hc);

    std::string command = args.empty() ? "" : args.front();
    Json report;
    Outcome outcome;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        const CLI::App *target = &app;
        for (const auto &e : entries)
            if (e.app->parsed()) target = e.app;
        out << target->help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        report = Json{{"command", command}, {"status", "error"}, {"exit_code", int(kInputError)},
                      {"error", error_json("usage", e.what())}};
        out << report.dump(2) << "\n";
        return kInputError;
    }

    const Entry *chosen = nullptr;
    for (const auto &e : entries)
        if (e.app->parsed()) chosen = &e;
    command = chosen->app->get_name();
    for (const CLI::Option *opt : chosen->app->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string name = opt->get_name();
        name.erase(0, name.find_first_not_of('-'));
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
        auto res = opt->results();
        echo[name] = res.size() == 1 ? Json(res[0]) : Json(res);
    }
    report["command"] = command;
    report["arguments"] = echo;

    std::string error_kind, message;
    std::optional<std::size_t> offset;
    try {
        outcome = chosen->body(o);
    } catch (const ParseError &e) {
        error_kind = "parse";
        message = e.what();
        offset = e.offset();
    } catch (const DomainError &e) {
        error_kind = "domain";
        message = e.what();
    } catch (const InconsistentData &e) {
        error_kind = "inconsistent";
        message = e.what();
    } catch (const Error &e) {
        error_kind = "error";
        message = e.what();
    } catch (const Json::exception &e) {
        error_kind = "json";
        message = e.what();
    } catch (const std::exception &e) {
        error_kind = "internal";
        message = e.what();
    }
    if (!error_kind.empty()) {
        report["status"] = "error";
        report["exit_code"] = int(kInputError);
        Json e = error_json(error_kind.c_str(), message);
        if (offset) e["offset"] = *offset;
        report["error"] = e;
        out << report.dump(2) << "\n";
        if (pretty) out << "\nerror: " << message << "\n";
        return kInputError;
    }
    report["status"] = outcome.code == kSuccess ? "ok" : "false";
    report["exit_code"] = outcome.code;
    report["result"] = outcome.result;
    out << report.dump(2) << "\n";
    if (pretty) {
        out << "\n";
        for (const auto &line : outcome.human) out << line << "\n";
    }
    return outcome.code;
}

} // namespace foliage::cli
