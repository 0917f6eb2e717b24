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

#pragma once

#include "foliage/cli/commands.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace foliage::testing {

struct FixtureRun {
    std::vector<std::string> args; // FILE arguments are relative to the fixture directory
    int exit_code;
};

// One run per fixture file plus the flag-only commands.
inline std::vector<FixtureRun> fixture_runs(const std::string &dir)
{
    auto f = [&](const char *name) { return dir + "/" + name; };
    return {
        {{"rank-report", f("saddle_node.json")}, 0},
        {{"frobenius", f("nonintegrable.json")}, 1},
        {{"gv-verify", f("malformed.json")}, 2},
        {{"frobenius", f("saddle_node.json")}, 0},
        {{"rank-report", f("undeclared.json")}, 2},
        {{"gv-verify", f("saddle_node_gv.json")}, 0},
        {{"gv-verify", f("bad_sequence.json")}, 1},
        {{"gv-extend", f("saddle_node_field.json"), "--steps", "3"}, 0},
        {{"rank-report", f("product.json")}, 0},
        {{"rank-report", f("resonant_2_3.json")}, 0},
        {{"rank-report", f("rank_two.json"), "--dmax", "2"}, 0},
        {{"classify", f("saddle_node.json")}, 0},
        {{"classify", f("saddle.json"), "--pretty"}, 0},
        {{"classify", f("resonant_2_3.json")}, 0},
        {{"disk-membership", f("flow_rank2.json"), "--order", "8"}, 0},
        {{"disk-membership", f("series_rank3.json"), "--order", "5"}, 0},
        {{"disk-membership", f("non_mobius.json"), "--order", "3"}, 1},
        {{"tower", f("liouville_tower.json"), "--kind", "liouville", "--base", "1,1", "--order", "6"}, 0},
        {{"tower", f("riccati_tower.json"), "--kind", "riccati", "--base", "1,1", "--order", "6"}, 0},
        {{"tower", f("darboux_tower.json"), "--kind", "darboux", "--base", "1,1", "--order", "6"}, 0},
        {{"tower", f("darboux_tower.json"), "--kind", "riccati", "--base", "1,1", "--order", "6"}, 2},
        {{"disk-coeff", "--field", "x^2", "--rank", "2"}, 0},
        {{"disk-coeff", "--field", "x^2", "--rank", "3", "--pretty"}, 0},
        {{"flow", "--field", "x^2+x^3", "--order", "6"}, 0},
        {{"flow", "--field", "s*x^2", "--order", "4", "--params", "s"}, 0},
        {{"holonomy-check", "--k", "2", "--lambda", "l", "--params", "l"}, 0},
        {{"holonomy-check", "--k", "3", "--lambda", "i"}, 0},
        {{"disk-coeff", "--field", "x+", "--rank", "2"}, 2},
        {{"tower", f("liouville_tower.json")}, 2},
    };
}

struct RunResult {
    int code;
    std::string out;
};

inline RunResult run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str()};
}

} // namespace foliage::testing
