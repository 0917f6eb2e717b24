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

#include "foliage/calculus/forms.hpp"
#include "foliage/disk/disk.hpp"
#include "foliage/exact/space.hpp"
#include "foliage/godbillon/godbillon.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace foliage::cli {

using Json = nlohmann::ordered_json;

struct GermSpec {
    std::size_t var = 0;
    disk::Germ germ;
};

struct GroupoidSpec {
    std::size_t var = 0;
    disk::DiskGroupoid groupoid;
};

// Initial values for the tower kinds; absent entries keep the library defaults.
struct TowerInitial {
    std::optional<exact::Scalar> G0, F0, H0, branch;
};

/// Parsed problem file. See README.md for the schema.
struct ProblemFile {
    exact::Space space;
    std::optional<calculus::KForm> form;
    std::vector<calculus::KForm> sequence;
    std::optional<calculus::VectorField> field;
    std::optional<godbillon::Certificate> certificate;
    std::optional<godbillon::StraightChart> chart;
    std::optional<GermSpec> germ;
    std::optional<GroupoidSpec> groupoid;
    TowerInitial initial;
    std::optional<int> budget_darboux, budget_g, budget_beta;
};

// Throws ParseError for bad expressions and DomainError for every other
// malformation, including JSON syntax errors.
ProblemFile parse_problem(const Json &doc);
ProblemFile parse_problem_text(const std::string &text);
ProblemFile load_problem(const std::string &path);

calculus::KForm parse_one_form(const Json &node, const exact::Space &space);
Json print_one_form(const calculus::KForm &form, const exact::Space &space);
exact::Scalar parse_constant(const std::string &text, const exact::Space &space);

} // namespace foliage::cli
