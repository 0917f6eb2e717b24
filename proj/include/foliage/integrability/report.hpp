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

#include "foliage/godbillon/godbillon.hpp"
#include "foliage/integrability/darboux.hpp"

#include <string>
#include <variant>
#include <vector>

namespace foliage::integrability {

using calculus::KForm;

struct Budgets {
    int darboux = 4; // degree of Darboux polynomials
    int g = 2;       // exact part of alpha
    int beta = 4;    // denominator power of beta
};

struct FirstIntegral {
    RatFunc H;
};
using RankCertificate =
    std::variant<std::monostate, FirstIntegral, godbillon::LengthOne, godbillon::LengthTwo, godbillon::LengthThree>;

struct RankReport {
    int rank_bound = -1; // 0..3; -1 means no certificate within budget
    RankCertificate certificate;
    bool verified = false;
    Budgets budget_used;
    DarbouxData darboux;
    std::vector<std::string> notes;
};

// Tries ranks 0, 1, 2, 3 in order; the first certificate that re-verifies wins.
RankReport rank_report(const PlanarFoliation &fol, const Budgets &budgets = {});
// Ambient form: checked for integrability, then reduced to a planar
// foliation when it lives in two variables.
RankReport rank_report(const KForm &omega, const exact::Space &space, const Budgets &budgets = {});

} // namespace foliage::integrability
