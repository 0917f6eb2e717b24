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

#include <optional>
#include <variant>
#include <vector>

namespace foliage::godbillon {

using calculus::KForm;
using calculus::VectorField;
using exact::RatFunc;

struct GVSequence {
    KForm omega;
    std::vector<KForm> tail; // omega_1, omega_2, ...
    int verified_to = -1;

    // omega_0 = omega, missing trailing terms are zero
    KForm term(std::size_t j) const;
};

struct LengthOne {
    RatFunc F;
    int k = 1;
};
struct LengthTwo {
    KForm alpha;
};
struct LengthThree {
    KForm alpha;
    KForm beta;
};
using Certificate = std::variant<LengthOne, LengthTwo, LengthThree>;

int certificate_length(const Certificate &c);

/// Data of a chart where omega = w dt. Indices refer to geometric variables.
struct StraightChart {
    std::size_t t = 0;
    std::vector<std::size_t> z;
    RatFunc w;
    std::optional<KForm> alpha;
    std::optional<KForm> beta;
    std::optional<RatFunc> F;
    int k = 1;
};

bool frobenius_check(const KForm &omega);

// Right-hand side of the recurrence at index j.
KForm gv_rhs(const GVSequence &seq, std::size_t j);
bool gv_verify(GVSequence &seq, int n);
KForm gv_extend(const GVSequence &seq, const VectorField &x);
bool length_certificate_check(const KForm &omega, const Certificate &cert);
GVSequence gv_gauge(const GVSequence &seq, const RatFunc &f, const RatFunc &g);
RatFunc transverse_coeff(const StraightChart &chart, int rank);

long binomial(long n, long k);

} // namespace foliage::godbillon
