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
#include "foliage/exact/space.hpp"

#include <optional>
#include <string>
#include <variant>

namespace foliage::planar {

using exact::Poly;
using exact::RatFunc;
using exact::Scalar;
using exact::Space;

/// omega = A dx + B dy on a space whose first two names are the plane
/// coordinates; any further names are parameters. A and B are coprime.
class PlanarFoliation {
public:
    PlanarFoliation(Space space, Poly a, Poly b);
    // Clears denominators of rational coefficients first.
    static PlanarFoliation from_ratfuncs(Space space, const RatFunc &a, const RatFunc &b);

    const Space &space() const { return space_; }
    const Poly &A() const { return a_; }
    const Poly &B() const { return b_; }
    calculus::KForm omega() const;
    // X = B d/dx - A d/dy
    calculus::VectorField dual_field() const;

private:
    Space space_;
    Poly a_, b_;
};

struct Regular {};
struct Saddle {
    std::optional<RatFunc> ratio; // lambda1/lambda2 when it is expressible
    std::string note;
};
struct ResonantSaddle {
    int p = 1, q = 1; // p <= q
};
struct SaddleNode {};
struct NotReduced {
    std::string reason;
};
using SingularityClass = std::variant<Regular, Saddle, ResonantSaddle, SaddleNode, NotReduced>;

std::string class_name(const SingularityClass &c);
SingularityClass classify_origin(const PlanarFoliation &f);

bool is_first_integral(const RatFunc &h, const PlanarFoliation &f);

struct SaddleNodeParams {
    int k = 1;
    RatFunc lambda;
};
struct ResonantSaddleParams {
    int p = 1, q = 1, k = 1;
    RatFunc lambda;
};
using NormalFormParams = std::variant<SaddleNodeParams, ResonantSaddleParams>;

// lambda lives in space; space must have x, y as its first two names.
PlanarFoliation normal_form(const Space &space, const NormalFormParams &params);

// tau x^(k+1) / (1 + lambda x^k), tau standing for 2 i pi.
RatFunc holonomy_field(int k, const RatFunc &lambda, const RatFunc &tau, std::size_t var);
// a_{k,lambda} * d/dx log H_{k,lambda} = -tau with H = x^-lambda e^(1/(k x^k)).
bool holonomy_integral_identity(int k, const RatFunc &lambda, const RatFunc &tau, std::size_t var);

enum class HolonomyClass { Normalizable, Linearizable, Unitary, Binary, Unknown };
// 1, 2 or 3; -1 stands for no bound (rank infinity).
int rank_upper_from_holonomy(HolonomyClass c);
std::optional<HolonomyClass> parse_holonomy_class(const std::string &name);

} // namespace foliage::planar
