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

#include "foliage/exact/series.hpp"
#include "foliage/exact/space.hpp"

#include <variant>

namespace foliage::disk {

using exact::RatFunc;
using exact::Series1;

struct Rank0 {
    RatFunc h;
};
struct Rank1 {
    RatFunc gamma;
    int k = 1;
};
struct Rank2 {
    RatFunc mu;
};
struct Rank3 {
    RatFunc nu;
};
struct RankInf {};

/// One of the five D-groupoids of Lie over a disk; coefficients are
/// functions of the disk variable var (plus parameters).
using DiskGroupoid = std::variant<Rank0, Rank1, Rank2, Rank3, RankInf>;

int groupoid_rank(const DiskGroupoid &g); // 0..3, -1 for RankInf
// mu = (1/k) gamma'/gamma for a rank-1 groupoid
RatFunc rank1_mu(const Rank1 &g, std::size_t var);

/// Germ of a diffeomorphism of (C,0): rational map or truncated series.
using Germ = std::variant<RatFunc, Series1>;

// Throws DomainError unless f(0) = 0 and f'(0) != 0.
void validate_germ(const Germ &f, std::size_t var);

Germ lie_flow(const RatFunc &a, std::size_t var, int order);

// Normalized as 2 f'''/f' - 3 (f''/f')^2, twice the classical one.
RatFunc schwarzian(const RatFunc &f, std::size_t var);
Series1 schwarzian(const Series1 &f);

struct Family {
    exact::Space space; // input space plus the fresh parameter
    DiskGroupoid groupoid;
    std::size_t parameter; // index of c in space (unused for rank 1)
};
Family family_from_field(const RatFunc &a, const exact::Space &space, std::size_t var, int rank);

struct SolutionCheck {
    bool holds = false;
    int checked_through = -1; // highest exponent compared (series germs); large for exact checks
};
SolutionCheck check_solution(const Germ &f, const DiskGroupoid &g, std::size_t var, int order);
bool is_solution(const Germ &f, const DiskGroupoid &g, std::size_t var, int order);

enum class Direction { Pullback, Pushforward };
DiskGroupoid coeff_transform(const DiskGroupoid &g, const RatFunc &phi, std::size_t var,
                             Direction direction = Direction::Pullback);
bool is_mobius(const RatFunc &phi, std::size_t var);

bool algebra_check(const RatFunc &a, const DiskGroupoid &g, std::size_t var);

} // namespace foliage::disk
