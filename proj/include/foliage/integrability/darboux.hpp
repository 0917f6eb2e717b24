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

#include "foliage/planar/planar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace foliage::integrability {

using exact::Poly;
using exact::RatFunc;
using exact::Scalar;
using planar::PlanarFoliation;

struct DarbouxPair {
    Poly f;
    Poly K; // cofactor: X(f) = K f
};

/// Invariant curves of the dual field X = B d/dx - A d/dy with their
/// cofactors. The f are monic and pairwise coprime.
struct DarbouxData {
    std::size_t arity = 0;
    std::vector<DarbouxPair> pairs;
    Poly divergence;
    bool budget_exceeded = false;
    std::vector<std::string> notes;
};

// X(f) for the dual field of f.
Poly apply_dual(const PlanarFoliation &fol, const Poly &f);
Poly dual_divergence(const PlanarFoliation &fol);

// Stage (i): the axes and the hints, verified exactly. Stage (ii): every
// Darboux polynomial of degree <= dmax whose top homogeneous part splits over
// Q(i), for parameter-free fields of degree <= 2.
DarbouxData darboux_search(const PlanarFoliation &fol, int dmax, const std::vector<Poly> &hints = {});

// Re-checks X(f) = K f and pairwise coprimality.
bool verify_darboux(const PlanarFoliation &fol, const DarbouxData &data);

struct ExponentSolution {
    std::vector<Scalar> rho; // free exponents set to -1
    std::vector<std::vector<Scalar>> kernel;
    RatFunc F; // prod f_i^(k rho_i)
    int k = 1;
};

// Solves sum rho_i K_i + div = 0 with constant rho; nothing when the system
// is inconsistent or the chosen rho is not rational.
std::optional<ExponentSolution> integrating_factor_exponents(const DarbouxData &data);

// H = prod f_i^rho_i with integer rho in the kernel of sum rho_i K_i,
// checked with planar::is_first_integral.
std::optional<RatFunc> meromorphic_integral_search(const PlanarFoliation &fol, const DarbouxData &data);

} // namespace foliage::integrability
