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
#include "foliage/integrability/darboux.hpp"

#include <optional>
#include <vector>

namespace foliage::integrability {

using calculus::KForm;

struct LiouvillianAlpha {
    KForm alpha; // sum rho_i df_i/f_i + dg
    std::vector<Scalar> rho;
    RatFunc g;
};

// Closed alpha with d omega = omega ^ alpha. The exact part g = N / prod f_i^e_i
// has deg N <= dmax and a denominator of degree <= dmax; g = 0 is tried first.
std::optional<LiouvillianAlpha> liouvillian_alpha_search(const PlanarFoliation &fol, const DarbouxData &data,
                                                         int dmax);

struct RiccatiBeta {
    KForm beta;
    std::vector<KForm> homogeneous; // h omega with X(h) + 2 h c = 0, found at the largest power
    int denominator_power = 0;
};

// beta with d alpha = omega ^ beta and d beta = alpha ^ beta, written as
// beta_0 + h omega with h = N / S^e, S the squarefree part of the denominators,
// e <= dmax and deg N <= dmax + e deg S. Two variables only.
std::optional<RiccatiBeta> riccati_beta_complete(const KForm &omega, const KForm &alpha, int dmax);

} // namespace foliage::integrability
