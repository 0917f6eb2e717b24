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

#include "foliage/exact/poly.hpp"

#include <vector>

namespace foliage::exact {

// Distinct rational roots of a univariate polynomial (arity 1) with rational
// coefficients, ascending.
std::vector<mpq_class> rational_roots(const Poly &p);

// Distinct roots in Q(i) of a univariate polynomial (arity 1) over Q(i),
// sorted with compare().
std::vector<Scalar> gaussian_roots(const Poly &p);

} // namespace foliage::exact
