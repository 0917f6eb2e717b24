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

#include "foliage/exact/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace foliage::exact {

/// Names of the indeterminates: geometric variables first, then parameters.
struct Space {
    std::vector<std::string> variables;
    std::vector<std::string> parameters;

    std::size_t dim() const { return variables.size(); }
    std::size_t arity() const { return variables.size() + parameters.size(); }
    std::vector<std::string> names() const;
    std::optional<std::size_t> index_of(const std::string &name) const;
    bool is_parameter(std::size_t index) const { return index >= variables.size(); }

    RatFunc var(std::size_t index) const { return RatFunc::variable(arity(), index); }
    RatFunc constant(const Scalar &c) const { return RatFunc::constant(arity(), c); }
    RatFunc zero() const { return RatFunc(arity()); }

    // Throws DomainError on duplicate, empty or reserved names.
    void validate() const;

    friend bool operator==(const Space &, const Space &) = default;
};

// True when f involves none of the first dim indeterminates.
bool is_parameter_only(const RatFunc &f, std::size_t dim);
bool is_parameter_only(const Poly &f, std::size_t dim);

} // namespace foliage::exact
