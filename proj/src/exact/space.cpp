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

#include "foliage/exact/space.hpp"

#include "foliage/error.hpp"

#include <cctype>
#include <set>

namespace foliage::exact {

std::vector<std::string> Space::names() const
{
    std::vector<std::string> all = variables;
    all.insert(all.end(), parameters.begin(), parameters.end());
    return all;
}

std::optional<std::size_t> Space::index_of(const std::string &name) const
{
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name) return i;
    for (std::size_t i = 0; i < parameters.size(); ++i)
        if (parameters[i] == name) return variables.size() + i;
    return std::nullopt;
}

void Space::validate() const
{
    std::set<std::string> seen;
    for (const auto &n : names()) {
        if (n.empty()) throw DomainError("empty variable name");
        if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
            throw DomainError("invalid variable name '" + n + "'");
        for (char c : n)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw DomainError("invalid variable name '" + n + "'");
        if (n == "i") throw DomainError("'i' is reserved for the imaginary unit");
        if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
    }
}

bool is_parameter_only(const Poly &f, std::size_t dim)
{
    for (std::size_t v = 0; v < dim && v < f.arity(); ++v)
        if (f.depends_on(v)) return false;
    return true;
}

bool is_parameter_only(const RatFunc &f, std::size_t dim)
{
    return is_parameter_only(f.num(), dim) && is_parameter_only(f.den(), dim);
}

} // namespace foliage::exact
