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
#include "foliage/exact/space.hpp"

#include <string>
#include <string_view>

namespace foliage::cli {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' ['-'] integer)?
//   base   := integer | 'i' | name | '(' expr ')'
// Throws ParseError with the byte offset of the offending token.
exact::RatFunc parse_expression(std::string_view text, const exact::Space &space);

std::string print_scalar(const exact::Scalar &c);
std::string print_poly(const exact::Poly &p, const std::vector<std::string> &names);
std::string print_ratfunc(const exact::RatFunc &r, const std::vector<std::string> &names);
inline std::string print(const exact::RatFunc &r, const exact::Space &space) { return print_ratfunc(r, space.names()); }

} // namespace foliage::cli
