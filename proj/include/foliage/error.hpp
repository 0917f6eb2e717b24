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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foliage {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition on the input violated (zero denominator, bad arity, g(0) != 0 ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Internal consistency check failed on data that was accepted as input,
// e.g. non-integrable forms handed to an extension step.
class InconsistentData : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace foliage
