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

#include <ostream>
#include <string>
#include <vector>

namespace foliage::cli {

enum ExitCode : int { kSuccess = 0, kFalse = 1, kInputError = 2 };

// Runs one command (args excludes the program name) and writes its JSON
// report, then the human summary when --pretty is given, to out. Usage
// errors and help text go to err.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace foliage::cli
