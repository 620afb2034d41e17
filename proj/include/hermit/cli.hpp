// Copyright 2026 The Hermit Authors
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

#include <iostream>

namespace hermit {

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNotEquivalent = 1;
inline constexpr int kInputError = 2;
inline constexpr int kSynthesisFailure = 3;
}  // namespace exit_code

/// Runs the `hermit` command line. A file argument of "-" reads from `in`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

}  // namespace hermit
