// Copyright 2026 The dagcount Authors
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

#ifndef DAGCOUNT_CLI_HPP_
#define DAGCOUNT_CLI_HPP_

#include <iosfwd>
#include "dagcount/exactalg.hpp"
#include <string>
#include <vector>

namespace dagcount {

// Exit codes: 0 success or verified, 1 verification failed, 2 usage or
// parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (without the program name). Vertex numbers
// in user-facing output are 1-based.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Renders a monic characteristic polynomial from its squarefree
// decomposition, e.g. "(x-1)^3", "x^2-1", "(x-3)*x^2".
std::string factored_char_poly(const IntPolynomial& p);

}  // namespace dagcount

#endif  // DAGCOUNT_CLI_HPP_
