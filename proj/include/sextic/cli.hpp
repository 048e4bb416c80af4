// Copyright 2026 The Sextic Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEXTIC_CLI_HPP_
#define SEXTIC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sextic::cli {

// Exit codes, also documented in the README.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;    // bad flags or payload
inline constexpr int kConstraintRejection = 2;  // out-of-family input, model forced
inline constexpr int kNoConvergence = 3;      // oracle hit max_iterations

// Runs one invocation: args excludes the program name.  Results go to out,
// diagnostics to err; subcommands that accept coefficients read a JSON
// payload from in when --coeffs is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sextic::cli

#endif  // SEXTIC_CLI_HPP_
