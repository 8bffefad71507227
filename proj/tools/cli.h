// Copyright 2026 The Authors.
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

#ifndef RAINBOW_TOOLS_CLI_H_
#define RAINBOW_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

enum ExitCode {
  kOk = 0,
  kNoWitness = 1,
  kInputError = 2,
  kCounterexample = 3,
  kCapExhausted = 4,
  kTheoremViolation = 5,
};

// Runs one invocation. args excludes the program name. Reads the instance
// from --input or from in, writes the report to out and diagnostics to err.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rainbow::cli

#endif  // RAINBOW_TOOLS_CLI_H_
