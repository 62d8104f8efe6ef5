// Copyright 2026 The linkgen Authors.
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

// The linkgen command line: dict-info, generate and evaluate.

#ifndef LINKGEN_TOOLS_CLI_COMMANDS_H_
#define LINKGEN_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace linkgen::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kLoadError = 2,
  kNothingGenerated = 3,
};

// Runs one invocation; args excludes the program name. Reports go to `out`,
// diagnostics and progress to `err`.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace linkgen::cli

#endif  // LINKGEN_TOOLS_CLI_COMMANDS_H_
