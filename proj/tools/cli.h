// Copyright 2026 The Biblock Authors
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


#ifndef BIBLOCK_TOOLS_CLI_H_
#define BIBLOCK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace biblock {

enum ExitCode {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitDomainError = 3,
};

// Runs the command line `args` (without the program name). A graph path of
// "-" or no path reads the graph from `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace biblock

#endif  // BIBLOCK_TOOLS_CLI_H_
