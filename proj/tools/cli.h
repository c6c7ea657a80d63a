// Copyright 2026 The semrw Authors.
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

// Command-line front end. RunCli is the whole program minus process setup,
// so it can be driven from tests with captured streams.

#ifndef SEMRW_TOOLS_CLI_H_
#define SEMRW_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace semrw {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNoAnswer = 2,
};

// args[0] is the program name.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace semrw

#endif  // SEMRW_TOOLS_CLI_H_
