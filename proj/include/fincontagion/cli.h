// Copyright 2026 The fincontagion Authors
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

#ifndef FINCONTAGION_CLI_H_
#define FINCONTAGION_CLI_H_

#include <iosfwd>

namespace fincontagion {

// Process exit codes.
enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitUnknownNode = 3,
  kExitNoMethod = 4,
  kExitGenerator = 5,
};

// Runs the command line; results go to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace fincontagion

#endif  // FINCONTAGION_CLI_H_
