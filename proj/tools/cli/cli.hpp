// Copyright 2026 The ergogap Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace ergogap::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitCap = 3,
  kExitNoContraction = 4,
  kExitVerification = 5,
  kExitMaxIters = 6,
};

/// Runs one invocation. args excludes the program name. The JSON report goes
/// to out; errors and --verbose summaries go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ergogap::cli
