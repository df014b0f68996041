// Copyright 2026 The skirt Authors
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

namespace skirt::cli {

enum ExitCode : int {
  kOk = 0,
  kNotVerified = 1,
  kUsage = 2,
  kBudget = 3,
  kResource = 4,
  kIo = 5,
};

// Runs one command line (args[0] is the program name). The first line
// written to `out` is always a key=value result line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skirt::cli
