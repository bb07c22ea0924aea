// Copyright 2026 The qrecon Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrecon {

inline constexpr const char *kVersion = "0.1.0";

/// Exit codes of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitInvalid = 3 };

/// Runs one subcommand. `args` excludes the program name. The report goes
/// to `out` (or the --out file), diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace qrecon
