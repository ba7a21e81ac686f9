// Copyright 2026 The verdict-bn Authors
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

namespace verdict::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming a default --model path.
inline constexpr const char* kModelEnvVar = "VERDICT_BN_MODEL";

// Runs one invocation. `args` excludes the program name. Data goes to `out`,
// diagnostics and usage text to `err`. Returns 0 on success, 1 for domain
// errors (unreadable files, bad models, unknown variables or states) and 2
// for usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verdict::cli
