//
// Copyright 2026 The LexSub Authors.
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
//


// The `lexsub` command-line front end, callable in-process.

#ifndef LEXSUB_TOOLS_COMMANDS_H_
#define LEXSUB_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace lexsub::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRunError = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Diagnostics go to `err`, reports to `out`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lexsub::cli

#endif  // LEXSUB_TOOLS_COMMANDS_H_
