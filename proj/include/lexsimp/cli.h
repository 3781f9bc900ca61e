//
// Copyright 2026 The lexsimp Authors
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

// Command-line front end: simplify, paraphrase, emit, sweep and bench.

#ifndef LEXSIMP_CLI_H_
#define LEXSIMP_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace lexsimp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitProcessing = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Standard input is read from `in` unless
// --input is given; results go to `out` unless --out is given; diagnostics
// and the run summary go to `err`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace lexsimp

#endif  // LEXSIMP_CLI_H_
