// Copyright 2026 The Solgen Authors
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
#ifndef SOLGEN_CLI_H_
#define SOLGEN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace solgen {

inline constexpr int kExitClean = 0;
inline constexpr int kExitEnvironment = 1;
inline constexpr int kExitFindings = 2;

// Entry point of the solgen tool; args excludes the program name.
// Returns 0 when clean, 2 when findings were reported and 1 on environment,
// usage or configuration failure.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solgen

#endif  // SOLGEN_CLI_H_
