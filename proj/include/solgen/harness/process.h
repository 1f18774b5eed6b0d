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
#ifndef SOLGEN_HARNESS_PROCESS_H_
#define SOLGEN_HARNESS_PROCESS_H_

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace solgen::harness {

// Missing binary, unreachable backend or similar: not a property of the
// program under test.
class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProcessResult {
  int exit_code = -1;      // -1 when killed by a signal or timed out
  bool timed_out = false;
  std::string out;
  std::string err;
};

// Runs argv[0] (resolved through PATH when it has no slash) with `input` on
// stdin. Throws EnvironmentError when the program cannot be started.
ProcessResult RunProcess(const std::vector<std::string>& argv, const std::string& input,
                         std::chrono::milliseconds timeout);

// Splits a command line on whitespace; no quoting rules.
std::vector<std::string> SplitCommand(const std::string& command);

}  // namespace solgen::harness

#endif  // SOLGEN_HARNESS_PROCESS_H_
