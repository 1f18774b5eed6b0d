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
#ifndef SOLGEN_HARNESS_EXECUTOR_H_
#define SOLGEN_HARNESS_EXECUTOR_H_

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"
#include "solgen/harness/outcome.h"

namespace solgen::harness {

// Speaks the backend protocol: a request
//   {bytecode, abi, calls: [{function, args, value}], mode}
// answered by {deploy_status, results: [{status, revert_reason?, logs}]}.
class EvmBackend {
 public:
  virtual ~EvmBackend() = default;
  // Throws EnvironmentError when the backend cannot be reached.
  virtual nlohmann::json Run(const nlohmann::json& request) = 0;
};

// An external executable that reads the request on stdin and writes the
// response on stdout.
class ProcessBackend : public EvmBackend {
 public:
  explicit ProcessBackend(std::string command,
                          std::chrono::milliseconds timeout = std::chrono::minutes(5));
  nlohmann::json Run(const nlohmann::json& request) override;

 private:
  std::vector<std::string> argv_;
  std::chrono::milliseconds timeout_;
};

enum class ExecMode { kFresh, kSequential };

// Calls to issue: every ABI function, in `order` when given (names missing
// from the ABI are skipped) and ABI order otherwise. Arguments are zero,
// value is 1 wei for payable functions and 0 otherwise.
nlohmann::json BuildCalls(const nlohmann::json& abi, const std::vector<std::string>& order);

// Deploys and calls; deploy failure yields kDeployFail.
ExecutionOutcome Execute(const std::string& bytecode, const nlohmann::json& abi,
                         EvmBackend& backend, const std::vector<std::string>& order = {},
                         ExecMode mode = ExecMode::kFresh);

}  // namespace solgen::harness

#endif  // SOLGEN_HARNESS_EXECUTOR_H_
