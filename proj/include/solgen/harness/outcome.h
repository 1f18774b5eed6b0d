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
#ifndef SOLGEN_HARNESS_OUTCOME_H_
#define SOLGEN_HARNESS_OUTCOME_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace solgen::harness {

enum class OutcomeStatus { kCompileError, kCompilerCrash, kDeployFail, kOk };
enum class CallStatus { kSuccess, kRevert };

struct LogEntry {
  std::string event;
  std::vector<std::string> args;
  bool operator==(const LogEntry&) const = default;
};

struct CallResult {
  std::string function;
  CallStatus status = CallStatus::kSuccess;
  std::optional<std::string> revert_reason;
  std::vector<LogEntry> logs;
};

// per_function is empty unless status == kOk.
struct ExecutionOutcome {
  OutcomeStatus status = OutcomeStatus::kOk;
  std::string diagnostics;
  std::vector<CallResult> per_function;
};

enum class Verdict { kEquivalent, kDivergent, kCrash, kAllInvalid };

// First differing coordinate between two outcomes. position is the log
// index for log fields and -1 otherwise.
struct Diff {
  std::string config_a;
  std::string config_b;
  std::string function;
  int64_t position = -1;
  std::string field;
  std::string lhs;
  std::string rhs;
};

struct CompareResult {
  Verdict verdict = Verdict::kEquivalent;
  std::optional<Diff> diff;
};

// Outcomes keyed by config label; iteration order is label order, so the
// result does not depend on insertion order.
using OutcomeMap = std::map<std::string, ExecutionOutcome>;

CompareResult Compare(const OutcomeMap& outcomes);

struct DivergenceReport {
  std::string program_path;
  uint64_t seed = 0;
  std::vector<std::string> matrix;
  OutcomeMap outcomes;
  Verdict verdict = Verdict::kEquivalent;
  std::optional<Diff> diff;
  std::optional<std::string> environment_error;
};

const char* ToString(OutcomeStatus status);
const char* ToString(CallStatus status);
const char* ToString(Verdict verdict);
Verdict VerdictFromString(const std::string& text);

nlohmann::json ToJson(const ExecutionOutcome& outcome);
nlohmann::json ToJson(const Diff& diff);
nlohmann::json ToJson(const DivergenceReport& report);
ExecutionOutcome OutcomeFromJson(const nlohmann::json& j);
DivergenceReport ReportFromJson(const nlohmann::json& j);

}  // namespace solgen::harness

#endif  // SOLGEN_HARNESS_OUTCOME_H_
