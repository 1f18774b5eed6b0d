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
#include "solgen/harness/executor.h"

#include <utility>

#include "solgen/harness/process.h"

namespace solgen::harness {

using nlohmann::json;

namespace {

json ZeroArgument(const json& param) {
  std::string type = param.value("type", "");
  if (type == "bool") return false;
  if (type == "address") return "0x0000000000000000000000000000000000000000";
  if (type.rfind("bytes", 0) == 0 && type.size() > 5) {
    return "0x" + std::string(2 * std::stoul(type.substr(5)), '0');
  }
  if (type == "bytes" || type == "string") return "";
  return "0";
}

}  // namespace

ProcessBackend::ProcessBackend(std::string command, std::chrono::milliseconds timeout)
    : argv_(SplitCommand(command)), timeout_(timeout) {}

json ProcessBackend::Run(const json& request) {
  if (argv_.empty()) {
    throw EnvironmentError("no EVM backend command (set --evm-cmd or SOLGEN_EVM_CMD)");
  }
  ProcessResult run = RunProcess(argv_, request.dump(), timeout_);
  if (run.timed_out) throw EnvironmentError("EVM backend timed out");
  json response = json::parse(run.out, nullptr, false);
  if (run.exit_code != 0 || response.is_discarded() || !response.is_object()) {
    throw EnvironmentError("EVM backend failed (exit " + std::to_string(run.exit_code) +
                           "): " + run.err.substr(0, 2000));
  }
  return response;
}

json BuildCalls(const json& abi, const std::vector<std::string>& order) {
  std::vector<const json*> functions;
  for (const json& entry : abi) {
    if (entry.value("type", "") == "function") functions.push_back(&entry);
  }
  std::vector<const json*> selected;
  if (order.empty()) {
    selected = functions;
  } else {
    for (const std::string& name : order) {
      for (const json* f : functions) {
        if (f->value("name", "") == name) selected.push_back(f);
      }
    }
  }
  json calls = json::array();
  for (const json* f : selected) {
    json args = json::array();
    for (const json& p : f->value("inputs", json::array())) args.push_back(ZeroArgument(p));
    bool payable = f->value("stateMutability", "") == "payable";
    calls.push_back({{"function", f->value("name", "")}, {"args", args},
                     {"value", payable ? 1 : 0}});
  }
  return calls;
}

ExecutionOutcome Execute(const std::string& bytecode, const json& abi, EvmBackend& backend,
                         const std::vector<std::string>& order, ExecMode mode) {
  json calls = BuildCalls(abi, order);
  json request = {{"bytecode", bytecode},
                  {"abi", abi},
                  {"calls", calls},
                  {"mode", mode == ExecMode::kFresh ? "fresh" : "sequential"}};
  json response = backend.Run(request);
  ExecutionOutcome outcome;
  if (response.value("deploy_status", "") != "ok") {
    outcome.status = OutcomeStatus::kDeployFail;
    outcome.diagnostics = response.value("deploy_error", "deployment failed");
    return outcome;
  }
  const json& results = response.at("results");
  if (!results.is_array() || results.size() != calls.size()) {
    throw EnvironmentError("EVM backend returned a malformed result list");
  }
  outcome.status = OutcomeStatus::kOk;
  for (size_t i = 0; i < calls.size(); ++i) {
    const json& r = results[i];
    CallResult call;
    call.function = calls[i]["function"].get<std::string>();
    call.status = r.value("status", "") == "success" ? CallStatus::kSuccess : CallStatus::kRevert;
    if (r.contains("revert_reason")) call.revert_reason = r["revert_reason"].get<std::string>();
    for (const json& log : r.value("logs", json::array())) {
      LogEntry entry{log.value("event", ""), {}};
      for (const json& a : log.value("args", json::array())) {
        entry.args.push_back(a.is_string() ? a.get<std::string>() : a.dump());
      }
      call.logs.push_back(std::move(entry));
    }
    outcome.per_function.push_back(std::move(call));
  }
  return outcome;
}

}  // namespace solgen::harness
