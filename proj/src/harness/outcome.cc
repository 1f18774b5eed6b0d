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
#include "solgen/harness/outcome.h"

#include <stdexcept>

namespace solgen::harness {

using nlohmann::json;

namespace {

std::string RenderLog(const LogEntry& log) {
  std::string out = log.event + "(";
  for (size_t i = 0; i < log.args.size(); ++i) {
    if (i) out += ",";
    out += log.args[i];
  }
  return out + ")";
}

// First difference between two ok outcomes, or nullopt.
std::optional<Diff> FirstDifference(const std::string& la, const ExecutionOutcome& a,
                                    const std::string& lb, const ExecutionOutcome& b) {
  auto make = [&](std::string function, int64_t position, std::string field, std::string lhs,
                  std::string rhs) {
    return Diff{la, lb, std::move(function), position, std::move(field), std::move(lhs),
                std::move(rhs)};
  };
  if (a.status != b.status) {
    return make("", -1, "status", ToString(a.status), ToString(b.status));
  }
  if (a.status != OutcomeStatus::kOk) return std::nullopt;
  size_t n = std::min(a.per_function.size(), b.per_function.size());
  for (size_t i = 0; i < n; ++i) {
    const CallResult& ca = a.per_function[i];
    const CallResult& cb = b.per_function[i];
    if (ca.function != cb.function) {
      return make(ca.function, -1, "function", ca.function, cb.function);
    }
    if (ca.status != cb.status) {
      return make(ca.function, -1, "call_status", ToString(ca.status), ToString(cb.status));
    }
    size_t m = std::min(ca.logs.size(), cb.logs.size());
    for (size_t k = 0; k < m; ++k) {
      if (ca.logs[k] != cb.logs[k]) {
        return make(ca.function, static_cast<int64_t>(k), "logs", RenderLog(ca.logs[k]),
                    RenderLog(cb.logs[k]));
      }
    }
    if (ca.logs.size() != cb.logs.size()) {
      auto k = static_cast<int64_t>(m);
      return make(ca.function, k, "logs",
                  m < ca.logs.size() ? RenderLog(ca.logs[m]) : "<none>",
                  m < cb.logs.size() ? RenderLog(cb.logs[m]) : "<none>");
    }
  }
  if (a.per_function.size() != b.per_function.size()) {
    return make("", -1, "function_count", std::to_string(a.per_function.size()),
                std::to_string(b.per_function.size()));
  }
  return std::nullopt;
}

}  // namespace

CompareResult Compare(const OutcomeMap& outcomes) {
  CompareResult result;
  for (const auto& [label, outcome] : outcomes) {
    if (outcome.status == OutcomeStatus::kCompilerCrash) {
      result.verdict = Verdict::kCrash;
      return result;
    }
  }
  const std::string* ref_label = nullptr;
  const ExecutionOutcome* ref = nullptr;
  for (const auto& [label, outcome] : outcomes) {
    if (outcome.status == OutcomeStatus::kCompileError) continue;
    if (ref == nullptr) {
      ref_label = &label;
      ref = &outcome;
      continue;
    }
    if (auto diff = FirstDifference(*ref_label, *ref, label, outcome)) {
      result.verdict = Verdict::kDivergent;
      result.diff = std::move(diff);
      return result;
    }
  }
  if (ref == nullptr && !outcomes.empty()) result.verdict = Verdict::kAllInvalid;
  return result;
}

const char* ToString(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kCompileError: return "compile_error";
    case OutcomeStatus::kCompilerCrash: return "compiler_crash";
    case OutcomeStatus::kDeployFail: return "deploy_fail";
    case OutcomeStatus::kOk: return "ok";
  }
  return "?";
}

const char* ToString(CallStatus status) {
  return status == CallStatus::kSuccess ? "success" : "revert";
}

const char* ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kEquivalent: return "equivalent";
    case Verdict::kDivergent: return "divergent";
    case Verdict::kCrash: return "crash";
    case Verdict::kAllInvalid: return "all_invalid";
  }
  return "?";
}

Verdict VerdictFromString(const std::string& text) {
  for (Verdict v : {Verdict::kEquivalent, Verdict::kDivergent, Verdict::kCrash,
                    Verdict::kAllInvalid}) {
    if (text == ToString(v)) return v;
  }
  throw std::invalid_argument("unknown verdict: " + text);
}

json ToJson(const ExecutionOutcome& outcome) {
  json j = {{"status", ToString(outcome.status)}, {"diagnostics", outcome.diagnostics}};
  json calls = json::array();
  for (const CallResult& call : outcome.per_function) {
    json c = {{"function", call.function}, {"call_status", ToString(call.status)}};
    if (call.revert_reason) c["revert_reason"] = *call.revert_reason;
    json logs = json::array();
    for (const LogEntry& log : call.logs) logs.push_back({{"event", log.event}, {"args", log.args}});
    c["logs"] = logs;
    calls.push_back(c);
  }
  if (outcome.status == OutcomeStatus::kOk) j["per_function"] = calls;
  return j;
}

json ToJson(const Diff& diff) {
  return json{{"config_a", diff.config_a}, {"config_b", diff.config_b},
              {"function", diff.function}, {"position", diff.position},
              {"field", diff.field},       {"lhs", diff.lhs},
              {"rhs", diff.rhs}};
}

json ToJson(const DivergenceReport& report) {
  json outcomes = json::object();
  for (const auto& [label, outcome] : report.outcomes) outcomes[label] = ToJson(outcome);
  json j = {{"program_path", report.program_path},
            {"seed", report.seed},
            {"matrix", report.matrix},
            {"outcomes", outcomes},
            {"verdict", ToString(report.verdict)},
            {"diff", report.diff ? ToJson(*report.diff) : json(nullptr)}};
  if (report.environment_error) j["environment_error"] = *report.environment_error;
  return j;
}

ExecutionOutcome OutcomeFromJson(const json& j) {
  ExecutionOutcome outcome;
  std::string status = j.at("status").get<std::string>();
  bool known = false;
  for (OutcomeStatus s : {OutcomeStatus::kCompileError, OutcomeStatus::kCompilerCrash,
                          OutcomeStatus::kDeployFail, OutcomeStatus::kOk}) {
    if (status == ToString(s)) {
      outcome.status = s;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown outcome status: " + status);
  outcome.diagnostics = j.value("diagnostics", "");
  for (const json& c : j.value("per_function", json::array())) {
    CallResult call;
    call.function = c.at("function").get<std::string>();
    call.status = c.at("call_status").get<std::string>() == "success" ? CallStatus::kSuccess
                                                                       : CallStatus::kRevert;
    if (c.contains("revert_reason")) call.revert_reason = c["revert_reason"].get<std::string>();
    for (const json& l : c.value("logs", json::array())) {
      call.logs.push_back({l.at("event").get<std::string>(),
                           l.at("args").get<std::vector<std::string>>()});
    }
    outcome.per_function.push_back(std::move(call));
  }
  return outcome;
}

DivergenceReport ReportFromJson(const json& j) {
  DivergenceReport report;
  report.program_path = j.at("program_path").get<std::string>();
  report.seed = j.at("seed").get<uint64_t>();
  report.matrix = j.at("matrix").get<std::vector<std::string>>();
  for (auto& [label, outcome] : j.at("outcomes").items()) {
    report.outcomes[label] = OutcomeFromJson(outcome);
  }
  report.verdict = VerdictFromString(j.at("verdict").get<std::string>());
  if (!j.at("diff").is_null()) {
    const json& d = j["diff"];
    report.diff = Diff{d.at("config_a"), d.at("config_b"), d.at("function"),
                       d.at("position"), d.at("field"),    d.at("lhs"),
                       d.at("rhs")};
  }
  if (j.contains("environment_error")) {
    report.environment_error = j["environment_error"].get<std::string>();
  }
  return report;
}

}  // namespace solgen::harness
