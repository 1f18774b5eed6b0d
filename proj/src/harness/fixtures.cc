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
#include "solgen/harness/fixtures.h"

#include <filesystem>

namespace solgen::harness {

using nlohmann::json;

namespace {

constexpr char kFullInliner[] = R"(// SPDX-License-Identifier: GPL-3.0
pragma solidity ^0.8.0;
contract C {
    function f() public {
        assembly {
            function f(x,y)  -> r {
                let c := mul(x,4)
                r := add(c,y)
            }
            function ret() -> r { return(0,0)}
            function rev() -> r { revert(0,0)}
            let a := f(ret(),rev())
        }
    }
}
)";

constexpr char kSelector[] = R"(// SPDX-License-Identifier: GPL-3.0
pragma solidity ^0.8.0;
contract D {
    function g() external {}
}
contract C {
    event LogU(uint256 id, uint256 value);
    uint256 x;
    function f() public {h().g.selector; emit LogU(0, x);}
    function h() public returns (D) {
        x = 42;
        return new D();
    }
}
)";

constexpr char kKeccakCache[] = R"(// SPDX-License-Identifier: GPL-3.0
pragma solidity ^0.8.0;
contract C {
    event LogU(uint256 id, uint256 value);
    function f() public returns (uint a,uint b) {
        assembly {
            mstore(0,0)
            a := keccak256(0,32)
            b := keccak256(0,23)
        }
        emit LogU(0, a);
        emit LogU(1, b);
    }
}
)";

constexpr char kUnchecked[] = R"(// SPDX-License-Identifier: GPL-3.0
pragma solidity ^0.8.0;
contract C {
    event LogU(uint256 id, uint256 value);
    uint256 a = 42;
    function f() public {
        unchecked {
            a = a - 1 - a;
            a ++;
        }
        emit LogU(0, a);
    }
}
)";

CompilerConfig Cell(std::string label, const std::string& version, Pipeline pipeline,
                    bool optimize, json extra = json::object()) {
  CompilerConfig cc;
  cc.label = std::move(label);
  cc.pipeline = pipeline;
  cc.optimizer_enabled = optimize;
  cc.compiler_version = version;
  cc.extra_settings = std::move(extra);
  return cc;
}

// Values of the LogU entries with ids 0 and 1 across all calls, if both exist.
std::optional<std::pair<std::string, std::string>> LoggedPair(const ExecutionOutcome& o) {
  std::optional<std::string> first, second;
  for (const CallResult& call : o.per_function) {
    for (const LogEntry& log : call.logs) {
      if (log.event != "LogU" || log.args.size() != 2) continue;
      if (log.args[0] == "0") first = log.args[1];
      if (log.args[0] == "1") second = log.args[1];
    }
  }
  if (!first || !second) return std::nullopt;
  return std::make_pair(*first, *second);
}

}  // namespace

const char* ToString(Symptom symptom) {
  switch (symptom) {
    case Symptom::kRevertVsSuccess: return "revert-vs-success";
    case Symptom::kLogMismatch: return "log-mismatch";
    case Symptom::kEqualVsUnequalPair: return "equal-vs-unequal-pair";
  }
  return "?";
}

std::vector<Fixture> RegressionFixtures(const std::string& version) {
  json steps = {{"optimizer", {{"details", {{"yul", true},
                                            {"yulDetails", {{"optimizerSteps", "i"}}}}}}}};
  json cse = {{"optimizer", {{"details", {{"cse", true}}}}}};
  return {
      {"full_inliner", kFullInliner,
       {Cell("standard", version, Pipeline::kLegacy, false),
        Cell("yul-custom-steps", version, Pipeline::kLegacy, true, steps)},
       Symptom::kRevertVsSuccess},
      {"selector_side_effect", kSelector,
       {Cell("legacy", version, Pipeline::kLegacy, false),
        Cell("via-ir", version, Pipeline::kViaIr, false)},
       Symptom::kLogMismatch},
      {"keccak_cache", kKeccakCache,
       {Cell("standard", version, Pipeline::kLegacy, false),
        Cell("cse", version, Pipeline::kLegacy, false, cse)},
       Symptom::kEqualVsUnequalPair},
      {"unchecked_via_ir", kUnchecked,
       {Cell("legacy", version, Pipeline::kLegacy, false),
        Cell("via-ir", version, Pipeline::kViaIr, false)},
       Symptom::kRevertVsSuccess},
  };
}

bool SymptomMatches(const DivergenceReport& report, Symptom symptom) {
  if (report.verdict != Verdict::kDivergent || !report.diff) return false;
  switch (symptom) {
    case Symptom::kRevertVsSuccess:
      return report.diff->field == "call_status";
    case Symptom::kLogMismatch:
      return report.diff->field == "logs";
    case Symptom::kEqualVsUnequalPair: {
      bool equal = false, unequal = false;
      for (const auto& [label, outcome] : report.outcomes) {
        auto pair = LoggedPair(outcome);
        if (!pair) continue;
        (pair->first == pair->second ? equal : unequal) = true;
      }
      return equal && unequal;
    }
  }
  return false;
}

std::vector<FixtureResult> RunRegression(const std::vector<Fixture>& fixtures,
                                         Compiler& compiler, EvmBackend& backend,
                                         const std::string& out_dir) {
  std::vector<FixtureResult> results;
  for (const Fixture& fixture : fixtures) {
    FixtureResult r;
    r.name = fixture.name;
    r.report = TestSource(fixture.source, fixture.name + ".sol", 0, fixture.matrix, compiler,
                          backend);
    r.symptom_matched = SymptomMatches(r.report, fixture.symptom);
    if (!out_dir.empty()) {
      WriteFile((std::filesystem::path(out_dir) / (fixture.name + ".json")).string(),
                ToJson(r.report).dump(2) + "\n");
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace solgen::harness
