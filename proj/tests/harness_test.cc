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
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "solgen/harness/campaign.h"
#include "solgen/harness/compiler.h"
#include "solgen/harness/executor.h"
#include "solgen/harness/fixtures.h"
#include "solgen/harness/outcome.h"
#include "solgen/harness/process.h"

namespace solgen::harness {
namespace {

using nlohmann::json;

ExecutionOutcome Ok(std::vector<CallResult> calls) {
  return ExecutionOutcome{OutcomeStatus::kOk, "", std::move(calls)};
}

CallResult Success(const std::string& fn, std::vector<LogEntry> logs = {}) {
  return CallResult{fn, CallStatus::kSuccess, std::nullopt, std::move(logs)};
}

CallResult Revert(const std::string& fn) {
  return CallResult{fn, CallStatus::kRevert, "Panic(0x11)", {}};
}

ExecutionOutcome WithStatus(OutcomeStatus status) {
  return ExecutionOutcome{status, "diag", {}};
}

TEST(CompareTest, IdenticalOutcomesAreEquivalent) {
  ExecutionOutcome o = Ok({Success("f0", {{"LogU", {"0", "7"}}})});
  CompareResult r = Compare({{"a", o}, {"b", o}, {"c", o}});
  EXPECT_EQ(r.verdict, Verdict::kEquivalent);
  EXPECT_FALSE(r.diff.has_value());
}

TEST(CompareTest, RevertAgainstSuccess) {
  CompareResult r = Compare({{"a", Ok({Success("f0")})}, {"b", Ok({Revert("f0")})}});
  ASSERT_EQ(r.verdict, Verdict::kDivergent);
  EXPECT_EQ(r.diff->config_a, "a");
  EXPECT_EQ(r.diff->config_b, "b");
  EXPECT_EQ(r.diff->function, "f0");
  EXPECT_EQ(r.diff->field, "call_status");
  EXPECT_EQ(r.diff->lhs, "success");
  EXPECT_EQ(r.diff->rhs, "revert");
}

TEST(CompareTest, RevertReasonAloneIsNotADifference) {
  CallResult a = Revert("f0");
  CallResult b = Revert("f0");
  b.revert_reason = "other";
  EXPECT_EQ(Compare({{"a", Ok({a})}, {"b", Ok({b})}}).verdict, Verdict::kEquivalent);
}

TEST(CompareTest, LogDifferenceReportsPosition) {
  std::vector<LogEntry> logs = {{"LogU", {"0", "1"}}, {"LogU", {"1", "2"}}, {"LogU", {"2", "3"}}};
  std::vector<LogEntry> other = logs;
  other[2].args[1] = "4";
  CompareResult r = Compare({{"a", Ok({Success("f0"), Success("f1", logs)})},
                             {"b", Ok({Success("f0"), Success("f1", other)})}});
  ASSERT_EQ(r.verdict, Verdict::kDivergent);
  EXPECT_EQ(r.diff->function, "f1");
  EXPECT_EQ(r.diff->field, "logs");
  EXPECT_EQ(r.diff->position, 2);
}

TEST(CompareTest, MissingLogIsADifference) {
  std::vector<LogEntry> logs = {{"LogU", {"0", "1"}}};
  CompareResult r = Compare({{"a", Ok({Success("f0", logs)})}, {"b", Ok({Success("f0")})}});
  ASSERT_EQ(r.verdict, Verdict::kDivergent);
  EXPECT_EQ(r.diff->position, 0);
  EXPECT_EQ(r.diff->rhs, "<none>");
}

TEST(CompareTest, CrashDominates) {
  CompareResult r = Compare({{"a", Ok({Success("f0")})},
                             {"b", Ok({Revert("f0")})},
                             {"c", WithStatus(OutcomeStatus::kCompilerCrash)}});
  EXPECT_EQ(r.verdict, Verdict::kCrash);
}

TEST(CompareTest, CompileErrorsExcluded) {
  EXPECT_EQ(Compare({{"a", WithStatus(OutcomeStatus::kCompileError)},
                     {"b", WithStatus(OutcomeStatus::kCompileError)}})
                .verdict,
            Verdict::kAllInvalid);
  EXPECT_EQ(Compare({{"a", WithStatus(OutcomeStatus::kCompileError)},
                     {"b", Ok({Success("f0")})}})
                .verdict,
            Verdict::kEquivalent);
}

TEST(CompareTest, DeployFailureAgainstSuccess) {
  CompareResult r = Compare({{"a", WithStatus(OutcomeStatus::kDeployFail)},
                             {"b", Ok({Success("f0")})}});
  ASSERT_EQ(r.verdict, Verdict::kDivergent);
  EXPECT_EQ(r.diff->field, "status");
  EXPECT_EQ(r.diff->lhs, "deploy_fail");
  EXPECT_EQ(r.diff->rhs, "ok");
}

TEST(CompareTest, FunctionCountDifference) {
  CompareResult r =
      Compare({{"a", Ok({Success("f0")})}, {"b", Ok({Success("f0"), Success("f1")})}});
  ASSERT_EQ(r.verdict, Verdict::kDivergent);
  EXPECT_EQ(r.diff->field, "function_count");
}

TEST(CompareTest, VerdictIgnoresLabelOrder) {
  ExecutionOutcome x = Ok({Success("f0")});
  ExecutionOutcome y = Ok({Revert("f0")});
  EXPECT_EQ(Compare({{"a", x}, {"b", y}}).verdict, Compare({{"a", y}, {"b", x}}).verdict);
}

TEST(ReportJsonTest, RoundTrip) {
  DivergenceReport report;
  report.program_path = "out/3.sol";
  report.seed = 3;
  report.matrix = {"a", "b"};
  report.outcomes = {{"a", Ok({Success("f0", {{"LogI", {"1", "-5"}}})})},
                     {"b", Ok({Revert("f0")})}};
  CompareResult c = Compare(report.outcomes);
  report.verdict = c.verdict;
  report.diff = c.diff;
  json j = ToJson(report);
  EXPECT_EQ(j["verdict"], "divergent");
  EXPECT_FALSE(j.contains("timestamp"));
  DivergenceReport back = ReportFromJson(j);
  EXPECT_EQ(ToJson(back), j);
  EXPECT_EQ(back.outcomes["b"].per_function[0].revert_reason, "Panic(0x11)");
}

TEST(ReportJsonTest, NonOkOutcomeOmitsCalls) {
  json j = ToJson(WithStatus(OutcomeStatus::kCompileError));
  EXPECT_EQ(j["status"], "compile_error");
  EXPECT_FALSE(j.contains("per_function"));
  EXPECT_EQ(OutcomeFromJson(j).status, OutcomeStatus::kCompileError);
}

TEST(VerdictTest, StringRoundTrip) {
  for (Verdict v : {Verdict::kEquivalent, Verdict::kDivergent, Verdict::kCrash,
                    Verdict::kAllInvalid}) {
    EXPECT_EQ(VerdictFromString(ToString(v)), v);
  }
}

TEST(MatrixTest, DefaultSixCells) {
  std::vector<CompilerConfig> m = DefaultMatrix();
  ASSERT_EQ(m.size(), 6u);
  int via_ir = 0, optimized = 0;
  for (const CompilerConfig& cc : m) {
    EXPECT_NO_THROW(cc.Check());
    EXPECT_EQ(cc.compiler_version, "0.8.28");
    via_ir += cc.pipeline == Pipeline::kViaIr;
    optimized += cc.optimizer_enabled;
  }
  EXPECT_EQ(via_ir, 3);
  EXPECT_EQ(optimized, 4);
  EXPECT_EQ(m[4].runs, kMaxRuns);
}

TEST(MatrixTest, FilterByLabel) {
  std::vector<CompilerConfig> m = FilterMatrix(DefaultMatrix(), "opt1-ir,noopt-legacy");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_THROW(FilterMatrix(DefaultMatrix(), "nope"), std::invalid_argument);
}

TEST(MatrixTest, ConfigJsonStrict) {
  CompilerConfig cc = DefaultMatrix()[3];
  EXPECT_EQ(ConfigToJson(CompilerConfigFromJson(ConfigToJson(cc))), ConfigToJson(cc));
  json bad = ConfigToJson(cc);
  bad["surprise"] = 1;
  EXPECT_THROW(CompilerConfigFromJson(bad), std::exception);
}

TEST(MatrixTest, RunsOutOfRangeRejected) {
  CompilerConfig cc = DefaultMatrix()[2];
  cc.runs = 0;
  EXPECT_THROW(cc.Check(), std::exception);
  cc.runs = kMaxRuns + 1;
  EXPECT_THROW(cc.Check(), std::exception);
}

TEST(StandardJsonTest, RequestFields) {
  CompilerConfig cc = DefaultMatrix()[3];
  json r = StandardJsonRequest("contract C {}", cc);
  EXPECT_EQ(r["language"], "Solidity");
  EXPECT_EQ(r["sources"]["program.sol"]["content"], "contract C {}");
  EXPECT_EQ(r["settings"]["viaIR"], true);
  EXPECT_EQ(r["settings"]["optimizer"]["enabled"], true);
  EXPECT_EQ(r["settings"]["optimizer"]["runs"], 1);
  json sel = r["settings"]["outputSelection"]["*"]["*"];
  EXPECT_NE(std::find(sel.begin(), sel.end(), "abi"), sel.end());
  EXPECT_NE(std::find(sel.begin(), sel.end(), "evm.bytecode.object"), sel.end());
}

TEST(StandardJsonTest, ExtraSettingsMerged) {
  CompilerConfig cc = DefaultMatrix()[0];
  cc.extra_settings = {{"optimizer", {{"details", {{"cse", true}}}}}};
  json r = StandardJsonRequest("", cc);
  EXPECT_EQ(r["settings"]["optimizer"]["details"]["cse"], true);
  EXPECT_EQ(r["settings"]["optimizer"]["enabled"], false);
  EXPECT_FALSE(r["settings"]["optimizer"].contains("runs"));
}

TEST(ClassifyTest, Outcomes) {
  json ok = {{"contracts",
              {{"program.sol",
                {{"C", {{"abi", json::array()}, {"evm", {{"bytecode", {{"object", "6080"}}}}}}}}}}}};
  CompileResult r = ClassifyResponse(0, ok.dump(), "", "C");
  EXPECT_EQ(r.status, CompileStatus::kOk);
  EXPECT_EQ(r.bytecode, "6080");

  json warn = ok;
  warn["errors"] = {{{"severity", "warning"}, {"type", "Warning"}, {"message", "w"}}};
  EXPECT_EQ(ClassifyResponse(0, warn.dump(), "", "C").status, CompileStatus::kOk);

  json err = {{"errors",
               {{{"severity", "error"}, {"type", "TypeError"}, {"formattedMessage", "bad"}}}}};
  r = ClassifyResponse(0, err.dump(), "", "C");
  EXPECT_EQ(r.status, CompileStatus::kCompileError);
  EXPECT_NE(r.diagnostics.find("bad"), std::string::npos);

  for (const char* type : {"InternalCompilerError", "Exception", "FatalError"}) {
    json ice = {{"errors", {{{"severity", "error"}, {"type", type}, {"message", "x"}}}}};
    EXPECT_EQ(ClassifyResponse(0, ice.dump(), "", "C").status, CompileStatus::kCompilerCrash);
  }
  EXPECT_EQ(ClassifyResponse(134, "", "abort", "C").status, CompileStatus::kCompilerCrash);
  EXPECT_EQ(ClassifyResponse(0, "not json", "", "C").status, CompileStatus::kCompilerCrash);
  EXPECT_EQ(ClassifyResponse(0, ok.dump(), "", "D").status, CompileStatus::kCompileError);
}

TEST(SolcCompilerTest, MissingBinaryIsEnvironmentError) {
  SolcCompiler compiler("/nonexistent/solc-dir");
  EXPECT_THROW(compiler.Compile("", DefaultMatrix()[0]), EnvironmentError);
}

const json kAbi = json::parse(R"([
  {"type": "constructor", "inputs": []},
  {"type": "function", "name": "f0", "stateMutability": "nonpayable",
   "inputs": [{"type": "uint256"}, {"type": "int256"}], "outputs": []},
  {"type": "function", "name": "f1", "stateMutability": "payable",
   "inputs": [{"type": "bool"}, {"type": "address"}], "outputs": []},
  {"type": "event", "name": "LogU", "inputs": []}
])");

TEST(BuildCallsTest, ZeroArgumentsAndValue) {
  json calls = BuildCalls(kAbi, {});
  ASSERT_EQ(calls.size(), 2u);
  EXPECT_EQ(calls[0]["function"], "f0");
  EXPECT_EQ(calls[0]["args"], json::array({"0", "0"}));
  EXPECT_EQ(calls[0]["value"], 0);
  EXPECT_EQ(calls[1]["args"][0], false);
  EXPECT_EQ(calls[1]["args"][1], "0x0000000000000000000000000000000000000000");
  EXPECT_EQ(calls[1]["value"], 1);
}

TEST(BuildCallsTest, ExplicitOrder) {
  json calls = BuildCalls(kAbi, {"f1", "internal_fn", "f0"});
  ASSERT_EQ(calls.size(), 2u);
  EXPECT_EQ(calls[0]["function"], "f1");
  EXPECT_EQ(calls[1]["function"], "f0");
}

// Answers every call with success and one log carrying the bytecode.
class EchoBackend : public EvmBackend {
 public:
  json Run(const json& request) override {
    last_request = request;
    if (request["bytecode"] == "dead") {
      return {{"deploy_status", "fail"}, {"deploy_error", "out of gas"}};
    }
    json results = json::array();
    for (const json& call : request["calls"]) {
      std::string tag = request["bytecode"] == "faulty" ? "1" : "0";
      results.push_back({{"status", "success"},
                         {"logs", {{{"event", "LogU"}, {"args", {"0", tag}}}}}});
      (void)call;
    }
    return {{"deploy_status", "ok"}, {"results", results}};
  }
  json last_request;
};

TEST(ExecuteTest, MapsBackendResponse) {
  EchoBackend backend;
  ExecutionOutcome o = Execute("6080", kAbi, backend, {}, ExecMode::kSequential);
  EXPECT_EQ(backend.last_request["mode"], "sequential");
  ASSERT_EQ(o.status, OutcomeStatus::kOk);
  ASSERT_EQ(o.per_function.size(), 2u);
  EXPECT_EQ(o.per_function[1].function, "f1");
  EXPECT_EQ(o.per_function[1].logs, (std::vector<LogEntry>{{"LogU", {"0", "0"}}}));
}

TEST(ExecuteTest, DeployFailure) {
  EchoBackend backend;
  ExecutionOutcome o = Execute("dead", kAbi, backend);
  EXPECT_EQ(o.status, OutcomeStatus::kDeployFail);
  EXPECT_EQ(o.diagnostics, "out of gas");
}

TEST(ExecuteTest, ProcessBackendWithoutCommand) {
  ProcessBackend backend("");
  EXPECT_THROW(backend.Run(json::object()), EnvironmentError);
}

// Compiles everything; the cell labelled faulty_label yields bytecode the
// backend answers differently.
class FakeCompiler : public Compiler {
 public:
  explicit FakeCompiler(std::string faulty_label = "") : faulty_(std::move(faulty_label)) {}
  CompileResult Compile(const std::string& source, const CompilerConfig& cc) override {
    if (source.find("contract C") == std::string::npos) {
      return CompileResult{CompileStatus::kCompileError, "no contract", "", json::array()};
    }
    return CompileResult{CompileStatus::kOk, "", cc.label == faulty_ ? "faulty" : "6080", kAbi};
  }

 private:
  std::string faulty_;
};

class MissingCompiler : public Compiler {
 public:
  CompileResult Compile(const std::string&, const CompilerConfig&) override {
    throw EnvironmentError("solc absent");
  }
};

TEST(TestSourceTest, EquivalentAndDivergent) {
  EchoBackend backend;
  std::vector<CompilerConfig> matrix = DefaultMatrix();
  FakeCompiler clean;
  DivergenceReport r = TestSource("contract C {}", "p.sol", 0, matrix, clean, backend);
  EXPECT_EQ(r.verdict, Verdict::kEquivalent);
  EXPECT_EQ(r.outcomes.size(), 6u);
  EXPECT_TRUE(AllCellsCompiled(r));

  FakeCompiler faulty("opt1-ir");
  r = TestSource("contract C {}", "p.sol", 0, matrix, faulty, backend);
  ASSERT_EQ(r.verdict, Verdict::kDivergent);
  EXPECT_EQ(r.diff->config_b, "opt1-ir");
  EXPECT_EQ(r.diff->field, "logs");
  EXPECT_EQ(r.diff->position, 0);
}

TEST(TestSourceTest, CompileErrorsAreAllInvalid) {
  EchoBackend backend;
  FakeCompiler compiler;
  DivergenceReport r = TestSource("garbage", "p.sol", 0, DefaultMatrix(), compiler, backend);
  EXPECT_EQ(r.verdict, Verdict::kAllInvalid);
  EXPECT_FALSE(AllCellsCompiled(r));
}

TEST(TestSourceTest, EnvironmentErrorRecorded) {
  EchoBackend backend;
  MissingCompiler compiler;
  DivergenceReport r = TestSource("contract C {}", "p.sol", 0, DefaultMatrix(), compiler, backend);
  ASSERT_TRUE(r.environment_error.has_value());
  EXPECT_NE(r.environment_error->find("solc absent"), std::string::npos);
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CampaignTest, WritesReportsAndSummary) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("solgen_campaign_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  EchoBackend backend;
  FakeCompiler compiler("noopt-ir");
  CampaignOptions options;
  options.first_seed = 4;
  options.count = 3;
  options.matrix = FilterMatrix(DefaultMatrix(), "noopt-legacy,noopt-ir");
  options.out_dir = dir.string();
  CampaignResult result = RunCampaign(options, compiler, backend);
  ASSERT_EQ(result.reports.size(), 3u);
  EXPECT_EQ(result.reports[0].seed, 4u);
  EXPECT_EQ(result.summary.programs, 3u);
  EXPECT_EQ(result.summary.verdicts.at("divergent"), 3u);
  EXPECT_EQ(result.summary.verdicts.at("equivalent"), 0u);
  EXPECT_EQ(result.summary.findings(), 3u);
  EXPECT_DOUBLE_EQ(result.summary.validity_rate, 1.0);
  EXPECT_GT(result.summary.mean_lines, 0.0);
  for (int seed : {4, 5, 6}) {
    EXPECT_TRUE(std::filesystem::exists(dir / (std::to_string(seed) + ".sol")));
    json report = json::parse(Slurp(dir / "reports" / (std::to_string(seed) + ".json")));
    EXPECT_EQ(report["verdict"], "divergent");
  }
  json summary = json::parse(Slurp(dir / "summary.json"));
  EXPECT_EQ(summary, ToJson(result.summary));
  std::filesystem::remove_all(dir);
}

TEST(CampaignTest, ParallelMatchesSerial) {
  EchoBackend serial_backend;
  FakeCompiler compiler;
  CampaignOptions options;
  options.count = 6;
  options.matrix = FilterMatrix(DefaultMatrix(), "noopt-legacy");
  CampaignResult serial = RunCampaign(options, compiler, serial_backend);
  options.jobs = 3;
  EchoBackend parallel_backend;
  CampaignResult parallel = RunCampaign(options, compiler, parallel_backend);
  ASSERT_EQ(serial.reports.size(), parallel.reports.size());
  for (size_t i = 0; i < serial.reports.size(); ++i) {
    EXPECT_EQ(ToJson(serial.reports[i]), ToJson(parallel.reports[i]));
  }
  EXPECT_EQ(ToJson(serial.summary), ToJson(parallel.summary));
}

TEST(FixturesTest, FourFixturesWithPairedCells) {
  std::vector<Fixture> fixtures = RegressionFixtures();
  ASSERT_EQ(fixtures.size(), 4u);
  for (const Fixture& f : fixtures) {
    EXPECT_EQ(f.matrix.size(), 2u) << f.name;
    for (const CompilerConfig& cc : f.matrix) EXPECT_EQ(cc.compiler_version, "0.8.0");
    EXPECT_NE(f.source.find("contract C"), std::string::npos);
  }
}

TEST(FixturesTest, SymptomMatching) {
  DivergenceReport r;
  r.outcomes = {{"a", Ok({Success("f")})}, {"b", Ok({Revert("f")})}};
  CompareResult c = Compare(r.outcomes);
  r.verdict = c.verdict;
  r.diff = c.diff;
  EXPECT_TRUE(SymptomMatches(r, Symptom::kRevertVsSuccess));
  EXPECT_FALSE(SymptomMatches(r, Symptom::kLogMismatch));

  r.outcomes = {{"a", Ok({Success("f", {{"LogU", {"0", "5"}}, {"LogU", {"1", "5"}}})})},
                {"b", Ok({Success("f", {{"LogU", {"0", "5"}}, {"LogU", {"1", "6"}}})})}};
  c = Compare(r.outcomes);
  r.verdict = c.verdict;
  r.diff = c.diff;
  EXPECT_TRUE(SymptomMatches(r, Symptom::kLogMismatch));
  EXPECT_TRUE(SymptomMatches(r, Symptom::kEqualVsUnequalPair));
}

TEST(ProcessTest, PipesInputThrough) {
  ProcessResult r = RunProcess({"cat"}, "hello", std::chrono::seconds(10));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(r.timed_out);
  EXPECT_EQ(r.out, "hello");
}

TEST(ProcessTest, ExitCodeAndStderr) {
  ProcessResult r = RunProcess({"sh", "-c", "echo oops >&2; exit 3"}, "", std::chrono::seconds(10));
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(r.err, "oops\n");
}

TEST(ProcessTest, Timeout) {
  auto start = std::chrono::steady_clock::now();
  ProcessResult r = RunProcess({"sleep", "30"}, "", std::chrono::milliseconds(200));
  EXPECT_TRUE(r.timed_out);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(ProcessTest, MissingBinary) {
  EXPECT_THROW(RunProcess({"/nonexistent/binary"}, "", std::chrono::seconds(5)), EnvironmentError);
}

TEST(ProcessTest, SplitCommand) {
  EXPECT_EQ(SplitCommand("python3  -m  evm"), (std::vector<std::string>{"python3", "-m", "evm"}));
  EXPECT_TRUE(SplitCommand("").empty());
}

}  // namespace
}  // namespace solgen::harness
