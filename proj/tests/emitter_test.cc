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
#include "solgen/emitter.h"

#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "solgen/config.h"
#include "solgen/generator.h"
#include "test_util.h"

namespace solgen {
namespace {

using testing::Bin;
using testing::EmptyProgram;
using testing::Fn;
using testing::U;
using testing::Var;

TEST(EmitterTest, EmptySkeleton) {
  EXPECT_EQ(EmitProgram(EmptyProgram()),
            "// SPDX-License-Identifier: GPL-3.0\n"
            "pragma solidity ^0.8.0;\n"
            "\n"
            "contract C {\n"
            "    event LogU(uint256 id, uint256 value);\n"
            "    event LogI(uint256 id, int256 value);\n"
            "}\n");
}

TEST(EmitterTest, PragmaFloorIsConfigurable) {
  Program p = EmptyProgram();
  p.pragma_floor = {0, 8, 4};
  EXPECT_NE(EmitProgram(p).find("pragma solidity ^0.8.4;\n"), std::string::npos);
}

TEST(EmitterTest, InvalidProgramIsContractViolation) {
  Program p = EmptyProgram();
  p.events.clear();
  EXPECT_THROW(EmitProgram(p), std::logic_error);
}

TEST(EmitterTest, CastInsertion) {
  Expr e = Bin(BinaryOp::kDiv, Var("b"), DivGuard{Expr{Cast{Type::kUint256, Var("a", Type::kInt256)}}});
  EXPECT_EQ(EmitExpr(Expr{Cast{Type::kUint256, Var("a", Type::kInt256)}}), "uint256(a)");
  EXPECT_EQ(EmitExpr(e), "b / (uint256(a) == 0 ? 1 : uint256(a))");
}

TEST(EmitterTest, DivGuardShape) {
  EXPECT_EQ(EmitExpr(DivGuard{Var("b")}), "(b == 0 ? 1 : b)");
  EXPECT_EQ(EmitStmt(Assign{"b", Type::kUint256, AssignOp::kAssign,
                            Bin(BinaryOp::kDiv, Var("b"), DivGuard{Var("a")})}),
            "b = b / (a == 0 ? 1 : a);\n");
}

TEST(EmitterTest, GuardedArrayOps) {
  EXPECT_EQ(EmitStmt(ArrayOp{"a", ArrayOpKind::kGuardedPop, std::nullopt}),
            "if(a.length>0)a.pop();\n");
  EXPECT_EQ(EmitStmt(ArrayOp{"a", ArrayOpKind::kGuardedIndexUpdate, std::nullopt, 5, true}),
            "if(a.length>5)a[5]++;\n");
  EXPECT_EQ(EmitStmt(ArrayOp{"a", ArrayOpKind::kPush, U(7)}), "a.push(7);\n");
}

TEST(EmitterTest, ArrayInitializerAndIndexRead) {
  Program p = EmptyProgram();
  p.arrays.push_back(DynArray{"a", {"1", "2", "3", "4", "5"}});
  EXPECT_NE(EmitProgram(p).find("    uint256[] a = [uint256(1), 2, 3, 4, 5];\n"),
            std::string::npos);
  EXPECT_EQ(EmitExpr(Index{"a", 2}), "(a.length > 2 ? a[2] : 0)");
}

FunctionDecl UncheckedFixture() {
  return Fn("f", {Unchecked{{LocalDecl{"a", Type::kUint256, U(3)},
                             LocalDecl{"b", Type::kUint256, U(5)},
                             Assign{"a", Type::kUint256, AssignOp::kSubAssign, Var("b")}}}});
}

TEST(EmitterTest, UncheckedLayout) {
  EXPECT_EQ(EmitFunction(UncheckedFixture()),
            "function f() public {\n"
            "    unchecked {\n"
            "        uint256 a = 3;\n"
            "        uint256 b = 5;\n"
            "        a -= b;\n"
            "    }\n"
            "}\n");
}

TEST(EmitterTest, LineCount) {
  EXPECT_EQ(LineCount(""), 0u);
  EXPECT_EQ(LineCount("a\nb\n"), 2u);
  EXPECT_EQ(LineCount(EmitFunction(UncheckedFixture())), 7u);
}

TEST(EmitterTest, LoopForms) {
  EXPECT_EQ(EmitStmt(ForLoop{LoopForm::kInitInHeader, "i0", 3, {}}),
            "for (uint256 i0 = 0; i0 < 3; i0++) {\n}\n");
  EXPECT_EQ(EmitStmt(ForLoop{LoopForm::kInitBeforeLoop, "i0", 3, {}}),
            "{\n    uint256 i0 = 0;\n    for (; i0 < 3; i0++) {\n    }\n}\n");
}

TEST(EmitterTest, ConditionShapes) {
  Expr rel = Bin(BinaryOp::kGt, Var("a"), Var("b"));
  Expr both = Bin(BinaryOp::kAnd, rel, Bin(BinaryOp::kGt, Var("c"), Var("d")));
  EXPECT_EQ(EmitExpr(rel), "a > b");
  EXPECT_EQ(EmitExpr(both), "(a > b) && (c > d)");
}

TEST(EmitterTest, EmptyAssemblyBlock) {
  EXPECT_EQ(EmitStmt(YulBlock{}), "assembly {}\n");
}

TEST(EmitterTest, KeccakPairYul) {
  YulBlock y{{YEffect("mstore", {YLit(0), YLit(0)}),
              YulAssign{"a", YCall("keccak256", {YLit(0), YLit(32)})},
              YulAssign{"b", YCall("keccak256", {YLit(0), YLit(23)})}}};
  EXPECT_EQ(EmitStmt(y),
            "/// @solidity memory-safe-assembly\n"
            "assembly {\n"
            "    mstore(0, 0)\n"
            "    a := keccak256(0, 32)\n"
            "    b := keccak256(0, 23)\n"
            "}\n");
}

TEST(EmitterTest, YulFunctionAndIf) {
  YulStmt def = YulFnDef{"yr0", {}, {}, {YEffect("return", {YLit(0), YLit(0)})}};
  EXPECT_EQ(EmitYulStmt(def), "function yr0() {\n    return(0, 0)\n}\n");
  YulStmt guard = YulIf{YLit(1), {YEffect("yr0")}};
  EXPECT_EQ(EmitYulStmt(guard), "if 1 {\n    yr0()\n}\n");
}

TEST(EmitterTest, ModifierWithPlaceholder) {
  EXPECT_EQ(EmitModifier(ModifierDecl{"m0", {Placeholder{}}}), "modifier m0() {\n    _;\n}\n");
}

TEST(EmitterTest, DeterministicAcrossCalls) {
  GenConfig cfg;
  Program p = GenerateProgram(5, cfg);
  EXPECT_EQ(EmitProgram(p), EmitProgram(Program(p)));
}

TEST(EmitterTest, NoBannedTokensInGeneratedAssembly) {
  GenConfig cfg;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Program p = GenerateProgram(seed, cfg);
    std::string text = EmitProgram(p);
    ASSERT_EQ(text.find("verbatim"), std::string::npos);
    std::istringstream in(text);
    bool in_assembly = false;
    int depth = 0;
    for (std::string line; std::getline(in, line);) {
      if (line.find("assembly {") != std::string::npos) {
        in_assembly = true;
        depth = 0;
      }
      if (!in_assembly) continue;
      for (char c : line) depth += c == '{' ? 1 : c == '}' ? -1 : 0;
      for (const DynArray& arr : p.arrays) {
        ASSERT_EQ(line.find(arr.name), std::string::npos) << "seed " << seed << ": " << line;
      }
      if (depth == 0) in_assembly = false;
    }
  }
}

TEST(EmitterTest, DistinctSeedsGiveDistinctText) {
  GenConfig cfg;
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 50; ++seed) seen.insert(GenerateSource(seed, cfg));
  EXPECT_EQ(seen.size(), 50u);
}

class GoldenTest : public ::testing::TestWithParam<uint64_t> {};

TEST_P(GoldenTest, MatchesCheckedInSource) {
  std::string path =
      std::string(SOLGEN_TEST_SOURCE_DIR) + "/golden/" + std::to_string(GetParam()) + ".sol";
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << path;
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(GenerateSource(GetParam(), GenConfig{}), buffer.str());
}

INSTANTIATE_TEST_SUITE_P(Seeds, GoldenTest, ::testing::Values(1, 7, 42, 1000));

}  // namespace
}  // namespace solgen
