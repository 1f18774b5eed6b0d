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
#include "solgen/body_builder.h"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "solgen/emitter.h"
#include "solgen/env_builder.h"
#include "solgen/generator.h"
#include "solgen/validate.h"
#include "test_util.h"

namespace solgen {
namespace {

using testing::ForEachStmt;
using testing::RootExprs;

// Context positioned inside a default function body with the given locals.
GenContext BodyContext(const GenConfig& cfg, uint64_t seed,
                       const std::vector<std::pair<std::string, Type>>& locals) {
  GenContext ctx(seed, cfg);
  ctx.program.events = StandardEvents();
  ctx.frame.function_name = "f0";
  ctx.EnterScope();
  for (const auto& [name, type] : locals) ctx.DeclareLocal(name, type);
  return ctx;
}

TEST(FunctionFrameTest, VisibilityFollowsWeights) {
  GenConfig cfg;
  cfg.mutability_weights["payable"] = 0;
  GenContext ctx(1, cfg);
  BuildEnvironment(ctx);
  std::map<Visibility, int> counts;
  for (int i = 0; i < 1000; ++i) counts[GenFunctionFrame(ctx).visibility]++;
  double total = 0;
  for (const auto& [kind, w] : cfg.visibility_weights) total += w;
  auto share = [&](const char* kind) { return cfg.visibility_weights.at(kind) / total; };
  EXPECT_NEAR(counts[Visibility::kPublic] / 1000.0, share("public"), 0.1 * share("public"));
  EXPECT_NEAR(counts[Visibility::kExternal] / 1000.0, share("external"), 0.1 * share("external"));
  EXPECT_NEAR(counts[Visibility::kInternal] / 1000.0, share("internal"), 0.1 * share("internal"));
}

TEST(FunctionFrameTest, PayableIsNeverInternalAndModifiersOnlyOnWriters) {
  GenConfig cfg;
  cfg.modifier_count_range = {1, 2};
  GenContext ctx(2, cfg);
  BuildEnvironment(ctx);
  for (int i = 0; i < 500; ++i) {
    FunctionDecl f = GenFunctionFrame(ctx);
    if (f.mutability == Mutability::kPayable) EXPECT_NE(f.visibility, Visibility::kInternal);
    if (f.IsReadOnly()) EXPECT_TRUE(f.modifiers.empty());
    EXPECT_LE(f.modifiers.size(), 1u);
    EXPECT_TRUE(f.body.empty());
  }
}

TEST(FillFunctionTest, NoNodesMeansEpilogueOnly) {
  GenConfig cfg;
  cfg.max_nodes_per_block = 0;
  cfg.return_probability = 0;
  GenContext ctx(4, cfg);
  BuildEnvironment(ctx);
  FunctionDecl frame;
  frame.name = "f0";
  FunctionDecl f = FillFunction(ctx, frame);
  FunctionDecl expected = frame;
  AppendStateLog(expected, ctx.program);
  EXPECT_EQ(f.body, expected.body);
}

TEST(FillFunctionTest, GeneratedShapeInvariants) {
  GenConfig cfg;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Program p = GenerateProgram(seed, cfg);
    for (const FunctionDecl& f : p.functions) {
      // Arithmetic runs sit in top-level unchecked wrappers, then the log.
      bool in_epilogue = false;
      for (const Stmt& s : f.body) {
        if (s.Is<EmitLog>() || s.Is<ArrayDump>()) {
          in_epilogue = true;
        } else {
          ASSERT_FALSE(in_epilogue);
          ASSERT_TRUE(s.Is<Unchecked>()) << EmitStmt(s);
        }
      }
      if (f.returns) {
        // The last wrapper assigns the return value unconditionally.
        const Stmt* last = nullptr;
        for (const Stmt& s : f.body) {
          if (s.Is<Unchecked>()) last = &s;
        }
        ASSERT_NE(last, nullptr);
        const Block& b = last->As<Unchecked>().body;
        ASSERT_EQ(b.size(), 1u);
        EXPECT_EQ(b[0].As<Assign>().target, f.returns->name);
      }
      if (f.IsReadOnly()) {
        ForEachStmt(f.body, [&](const Stmt& s, int) {
          EXPECT_FALSE(s.Is<EmitLog>() || s.Is<ArrayDump>() || s.Is<ArrayOp>())
              << "seed " << seed << " " << f.name;
        });
      }
      EXPECT_LE(MaxLiveLocals(f), static_cast<int>(cfg.max_live_locals));
    }
  }
}

TEST(FillFunctionTest, LocalCapUsesBareBlocks) {
  GenConfig cfg;
  cfg.max_live_locals = 4;
  cfg.stmt_weights = {{std::string(stmt_kind::kLocalDecl), 1.0}};
  int bare = 0;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Program p = GenerateProgram(seed, cfg);
    ASSERT_TRUE(Validate(p).empty());
    for (const FunctionDecl& f : p.functions) {
      EXPECT_LE(MaxLiveLocals(f), 4);
      ForEachStmt(f.body, [&](const Stmt& s, int) { bare += s.Is<BareBlock>(); });
    }
  }
  EXPECT_GT(bare, 0);
}

TEST(AppendStateLogTest, LogsEveryStateVarThenArrays) {
  Program p = testing::EmptyProgram();
  p.state_vars = {StateVar{"a", Type::kUint256, "1", false},
                  StateVar{"b", Type::kInt256, "-1", false}};
  p.arrays = {DynArray{"arr0", {"1", "2", "3"}}};
  FunctionDecl f = testing::Fn("f0", {});
  AppendStateLog(f, p);
  std::string text;
  for (const Stmt& s : f.body) text += EmitStmt(s);
  EXPECT_EQ(text,
            "emit LogU(0, a);\n"
            "emit LogI(1, b);\n"
            "emit LogU(2, arr0.length);\n"
            "for (uint256 li = 0; li < arr0.length && li < 8; li++) {\n"
            "    emit LogU(2, arr0[li]);\n"
            "}\n");
}

TEST(AppendStateLogTest, ReadOnlyFunctionsHaveNoEpilogue) {
  Program p = testing::EmptyProgram();
  p.state_vars = {StateVar{"a", Type::kUint256, "1", false}};
  FunctionDecl pure = testing::Fn("f0", {}, Mutability::kPure);
  AppendStateLog(pure, p);
  EXPECT_TRUE(pure.body.empty());
  FunctionDecl view = testing::Fn("f1", {}, Mutability::kView);
  AppendStateLog(view, p);
  EXPECT_TRUE(view.body.empty());
}

TEST(ArithExprTest, MismatchedVariableIsCast) {
  GenConfig cfg;
  cfg.expr_weights = {{std::string(expr_kind::kVariable), 1.0}};
  GenContext ctx = BodyContext(cfg, 1, {{"a", Type::kInt256}});
  Expr e = GenArithExpr(ctx, Type::kUint256, 0, {false, ""});
  EXPECT_EQ(EmitExpr(e), "uint256(a)");
}

TEST(ArithExprTest, DepthZeroIsLeaf) {
  GenConfig cfg;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    GenContext ctx = BodyContext(cfg, seed, {{"a", Type::kUint256}, {"b", Type::kInt256}});
    Expr e = GenArithExpr(ctx, Type::kUint256, 0, {false, ""});
    const Expr* leaf = e.Is<Cast>() ? &*e.As<Cast>().operand : &e;
    EXPECT_TRUE(leaf->Is<IntLit>() || leaf->Is<VarRef>()) << EmitExpr(e);
  }
}

TEST(ArithExprTest, TypedAndDivisionsGuarded) {
  GenConfig cfg;
  cfg.expr_weights = {{std::string(expr_kind::kBinary), 4.0},
                      {std::string(expr_kind::kVariable), 1.0},
                      {std::string(expr_kind::kLiteral), 1.0}};
  int guards = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    GenContext ctx = BodyContext(cfg, seed, {{"a", Type::kUint256}, {"b", Type::kInt256}});
    for (Type t : {Type::kUint256, Type::kInt256}) {
      Expr e = GenArithExpr(ctx, t, 3, {false, ""});
      EXPECT_EQ(ExprType(e), t);
      std::string text = EmitExpr(e);
      for (size_t pos = text.find(" == 0 ? "); pos != std::string::npos;
           pos = text.find(" == 0 ? ", pos + 1)) {
        ++guards;
      }
    }
  }
  EXPECT_GT(guards, 0);
}

TEST(ConditionTest, RelationalOrLogical) {
  GenConfig cfg;
  bool logical = false;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    GenContext ctx = BodyContext(cfg, seed, {{"a", Type::kUint256}, {"b", Type::kInt256}});
    Expr c = GenCondition(ctx, 2);
    ASSERT_EQ(ExprType(c), Type::kBool);
    if (c.Is<Binary>()) {
      BinaryOp op = c.As<Binary>().op;
      EXPECT_TRUE(IsRelational(op) || IsLogical(op));
      if (IsRelational(op)) {
        EXPECT_EQ(ExprType(*c.As<Binary>().lhs), ExprType(*c.As<Binary>().rhs));
      }
      logical |= IsLogical(op);
    } else {
      ASSERT_TRUE(c.Is<Not>());
      logical = true;
    }
  }
  EXPECT_TRUE(logical);
}

TEST(DepthGateTest, LoopAndConditionalDeclineAtMaxDepth) {
  GenConfig cfg;
  GenContext ctx = BodyContext(cfg, 1, {});
  ctx.cond_loop_depth = static_cast<int>(cfg.max_cond_loop_depth);
  EXPECT_FALSE(GenLoop(ctx).has_value());
  EXPECT_FALSE(GenConditional(ctx).has_value());
  Weights w = AvailableStmtWeights(ctx);
  EXPECT_EQ(w[std::string(stmt_kind::kLoop)], 0);
  EXPECT_EQ(w[std::string(stmt_kind::kConditional)], 0);
}

TEST(LoopTest, CountersNamedByDepthAndBounded) {
  GenConfig cfg;
  std::set<std::string> functions_with_depth1;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Program p = GenerateProgram(seed, cfg);
    for (const FunctionDecl& f : p.functions) {
      ForEachStmt(f.body, [&](const Stmt& s, int depth) {
        if (!s.Is<ForLoop>()) return;
        const ForLoop& loop = s.As<ForLoop>();
        EXPECT_EQ(loop.counter, "i" + std::to_string(depth));
        EXPECT_GE(loop.bound, cfg.loop_bound_range.lo);
        EXPECT_LE(loop.bound, cfg.loop_bound_range.hi);
        if (depth == 0) functions_with_depth1.insert(std::to_string(seed) + f.name);
        ForEachStmt(loop.body, [&](const Stmt& inner, int) {
          if (inner.Is<Assign>()) EXPECT_NE(inner.As<Assign>().target, loop.counter);
        });
      });
    }
  }
  EXPECT_GT(functions_with_depth1.size(), 1u);
}

TEST(CallExprTest, DeclinesWithoutCallees) {
  GenConfig cfg;
  GenContext ctx = BodyContext(cfg, 1, {});
  EXPECT_FALSE(GenCallExpr(ctx, Type::kUint256, 3).has_value());
}

int DeepestCallChain(const Program& p) {
  int deepest = 0;
  for (const FunctionDecl& f : p.functions) {
    ForEachStmt(f.body, [&](const Stmt& s, int) {
      for (const Expr* e : RootExprs(s)) deepest = std::max(deepest, CallChainLength(*e));
    });
  }
  return deepest;
}

TEST(CallExprTest, NestingBoundedByConfig) {
  for (uint64_t nesting : {0u, 1u, 2u}) {
    GenConfig cfg;
    cfg.max_call_nesting = nesting;
    cfg.expr_weights[std::string(expr_kind::kCall)] = 4;
    cfg.mutability_weights = {{"pure", 1.0}, {"default", 1.0}};
    int deepest = 0;
    for (uint64_t seed = 0; seed < 60; ++seed) {
      Program p = GenerateProgram(seed, cfg);
      ASSERT_TRUE(Validate(p).empty());
      deepest = std::max(deepest, DeepestCallChain(p));
    }
    EXPECT_LE(deepest, static_cast<int>(nesting) + 1);
    if (nesting > 0) {
      EXPECT_EQ(deepest, static_cast<int>(nesting) + 1);
    }
  }
}

TEST(YulBlockTest, AssemblyBlocksStayInSubset) {
  GenConfig cfg;
  cfg.stmt_weights = {{std::string(stmt_kind::kYulBlock), 1.0},
                      {std::string(stmt_kind::kLocalDecl), 1.0}};
  int keccak = 0, solidity_refs = 0;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Program p = GenerateProgram(seed, cfg);
    ASSERT_TRUE(Validate(p).empty()) << Validate(p).front().ToString();
    ASSERT_TRUE(UbScreen(p).empty());
    std::string text = EmitProgram(p);
    for (size_t pos = text.find("keccak256("); pos != std::string::npos;
         pos = text.find("keccak256(", pos + 1)) {
      ++keccak;
    }
    for (const FunctionDecl& f : p.functions) {
      ForEachStmt(f.body, [&](const Stmt& s, int) {
        if (!s.Is<YulBlock>()) return;
        std::string y = EmitStmt(s);
        for (const Param& param : f.params) {
          if (y.find(" " + param.name + " :=") != std::string::npos) ++solidity_refs;
        }
        if (y.find(" v") != std::string::npos) ++solidity_refs;
      });
    }
  }
  EXPECT_GT(keccak, 0);
  EXPECT_GT(solidity_refs, 0);
}

}  // namespace
}  // namespace solgen
