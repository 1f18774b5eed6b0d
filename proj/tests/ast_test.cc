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
#include "solgen/ast.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace solgen {
namespace {

using testing::Bin;
using testing::U;
using testing::Var;

TEST(VersionTest, ParseAndOrder) {
  auto v = Version::Parse("0.8.28");
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->ToString(), "0.8.28");
  EXPECT_LT((Version{0, 8, 0}), *v);
  EXPECT_FALSE(Version::Parse("0.8").has_value());
  EXPECT_FALSE(Version::Parse("a.b.c").has_value());
}

TEST(LiteralTest, RangeLimits) {
  EXPECT_TRUE(LiteralFits(Type::kUint256, kUint256Max));
  EXPECT_FALSE(LiteralFits(Type::kUint256,
      "115792089237316195423570985008687907853269984665640564039457584007913129639936"));
  EXPECT_FALSE(LiteralFits(Type::kUint256, "-1"));
  EXPECT_TRUE(LiteralFits(Type::kInt256, kInt256Min));
  EXPECT_TRUE(LiteralFits(Type::kInt256, kInt256Max));
  EXPECT_FALSE(LiteralFits(Type::kInt256,
      "57896044618658097711785492504343953926634992332820282019728792003956564819968"));
  EXPECT_FALSE(LiteralFits(Type::kUint256, "012"));
  EXPECT_TRUE(IsZeroLiteral("0"));
  EXPECT_FALSE(IsZeroLiteral("10"));
}

TEST(ExprTypeTest, RelationalIsBool) {
  EXPECT_EQ(ExprType(Bin(BinaryOp::kGt, Var("a"), Var("b"))), Type::kBool);
  EXPECT_EQ(ExprType(Bin(BinaryOp::kAdd, Var("a"), U(1))), Type::kUint256);
  EXPECT_EQ(ExprType(Cast{Type::kInt256, Var("a")}), Type::kInt256);
}

TEST(ExprTest, LiteralOnlyThroughCasts) {
  EXPECT_TRUE(IsLiteralOnly(Cast{Type::kInt256, U(3)}));
  EXPECT_FALSE(IsLiteralOnly(Var("a")));
}

TEST(BoxTest, DeepCopyAndEquality) {
  Expr a = Bin(BinaryOp::kAdd, Var("x"), U(1));
  Expr b = a;
  EXPECT_EQ(a, b);
  b.As<Binary>().rhs = U(2);
  EXPECT_NE(a, b);
  EXPECT_EQ(a.As<Binary>().rhs->As<IntLit>().value, "1");
}

TEST(ProgramTest, StorageSlotsFollowDeclarationOrder) {
  Program p = testing::EmptyProgram();
  p.state_vars = {testing::Uint("sv0"), StateVar{"sv1", Type::kUint256, "2", true},
                  testing::Uint("sv2")};
  p.arrays = {DynArray{"arr0", {"1"}}};
  EXPECT_EQ(p.StorageSlot("sv0"), 0u);
  EXPECT_FALSE(p.StorageSlot("sv1").has_value());
  EXPECT_EQ(p.StorageSlot("sv2"), 1u);
  EXPECT_EQ(p.StorageSlot("arr0"), 2u);
}

TEST(ModifierTest, PlaceholderCountIsTopLevel) {
  ModifierDecl m{"m0", {Placeholder{}, BareBlock{{Placeholder{}}}}};
  EXPECT_EQ(m.PlaceholderCount(), 1);
}

}  // namespace
}  // namespace solgen
