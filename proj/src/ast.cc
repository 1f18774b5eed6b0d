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

#include <algorithm>
#include <charconv>

namespace solgen {

std::string_view TypeName(Type type) {
  switch (type) {
    case Type::kUint256: return "uint256";
    case Type::kInt256: return "int256";
    case Type::kBool: return "bool";
  }
  return "?";
}

std::string Version::ToString() const {
  return std::to_string(major) + "." + std::to_string(minor) + "." +
         std::to_string(patch);
}

std::optional<Version> Version::Parse(std::string_view text) {
  Version v;
  int* parts[] = {&v.major, &v.minor, &v.patch};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, *parts[i]);
    if (ec != std::errc() || next == p) return std::nullopt;
    p = next;
    if (i < 2) {
      if (p == end || *p != '.') return std::nullopt;
      ++p;
    }
  }
  if (p != end) return std::nullopt;
  return v;
}

std::string_view BinaryOpToken(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kOr: return "||";
    case BinaryOp::kAnd: return "&&";
  }
  return "?";
}

bool IsArithmetic(BinaryOp op) {
  return op == BinaryOp::kAdd || op == BinaryOp::kSub ||
         op == BinaryOp::kMul || op == BinaryOp::kDiv || op == BinaryOp::kMod;
}

bool IsRelational(BinaryOp op) {
  return op == BinaryOp::kGt || op == BinaryOp::kLt || op == BinaryOp::kEq ||
         op == BinaryOp::kNe;
}

bool IsLogical(BinaryOp op) {
  return op == BinaryOp::kOr || op == BinaryOp::kAnd;
}

std::string_view AssignOpToken(AssignOp op) {
  switch (op) {
    case AssignOp::kAssign: return "=";
    case AssignOp::kAddAssign: return "+=";
    case AssignOp::kSubAssign: return "-=";
    case AssignOp::kMulAssign: return "*=";
  }
  return "?";
}

std::string_view VisibilityName(Visibility v) {
  switch (v) {
    case Visibility::kPublic: return "public";
    case Visibility::kExternal: return "external";
    case Visibility::kInternal: return "internal";
  }
  return "?";
}

std::string_view MutabilityName(Mutability m) {
  switch (m) {
    case Mutability::kDefault: return "";
    case Mutability::kView: return "view";
    case Mutability::kPure: return "pure";
    case Mutability::kPayable: return "payable";
  }
  return "?";
}

YulExpr YLit(uint64_t value) { return YulLit{std::to_string(value)}; }
YulExpr YRef(std::string name) { return YulRef{std::move(name)}; }
YulExpr YSlot(std::string var) { return YulSlot{std::move(var)}; }
YulExpr YCall(std::string function, std::vector<YulExpr> args) {
  return YulCall{std::move(function), std::move(args)};
}
YulStmt YEffect(std::string function, std::vector<YulExpr> args) {
  return YulExprStmt{YulCall{std::move(function), std::move(args)}};
}

int ModifierDecl::PlaceholderCount() const {
  return static_cast<int>(std::count_if(body.begin(), body.end(), [](const Stmt& s) {
    return s.Is<Placeholder>();
  }));
}

namespace {

template <typename T>
const T* FindByName(const std::vector<T>& items, std::string_view name) {
  for (const T& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

// Compares two unsigned decimal strings without leading zeros.
int CompareMagnitude(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

const StateVar* Program::FindStateVar(std::string_view name) const {
  return FindByName(state_vars, name);
}
const DynArray* Program::FindArray(std::string_view name) const {
  return FindByName(arrays, name);
}
const FunctionDecl* Program::FindFunction(std::string_view name) const {
  return FindByName(functions, name);
}
const ModifierDecl* Program::FindModifier(std::string_view name) const {
  return FindByName(modifiers, name);
}
const EventDecl* Program::FindEvent(std::string_view name) const {
  return FindByName(events, name);
}

std::optional<uint64_t> Program::StorageSlot(std::string_view name) const {
  uint64_t slot = 0;
  for (const StateVar& sv : state_vars) {
    if (sv.is_constant) continue;
    if (sv.name == name) return slot;
    ++slot;
  }
  for (const DynArray& arr : arrays) {
    if (arr.name == name) return slot;
    ++slot;
  }
  return std::nullopt;
}

std::vector<EventDecl> StandardEvents() {
  return {
      EventDecl{std::string(kLogUnsigned),
                {{"id", Type::kUint256}, {"value", Type::kUint256}}},
      EventDecl{std::string(kLogSigned),
                {{"id", Type::kUint256}, {"value", Type::kInt256}}},
  };
}

bool IsZeroLiteral(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char c) { return c == '0'; });
}

bool LiteralFits(Type type, std::string_view text) {
  if (type == Type::kBool || text.empty()) return false;
  bool negative = text.front() == '-';
  std::string_view digits = negative ? text.substr(1) : text;
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  if (digits.size() > 1 && digits.front() == '0') return false;
  if (type == Type::kUint256) {
    if (negative) return false;
    return CompareMagnitude(digits, kUint256Max) <= 0;
  }
  if (negative) return CompareMagnitude(digits, kInt256Min.substr(1)) <= 0;
  return CompareMagnitude(digits, kInt256Max) <= 0;
}

IntLit MakeLit(Type type, std::string value) {
  return IntLit{type, std::move(value)};
}

Type ExprType(const Expr& expr) {
  struct Visitor {
    Type operator()(const IntLit& e) { return e.type; }
    Type operator()(const VarRef& e) { return e.type; }
    Type operator()(const Binary& e) {
      return IsArithmetic(e.op) ? ExprType(*e.lhs) : Type::kBool;
    }
    Type operator()(const Not&) { return Type::kBool; }
    Type operator()(const Cast& e) { return e.type; }
    Type operator()(const DivGuard& e) { return ExprType(*e.divisor); }
    Type operator()(const IncDec& e) { return e.type; }
    Type operator()(const Call& e) { return e.type; }
    Type operator()(const Index&) { return Type::kUint256; }
    Type operator()(const SelectorAccess&) { return Type::kUint256; }
    Type operator()(const PushExpr&) { return Type::kUint256; }
  };
  return std::visit(Visitor{}, expr.node);
}

bool IsLiteralOnly(const Expr& expr) {
  if (expr.Is<IntLit>()) return true;
  if (expr.Is<Cast>()) return IsLiteralOnly(*expr.As<Cast>().operand);
  return false;
}

}  // namespace solgen
