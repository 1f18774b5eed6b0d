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

// AST for the generated Solidity subset and its inline-assembly (Yul) subset.
//
// The tree is a plain value type: nodes are copyable, comparable and carry no
// back-pointers. The emitter is the only consumer that turns it into text, so
// two equal trees always print identically.

#ifndef SOLGEN_AST_H_
#define SOLGEN_AST_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace solgen {

// Owning pointer with value semantics, used to break recursion in variants.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

enum class Type { kUint256, kInt256, kBool };

std::string_view TypeName(Type type);
inline bool IsInteger(Type type) { return type != Type::kBool; }

struct Version {
  int major = 0;
  int minor = 8;
  int patch = 0;

  auto operator<=>(const Version&) const = default;
  std::string ToString() const;
  // Parses "0.8.0"; returns nullopt on malformed input.
  static std::optional<Version> Parse(std::string_view text);
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr;

// Decimal literal text; negative values only for int256.
struct IntLit {
  Type type = Type::kUint256;
  std::string value;
  bool operator==(const IntLit&) const = default;
};

struct VarRef {
  std::string name;
  Type type = Type::kUint256;
  bool operator==(const VarRef&) const = default;
};

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kGt, kLt, kEq, kNe,
  kOr, kAnd,
};

std::string_view BinaryOpToken(BinaryOp op);
bool IsArithmetic(BinaryOp op);
bool IsRelational(BinaryOp op);
bool IsLogical(BinaryOp op);
inline bool IsDivision(BinaryOp op) {
  return op == BinaryOp::kDiv || op == BinaryOp::kMod;
}

struct Binary {
  BinaryOp op = BinaryOp::kAdd;
  Box<Expr> lhs;
  Box<Expr> rhs;
  bool operator==(const Binary&) const = default;
};

struct Not {
  Box<Expr> operand;
  bool operator==(const Not&) const = default;
};

struct Cast {
  Type type = Type::kUint256;
  Box<Expr> operand;
  bool operator==(const Cast&) const = default;
};

// Printed as `(d == 0 ? 1 : d)`; the divisor must be free of side effects
// since it is evaluated twice.
struct DivGuard {
  Box<Expr> divisor;
  bool operator==(const DivGuard&) const = default;
};

// Postfix `x++` / `x--`.
struct IncDec {
  std::string name;
  Type type = Type::kUint256;
  bool increment = true;
  bool operator==(const IncDec&) const = default;
};

struct Call {
  std::string callee;
  Type type = Type::kUint256;  // callee's return type
  std::vector<Expr> args;
  bool operator==(const Call&) const = default;
};

// Bounds-guarded element read: `(arr.length > k ? arr[k] : 0)`.
struct Index {
  std::string array;
  uint64_t index = 0;
  bool operator==(const Index&) const = default;
};

// `uint256(uint32(this.f.selector))`.
struct SelectorAccess {
  std::string function;
  bool operator==(const SelectorAccess&) const = default;
};

// `arr.push()` used as a value. Never generated; exists so that array-growth
// screening can be exercised on hand-built trees.
struct PushExpr {
  std::string array;
  bool operator==(const PushExpr&) const = default;
};

struct Expr {
  using Node = std::variant<IntLit, VarRef, Binary, Not, Cast, DivGuard, IncDec,
                            Call, Index, SelectorAccess, PushExpr>;
  Node node;

  template <typename T>
  Expr(T n) : node(std::move(n)) {}  // NOLINT

  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& As() const { return std::get<T>(node); }
  template <typename T>
  T& As() { return std::get<T>(node); }

  bool operator==(const Expr&) const = default;
};

// ---------------------------------------------------------------------------
// Inline assembly
// ---------------------------------------------------------------------------

struct YulExpr;

struct YulLit {
  std::string value;
  bool operator==(const YulLit&) const = default;
};

// A Yul variable or a Solidity local/parameter visible from the block.
struct YulRef {
  std::string name;
  bool operator==(const YulRef&) const = default;
};

// `<var>.slot` for a Solidity state variable.
struct YulSlot {
  std::string var;
  bool operator==(const YulSlot&) const = default;
};

// Builtin (add, sload, mstore, keccak256, return, ...) or user function call.
struct YulCall {
  std::string function;
  std::vector<YulExpr> args;
  bool operator==(const YulCall&) const = default;
};

struct YulExpr {
  using Node = std::variant<YulLit, YulRef, YulSlot, YulCall>;
  Node node;

  template <typename T>
  YulExpr(T n) : node(std::move(n)) {}  // NOLINT

  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& As() const { return std::get<T>(node); }

  bool operator==(const YulExpr&) const = default;
};

struct YulStmt;
using YulBody = std::vector<YulStmt>;

struct YulLet {
  std::string name;
  YulExpr value;
  bool operator==(const YulLet&) const = default;
};

struct YulAssign {
  std::string name;
  YulExpr value;
  bool operator==(const YulAssign&) const = default;
};

// A call evaluated for its effect: mstore, sstore, return, user functions.
struct YulExprStmt {
  YulCall call;
  bool operator==(const YulExprStmt&) const = default;
};

struct YulIf {
  YulExpr cond;
  YulBody body;
  bool operator==(const YulIf&) const = default;
};

// for { let c := 0 } lt(c, bound) { c := add(c, 1) } { body }
struct YulFor {
  std::string counter;
  uint64_t bound = 1;
  YulBody body;
  bool operator==(const YulFor&) const = default;
};

struct YulFnDef {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> rets;
  YulBody body;
  bool operator==(const YulFnDef&) const = default;
};

struct YulStmt {
  using Node = std::variant<YulLet, YulAssign, YulExprStmt, YulIf, YulFor,
                            YulFnDef>;
  Node node;

  template <typename T>
  YulStmt(T n) : node(std::move(n)) {}  // NOLINT

  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& As() const { return std::get<T>(node); }

  bool operator==(const YulStmt&) const = default;
};

// Convenience constructors for Yul trees.
YulExpr YLit(uint64_t value);
YulExpr YRef(std::string name);
YulExpr YSlot(std::string var);
YulExpr YCall(std::string function, std::vector<YulExpr> args = {});
YulStmt YEffect(std::string function, std::vector<YulExpr> args = {});

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;
using Block = std::vector<Stmt>;

struct LocalDecl {
  std::string name;
  Type type = Type::kUint256;
  Expr init;
  bool operator==(const LocalDecl&) const = default;
};

enum class AssignOp { kAssign, kAddAssign, kSubAssign, kMulAssign };
std::string_view AssignOpToken(AssignOp op);

struct Assign {
  std::string target;
  Type type = Type::kUint256;
  AssignOp op = AssignOp::kAssign;
  Expr value;
  bool operator==(const Assign&) const = default;
};

struct If {
  Expr cond;
  Block then_block;
  std::optional<Block> else_block;
  bool operator==(const If&) const = default;
};

enum class LoopForm {
  kInitInHeader,   // for (uint256 i = 0; i < C; i++) { ... }
  kInitBeforeLoop, // { uint256 i = 0; for (; i < C; i++) { ... } }
};

struct ForLoop {
  LoopForm form = LoopForm::kInitInHeader;
  std::string counter;
  uint64_t bound = 1;
  Block body;
  bool operator==(const ForLoop&) const = default;
};

struct YulBlock {
  YulBody body;
  bool operator==(const YulBlock&) const = default;
};

enum class ArrayOpKind { kPush, kGuardedPop, kGuardedIndexUpdate };

struct ArrayOp {
  std::string array;
  ArrayOpKind kind = ArrayOpKind::kPush;
  std::optional<Expr> value;  // push only
  uint64_t index = 0;         // guarded index update only
  bool increment = true;      // guarded index update only
  bool operator==(const ArrayOp&) const = default;
};

struct Unchecked {
  Block body;
  bool operator==(const Unchecked&) const = default;
};

struct EmitLog {
  std::string event;
  std::vector<Expr> args;
  bool operator==(const EmitLog&) const = default;
};

// Logs (id, length) then (id, element) for the first min(length, limit)
// elements of a state array.
struct ArrayDump {
  std::string array;
  uint64_t id = 0;
  uint64_t limit = 8;
  bool operator==(const ArrayDump&) const = default;
};

struct BareBlock {
  Block body;
  bool operator==(const BareBlock&) const = default;
};

// Modifier placeholder `_;`.
struct Placeholder {
  bool operator==(const Placeholder&) const = default;
};

struct Stmt {
  using Node = std::variant<LocalDecl, Assign, If, ForLoop, YulBlock, ArrayOp,
                            Unchecked, EmitLog, ArrayDump, BareBlock,
                            Placeholder>;
  Node node;

  template <typename T>
  Stmt(T n) : node(std::move(n)) {}  // NOLINT

  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& As() const { return std::get<T>(node); }
  template <typename T>
  T& As() { return std::get<T>(node); }

  bool operator==(const Stmt&) const = default;
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct Param {
  std::string name;
  Type type = Type::kUint256;
  bool operator==(const Param&) const = default;
};

struct EventDecl {
  std::string name;
  std::vector<Param> params;
  bool operator==(const EventDecl&) const = default;
};

struct StateVar {
  std::string name;
  Type type = Type::kUint256;
  std::string init;  // decimal literal
  bool is_constant = false;
  bool operator==(const StateVar&) const = default;
};

// Dynamic `uint256[]` storage array.
struct DynArray {
  std::string name;
  std::vector<std::string> init_elems;
  bool operator==(const DynArray&) const = default;
};

struct ModifierDecl {
  std::string name;
  Block body;
  bool operator==(const ModifierDecl&) const = default;

  // Number of top-level placeholders in the body.
  int PlaceholderCount() const;
};

enum class Visibility { kPublic, kExternal, kInternal };
enum class Mutability { kDefault, kView, kPure, kPayable };
std::string_view VisibilityName(Visibility v);
std::string_view MutabilityName(Mutability m);

struct FunctionDecl {
  std::string name;
  std::vector<Param> params;
  Visibility visibility = Visibility::kPublic;
  Mutability mutability = Mutability::kDefault;
  std::optional<Param> returns;
  std::vector<std::string> modifiers;
  Block body;
  bool operator==(const FunctionDecl&) const = default;

  bool IsReadOnly() const {
    return mutability == Mutability::kView || mutability == Mutability::kPure;
  }
  bool IsExternallyCallable() const { return visibility != Visibility::kInternal; }
};

struct Program {
  std::string spdx_id = "GPL-3.0";
  Version pragma_floor{0, 8, 0};
  std::string contract_name = "C";
  std::vector<EventDecl> events;
  std::vector<StateVar> state_vars;
  std::vector<DynArray> arrays;
  std::vector<ModifierDecl> modifiers;
  std::vector<FunctionDecl> functions;
  bool operator==(const Program&) const = default;

  const StateVar* FindStateVar(std::string_view name) const;
  const DynArray* FindArray(std::string_view name) const;
  const FunctionDecl* FindFunction(std::string_view name) const;
  const ModifierDecl* FindModifier(std::string_view name) const;
  const EventDecl* FindEvent(std::string_view name) const;

  // Storage slot of a non-constant state variable or array, following
  // declaration order (scalars first, then arrays, as emitted).
  std::optional<uint64_t> StorageSlot(std::string_view name) const;
};

// Names of the two logging events every program declares.
inline constexpr std::string_view kLogUnsigned = "LogU";
inline constexpr std::string_view kLogSigned = "LogI";
std::vector<EventDecl> StandardEvents();

// ---------------------------------------------------------------------------
// Literal helpers
// ---------------------------------------------------------------------------

// Decimal text of 2^256-1, 2^255-1 and -2^255.
inline constexpr std::string_view kUint256Max =
    "115792089237316195423570985008687907853269984665640564039457584007913129639935";
inline constexpr std::string_view kInt256Max =
    "57896044618658097711785492504343953926634992332820282019728792003956564819967";
inline constexpr std::string_view kInt256Min =
    "-57896044618658097711785492504343953926634992332820282019728792003956564819968";

// True when `text` is a well-formed decimal literal within the range of type.
bool LiteralFits(Type type, std::string_view text);
bool IsZeroLiteral(std::string_view text);

IntLit MakeLit(Type type, std::string value);

// Static type of a well-formed expression.
Type ExprType(const Expr& expr);
// True for an IntLit, possibly wrapped in Casts.
bool IsLiteralOnly(const Expr& expr);
inline IntLit MakeLit(Type type, uint64_t value) {
  return MakeLit(type, std::to_string(value));
}

}  // namespace solgen

#endif  // SOLGEN_AST_H_
