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

#include "solgen/validate.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <variant>

#include "solgen/emitter.h"

namespace solgen {

std::string Violation::ToString() const {
  return rule + " at " + path + ": " + fragment;
}

int YulBuiltinArity(std::string_view name, bool* returns_value) {
  struct Builtin {
    std::string_view name;
    int arity;
    bool value;
  };
  static constexpr Builtin kBuiltins[] = {
      {"add", 2, true},    {"sub", 2, true},     {"mul", 2, true},
      {"div", 2, true},    {"sdiv", 2, true},    {"mod", 2, true},
      {"smod", 2, true},   {"and", 2, true},     {"or", 2, true},
      {"xor", 2, true},    {"not", 1, true},     {"iszero", 1, true},
      {"lt", 2, true},     {"gt", 2, true},      {"slt", 2, true},
      {"sgt", 2, true},    {"eq", 2, true},      {"shl", 2, true},
      {"shr", 2, true},    {"sar", 2, true},     {"addmod", 3, true},
      {"mulmod", 3, true}, {"byte", 2, true},    {"signextend", 2, true},
      {"sload", 1, true},  {"mload", 1, true},   {"keccak256", 2, true},
      {"sstore", 2, false}, {"mstore", 2, false}, {"return", 2, false},
      {"revert", 2, false}, {"stop", 0, false},   {"pop", 1, false},
  };
  for (const Builtin& b : kBuiltins) {
    if (b.name == name) {
      if (returns_value) *returns_value = b.value;
      return b.arity;
    }
  }
  return -1;
}

namespace {

std::string FirstLine(std::string text) {
  size_t start = text.find_first_not_of(' ');
  if (start == std::string::npos) return "";
  size_t end = text.find('\n', start);
  return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

std::optional<uint64_t> YulLiteralValue(const YulExpr& e) {
  if (!e.Is<YulLit>()) return std::nullopt;
  const std::string& text = e.As<YulLit>().value;
  uint64_t value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || p != text.data() + text.size()) return std::nullopt;
  return value;
}

class Validator {
 public:
  explicit Validator(const Program& program) : p_(program) {}

  std::vector<Violation> Run() {
    CheckDeclarations();
    for (size_t i = 0; i < p_.modifiers.size(); ++i) CheckModifier(i);
    for (size_t i = 0; i < p_.functions.size(); ++i) CheckFunction(i);
    return std::move(out_);
  }

 private:
  struct Local {
    Type type;
    bool counter;
  };
  struct Occurrences {
    int plain = 0;
    int incdec = 0;
  };

  // ---- reporting ----------------------------------------------------------

  std::string Path() const {
    std::string out;
    for (const std::string& part : path_) {
      if (!out.empty() && part.front() != '[') out += '.';
      out += part;
    }
    return out;
  }

  void Add(std::string_view rule, std::string fragment) {
    out_.push_back(Violation{std::string(rule), Path(), std::move(fragment)});
  }

  struct PathGuard {
    PathGuard(Validator* v, std::string part) : v(v) { v->path_.push_back(std::move(part)); }
    ~PathGuard() { v->path_.pop_back(); }
    Validator* v;
  };

  // ---- declarations -------------------------------------------------------

  void CheckDeclarations() {
    if (p_.pragma_floor < Version{0, 8, 0}) {
      PathGuard g(this, "pragma");
      Add(rule::kPragmaFloor, "pragma solidity ^" + p_.pragma_floor.ToString());
    }
    std::set<std::string> names{p_.contract_name};
    auto unique = [&](const std::string& name, const std::string& where) {
      if (!names.insert(name).second) {
        PathGuard g(this, where);
        Add(rule::kUniqueIdentifiers, name);
      }
    };
    if (p_.events.empty()) {
      PathGuard g(this, "events");
      Add(rule::kEventsNonEmpty, "no event declarations");
    }
    for (size_t i = 0; i < p_.events.size(); ++i) {
      const EventDecl& ev = p_.events[i];
      std::string where = "events[" + std::to_string(i) + "]";
      unique(ev.name, where);
      for (const Param& param : ev.params) {
        if (!IsInteger(param.type)) {
          PathGuard g(this, where);
          Add(rule::kEventParamType, ev.name + "." + param.name);
        }
      }
    }
    for (size_t i = 0; i < p_.state_vars.size(); ++i) {
      const StateVar& sv = p_.state_vars[i];
      std::string where = "state_vars[" + std::to_string(i) + "]";
      unique(sv.name, where);
      PathGuard g(this, where);
      if (!IsInteger(sv.type)) {
        Add(rule::kStateVarType, sv.name);
      } else if (!LiteralFits(sv.type, sv.init)) {
        Add(rule::kStateInitRange, sv.name + " = " + sv.init);
      }
    }
    for (size_t i = 0; i < p_.arrays.size(); ++i) {
      const DynArray& arr = p_.arrays[i];
      std::string where = "arrays[" + std::to_string(i) + "]";
      unique(arr.name, where);
      for (const std::string& elem : arr.init_elems) {
        if (!LiteralFits(Type::kUint256, elem)) {
          PathGuard g(this, where);
          Add(rule::kArrayInitRange, arr.name + " element " + elem);
        }
      }
    }
    for (size_t i = 0; i < p_.modifiers.size(); ++i) {
      unique(p_.modifiers[i].name, "modifiers[" + std::to_string(i) + "]");
    }
    for (size_t i = 0; i < p_.functions.size(); ++i) {
      unique(p_.functions[i].name, "functions[" + std::to_string(i) + "]");
    }
  }

  void CheckModifier(size_t index) {
    const ModifierDecl& mod = p_.modifiers[index];
    PathGuard g(this, "modifiers[" + std::to_string(index) + "]");
    fn_ = nullptr;
    fn_index_ = p_.functions.size();
    in_modifier_ = true;
    scopes_.assign(1, {});
    if (mod.PlaceholderCount() != 1) {
      Add(rule::kPlaceholderCount,
          mod.name + " has " + std::to_string(mod.PlaceholderCount()) +
              " placeholders");
    }
    PathGuard body(this, "body");
    CheckBlock(mod.body, /*top_level=*/true);
    in_modifier_ = false;
  }

  void CheckFunction(size_t index) {
    const FunctionDecl& fn = p_.functions[index];
    PathGuard g(this, "functions[" + std::to_string(index) + "]");
    fn_ = &fn;
    fn_index_ = index;
    in_modifier_ = false;
    scopes_.assign(1, {});
    for (const Param& param : fn.params) Declare(param.name, param.type, false, "");
    if (fn.returns) Declare(fn.returns->name, fn.returns->type, false, "");
    for (const std::string& m : fn.modifiers) {
      if (!p_.FindModifier(m)) Add(rule::kUnknownModifier, m);
      if (fn.IsReadOnly()) Add(rule::kModifierMutability, fn.name + " " + m);
    }
    if (fn.mutability == Mutability::kPayable &&
        fn.visibility == Visibility::kInternal) {
      Add(rule::kPayableVisibility, fn.name);
    }
    PathGuard body(this, "body");
    CheckBlock(fn.body, /*top_level=*/true);
    fn_ = nullptr;
  }

  // ---- scopes -------------------------------------------------------------

  const Local* FindLocal(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return &found->second;
    }
    return nullptr;
  }

  void Declare(const std::string& name, Type type, bool counter,
               const std::string& fragment) {
    if (FindLocal(name) || p_.FindStateVar(name) || p_.FindArray(name) ||
        p_.FindFunction(name) || p_.FindModifier(name) || p_.FindEvent(name)) {
      Add(rule::kShadowedDeclaration, fragment.empty() ? name : fragment);
    }
    scopes_.back()[name] = Local{type, counter};
  }

  bool IsPure() const { return fn_ && fn_->mutability == Mutability::kPure; }
  bool IsReadOnly() const { return fn_ && fn_->IsReadOnly(); }

  void StateRead(const std::string& fragment) {
    if (IsPure()) Add(rule::kPureStateAccess, fragment);
  }
  void StateWrite(const std::string& fragment) {
    if (IsPure()) {
      Add(rule::kPureStateAccess, fragment);
    } else if (IsReadOnly()) {
      Add(rule::kViewStateWrite, fragment);
    }
  }

  // ---- statements ---------------------------------------------------------

  void CheckBlock(const Block& block, bool top_level = false) {
    scopes_.emplace_back();
    for (size_t i = 0; i < block.size(); ++i) {
      PathGuard g(this, "[" + std::to_string(i) + "]");
      CheckStmt(block[i], top_level);
    }
    scopes_.pop_back();
  }

  void BeginStatement() { occurrences_.clear(); }

  void EndStatement() {
    for (const auto& [name, occ] : occurrences_) {
      if (occ.incdec >= 1 && occ.plain + occ.incdec >= 2) {
        Add(rule::kIncDecIsolation, fragment_);
      }
    }
    occurrences_.clear();
  }

  void CheckStmt(const Stmt& stmt, bool top_level) {
    fragment_ = FirstLine(EmitStmt(stmt));
    std::visit([&](const auto& node) { Check(node, top_level); }, stmt.node);
  }

  void Check(const LocalDecl& s, bool) {
    std::string fragment = fragment_;
    if (in_modifier_) Add(rule::kModifierScope, fragment);
    BeginStatement();
    Expect(s.init, s.type);
    EndStatement();
    Declare(s.name, s.type, false, fragment);
  }

  void Check(const Assign& s, bool) {
    std::string fragment = fragment_;
    BeginStatement();
    std::optional<Type> target = WritableTarget(s.target, fragment);
    if (target && *target != s.type) Add(rule::kOperandTypes, fragment);
    occurrences_[s.target].plain++;
    Expect(s.value, s.type);
    EndStatement();
  }

  void Check(const If& s, bool) {
    BeginStatement();
    Expect(s.cond, Type::kBool);
    EndStatement();
    {
      PathGuard g(this, "then");
      CheckBlock(s.then_block);
    }
    if (s.else_block) {
      PathGuard g(this, "else");
      CheckBlock(*s.else_block);
    }
  }

  void Check(const ForLoop& s, bool) {
    scopes_.emplace_back();
    Declare(s.counter, Type::kUint256, true, fragment_);
    if (s.bound == 0) Add(rule::kLiteralRange, fragment_);
    {
      PathGuard g(this, "body");
      CheckBlock(s.body);
    }
    scopes_.pop_back();
  }

  void Check(const YulBlock& s, bool) {
    yul_scopes_.assign(1, {});
    yul_functions_.clear();
    in_yul_function_ = false;
    written_.assign(1, {});
    PathGuard g(this, "assembly");
    CheckYulBody(s.body);
  }

  void Check(const ArrayOp& s, bool) {
    std::string fragment = fragment_;
    if (!p_.FindArray(s.array)) {
      Add(rule::kUndeclaredIdentifier, fragment);
    }
    StateWrite(fragment);
    if (s.kind == ArrayOpKind::kPush) {
      BeginStatement();
      if (!s.value) {
        Add(rule::kOperandTypes, fragment);
      } else {
        Expect(*s.value, Type::kUint256);
      }
      EndStatement();
    }
  }

  void Check(const Unchecked& s, bool) {
    if (unchecked_depth_ > 0) Add(rule::kUncheckedNesting, fragment_);
    ++unchecked_depth_;
    {
      PathGuard g(this, "unchecked");
      CheckBlock(s.body);
    }
    --unchecked_depth_;
  }

  void Check(const EmitLog& s, bool) {
    std::string fragment = fragment_;
    StateWrite(fragment);
    const EventDecl* ev = p_.FindEvent(s.event);
    BeginStatement();
    if (!ev) {
      Add(rule::kUndeclaredIdentifier, fragment);
      for (const Expr& arg : s.args) TypeOf(arg);
    } else if (ev->params.size() != s.args.size()) {
      Add(rule::kEventArgs, fragment);
    } else {
      for (size_t i = 0; i < s.args.size(); ++i) Expect(s.args[i], ev->params[i].type);
    }
    EndStatement();
  }

  void Check(const ArrayDump& s, bool) {
    if (!p_.FindArray(s.array)) Add(rule::kUndeclaredIdentifier, fragment_);
    StateWrite(fragment_);
  }

  void Check(const BareBlock& s, bool) {
    PathGuard g(this, "block");
    CheckBlock(s.body);
  }

  void Check(const Placeholder&, bool top_level) {
    if (!in_modifier_ || !top_level || unchecked_depth_ > 0) {
      Add(rule::kPlaceholderPosition, "_;");
    }
  }

  // Resolves an assignment / increment target and reports write violations.
  std::optional<Type> WritableTarget(const std::string& name,
                                     const std::string& fragment) {
    if (const Local* local = FindLocal(name)) {
      if (local->counter) Add(rule::kLoopCounterWrite, fragment);
      return local->type;
    }
    if (const StateVar* sv = p_.FindStateVar(name)) {
      if (sv->is_constant) {
        Add(rule::kConstantAssignment, fragment);
      } else {
        StateWrite(fragment);
      }
      return sv->type;
    }
    if (p_.FindArray(name)) {
      Add(rule::kOperandTypes, fragment);
      return std::nullopt;
    }
    Add(rule::kUndeclaredIdentifier, fragment);
    return std::nullopt;
  }

  // ---- expressions --------------------------------------------------------

  void Expect(const Expr& e, Type type) {
    std::optional<Type> got = TypeOf(e);
    if (got && *got != type) {
      Add(rule::kOperandTypes, EmitExpr(e) + " is not " + std::string(TypeName(type)));
    }
  }

  static bool HasSideEffects(const Expr& e) {
    return std::visit(
        [](const auto& node) -> bool {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, IncDec> || std::is_same_v<T, PushExpr>) {
            return true;
          } else if constexpr (std::is_same_v<T, Binary>) {
            return HasSideEffects(*node.lhs) || HasSideEffects(*node.rhs);
          } else if constexpr (std::is_same_v<T, Not> || std::is_same_v<T, Cast>) {
            return HasSideEffects(*node.operand);
          } else if constexpr (std::is_same_v<T, DivGuard>) {
            return HasSideEffects(*node.divisor);
          } else if constexpr (std::is_same_v<T, Call>) {
            return std::any_of(node.args.begin(), node.args.end(), HasSideEffects);
          } else {
            return false;
          }
        },
        e.node);
  }

  std::optional<Type> TypeOf(const Expr& e) {
    return std::visit([&](const auto& node) { return TypeOfNode(node, e); }, e.node);
  }

  std::optional<Type> TypeOfNode(const IntLit& lit, const Expr&) {
    if (!LiteralFits(lit.type, lit.value)) Add(rule::kLiteralRange, lit.value);
    return lit.type;
  }

  std::optional<Type> TypeOfNode(const VarRef& ref, const Expr&) {
    occurrences_[ref.name].plain++;
    std::optional<Type> declared;
    if (const Local* local = FindLocal(ref.name)) {
      declared = local->type;
    } else if (const StateVar* sv = p_.FindStateVar(ref.name)) {
      StateRead(ref.name);
      declared = sv->type;
    } else if (p_.FindArray(ref.name)) {
      Add(rule::kOperandTypes, ref.name);
      return std::nullopt;
    } else {
      Add(rule::kUndeclaredIdentifier, ref.name);
      return std::nullopt;
    }
    if (*declared != ref.type) Add(rule::kOperandTypes, ref.name);
    return ref.type;
  }

  std::optional<Type> TypeOfNode(const IncDec& inc, const Expr& e) {
    occurrences_[inc.name].incdec++;
    std::optional<Type> declared = WritableTarget(inc.name, EmitExpr(e));
    if (declared && *declared != inc.type) Add(rule::kOperandTypes, EmitExpr(e));
    return inc.type;
  }

  std::optional<Type> TypeOfNode(const Binary& b, const Expr& e) {
    std::optional<Type> lhs = TypeOf(*b.lhs);
    std::optional<Type> rhs = TypeOf(*b.rhs);
    if (IsLiteralOnly(*b.lhs) && IsLiteralOnly(*b.rhs) && b.lhs->Is<IntLit>() &&
        b.rhs->Is<IntLit>()) {
      Add(rule::kConstantOperands, EmitExpr(e));
    }
    if (IsDivision(b.op)) {
      bool guarded = b.rhs->Is<DivGuard>() ||
                     (b.rhs->Is<IntLit>() && !IsZeroLiteral(b.rhs->As<IntLit>().value));
      if (!guarded) Add(rule::kDivisionGuard, EmitExpr(e));
    }
    if (!lhs || !rhs) return IsArithmetic(b.op) ? lhs : std::optional<Type>(Type::kBool);
    if (IsLogical(b.op)) {
      if (*lhs != Type::kBool || *rhs != Type::kBool) Add(rule::kOperandTypes, EmitExpr(e));
      return Type::kBool;
    }
    if (!IsInteger(*lhs) || *lhs != *rhs) Add(rule::kOperandTypes, EmitExpr(e));
    return IsArithmetic(b.op) ? *lhs : Type::kBool;
  }

  std::optional<Type> TypeOfNode(const Not& n, const Expr& e) {
    std::optional<Type> t = TypeOf(*n.operand);
    if (t && *t != Type::kBool) Add(rule::kOperandTypes, EmitExpr(e));
    return Type::kBool;
  }

  std::optional<Type> TypeOfNode(const Cast& c, const Expr& e) {
    std::optional<Type> t = TypeOf(*c.operand);
    if (!IsInteger(c.type) || (t && !IsInteger(*t))) Add(rule::kOperandTypes, EmitExpr(e));
    if (c.operand->Is<IntLit>() && !LiteralFits(c.type, c.operand->As<IntLit>().value)) {
      Add(rule::kLiteralRange, EmitExpr(e));
    }
    return c.type;
  }

  std::optional<Type> TypeOfNode(const DivGuard& d, const Expr& e) {
    if (HasSideEffects(*d.divisor)) Add(rule::kDivisionGuard, EmitExpr(e));
    std::optional<Type> t = TypeOf(*d.divisor);
    if (t && !IsInteger(*t)) Add(rule::kOperandTypes, EmitExpr(e));
    return t;
  }

  std::optional<Type> TypeOfNode(const Call& call, const Expr& e) {
    std::string fragment = EmitExpr(e);
    if (in_modifier_) Add(rule::kModifierScope, fragment);
    const FunctionDecl* callee = nullptr;
    size_t callee_index = 0;
    for (size_t i = 0; i < p_.functions.size(); ++i) {
      if (p_.functions[i].name == call.callee) {
        callee = &p_.functions[i];
        callee_index = i;
      }
    }
    if (!callee) {
      Add(rule::kUndeclaredIdentifier, fragment);
      for (const Expr& arg : call.args) TypeOf(arg);
      return call.type;
    }
    if (callee->visibility == Visibility::kExternal) Add(rule::kCallVisibility, fragment);
    if (callee->mutability != Mutability::kPure) Add(rule::kImpureCall, fragment);
    if (callee_index >= fn_index_) Add(rule::kCallOrder, fragment);
    if (!callee->returns || callee->returns->type != call.type ||
        callee->params.size() != call.args.size()) {
      Add(rule::kOperandTypes, fragment);
      for (const Expr& arg : call.args) TypeOf(arg);
      return call.type;
    }
    for (size_t i = 0; i < call.args.size(); ++i) Expect(call.args[i], callee->params[i].type);
    return call.type;
  }

  std::optional<Type> TypeOfNode(const Index& idx, const Expr& e) {
    if (!p_.FindArray(idx.array)) Add(rule::kUndeclaredIdentifier, EmitExpr(e));
    StateRead(EmitExpr(e));
    return Type::kUint256;
  }

  std::optional<Type> TypeOfNode(const SelectorAccess& sel, const Expr& e) {
    const FunctionDecl* target = p_.FindFunction(sel.function);
    if (!target) {
      Add(rule::kUndeclaredIdentifier, EmitExpr(e));
    } else if (!target->IsExternallyCallable()) {
      Add(rule::kCallVisibility, EmitExpr(e));
    }
    StateRead(EmitExpr(e));
    return Type::kUint256;
  }

  std::optional<Type> TypeOfNode(const PushExpr& push, const Expr& e) {
    if (!p_.FindArray(push.array)) Add(rule::kUndeclaredIdentifier, EmitExpr(e));
    StateWrite(EmitExpr(e));
    return Type::kUint256;
  }

  // ---- inline assembly ----------------------------------------------------

  bool YulLocal(const std::string& name) const {
    for (const auto& scope : yul_scopes_) {
      if (scope.count(name)) return true;
    }
    return false;
  }

  void DeclareYul(const std::string& name, const std::string& fragment) {
    if (YulLocal(name) || (!in_yul_function_ && FindLocal(name)) ||
        yul_functions_.count(name)) {
      Add(rule::kShadowedDeclaration, fragment);
    }
    yul_scopes_.back().insert(name);
  }

  void CheckYulBody(const YulBody& body) {
    yul_scopes_.emplace_back();
    for (const YulStmt& s : body) {
      if (s.Is<YulFnDef>()) {
        const YulFnDef& def = s.As<YulFnDef>();
        if (yul_functions_.count(def.name)) {
          Add(rule::kShadowedDeclaration, "function " + def.name);
        }
        yul_functions_[def.name] = {def.params.size(), def.rets.size()};
      }
    }
    for (size_t i = 0; i < body.size(); ++i) {
      PathGuard g(this, "[" + std::to_string(i) + "]");
      CheckYulStmt(body[i]);
    }
    yul_scopes_.pop_back();
  }

  void CheckYulStmt(const YulStmt& stmt) {
    std::string fragment = FirstLine(EmitYulStmt(stmt));
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, YulLet>) {
            CheckYulExpr(node.value, true);
            DeclareYul(node.name, fragment);
          } else if constexpr (std::is_same_v<T, YulAssign>) {
            CheckYulExpr(node.value, true);
            CheckYulAssignTarget(node.name, fragment);
          } else if constexpr (std::is_same_v<T, YulExprStmt>) {
            CheckYulCall(node.call, false);
          } else if constexpr (std::is_same_v<T, YulIf>) {
            CheckYulExpr(node.cond, true);
            written_.push_back(written_.back());
            CheckYulBody(node.body);
            written_.pop_back();
          } else if constexpr (std::is_same_v<T, YulFor>) {
            yul_scopes_.emplace_back();
            DeclareYul(node.counter, fragment);
            yul_counters_.insert(node.counter);
            written_.push_back(written_.back());
            CheckYulBody(node.body);
            written_.pop_back();
            yul_counters_.erase(node.counter);
            yul_scopes_.pop_back();
          } else if constexpr (std::is_same_v<T, YulFnDef>) {
            auto saved_scopes = std::move(yul_scopes_);
            bool saved_in_fn = in_yul_function_;
            yul_scopes_.assign(1, {});
            in_yul_function_ = true;
            for (const std::string& p : node.params) DeclareYul(p, fragment);
            for (const std::string& r : node.rets) DeclareYul(r, fragment);
            written_.push_back({});
            CheckYulBody(node.body);
            written_.pop_back();
            in_yul_function_ = saved_in_fn;
            yul_scopes_ = std::move(saved_scopes);
          }
        },
        stmt.node);
  }

  void CheckYulAssignTarget(const std::string& name, const std::string& fragment) {
    if (yul_counters_.count(name)) {
      Add(rule::kLoopCounterWrite, fragment);
      return;
    }
    if (YulLocal(name)) return;
    CheckSolidityFromYul(name, fragment, /*write=*/true);
  }

  void CheckSolidityFromYul(const std::string& name, const std::string& fragment,
                            bool write) {
    if (!in_yul_function_) {
      if (const Local* local = FindLocal(name)) {
        if (write && local->counter) Add(rule::kLoopCounterWrite, fragment);
        return;
      }
    }
    if (p_.FindArray(name)) {
      Add(rule::kYulArrayRef, fragment);
    } else if (p_.FindStateVar(name)) {
      Add(rule::kYulStateRef, fragment);
    } else {
      Add(rule::kUndeclaredIdentifier, fragment);
    }
  }

  void CheckYulExpr(const YulExpr& e, bool needs_value) {
    std::string fragment = EmitYulExpr(e);
    if (e.Is<YulRef>()) {
      const std::string& name = e.As<YulRef>().name;
      if (!YulLocal(name)) CheckSolidityFromYul(name, fragment, false);
    } else if (e.Is<YulSlot>()) {
      const std::string& var = e.As<YulSlot>().var;
      const StateVar* sv = p_.FindStateVar(var);
      if (p_.FindArray(var)) {
        Add(rule::kYulArrayRef, fragment);
      } else if (!sv || sv->is_constant || in_yul_function_) {
        Add(rule::kUndeclaredIdentifier, fragment);
      }
      StateRead(fragment);
    } else if (e.Is<YulCall>()) {
      CheckYulCall(e.As<YulCall>(), needs_value);
    } else if (e.Is<YulLit>() && !YulLiteralValue(e)) {
      Add(rule::kLiteralRange, fragment);
    }
  }

  // Checks a memory access of `len` bytes at `addr` (both literals).
  void CheckMemory(const YulCall& call, const YulExpr& addr, std::optional<uint64_t> len,
                   bool write) {
    std::string fragment = EmitYulExpr(call);
    std::optional<uint64_t> a = YulLiteralValue(addr);
    uint64_t n = len.value_or(32);
    if (!a || *a % 32 != 0 || *a + n > kYulScratchBytes) {
      Add(rule::kYulMemoryRange, fragment);
      return;
    }
    std::set<uint64_t>& written = written_.back();
    if (write) {
      written.insert(*a);
      return;
    }
    for (uint64_t word = *a; word < *a + n; word += 32) {
      if (!written.count(word)) {
        Add(rule::kYulUninitializedMemory, fragment);
        return;
      }
    }
  }

  void CheckYulCall(const YulCall& call, bool needs_value) {
    std::string fragment = EmitYulExpr(call);
    if (call.function.rfind("verbatim", 0) == 0) {
      Add(rule::kNoVerbatim, fragment);
      return;
    }
    for (const YulExpr& arg : call.args) CheckYulExpr(arg, true);
    bool returns_value = false;
    int arity = YulBuiltinArity(call.function, &returns_value);
    if (arity < 0) {
      auto it = yul_functions_.find(call.function);
      if (it == yul_functions_.end()) {
        Add(rule::kYulUnknownFunction, fragment);
        return;
      }
      if (it->second.first != call.args.size() ||
          (needs_value ? it->second.second != 1 : it->second.second != 0)) {
        Add(rule::kYulArity, fragment);
      }
      return;
    }
    if (static_cast<size_t>(arity) != call.args.size() || returns_value != needs_value) {
      Add(rule::kYulArity, fragment);
      return;
    }
    const std::string& f = call.function;
    if (f == "sload") {
      StateRead(fragment);
    } else if (f == "sstore") {
      StateWrite(fragment);
      std::optional<uint64_t> slot = YulLiteralValue(call.args[0]);
      if (slot) {
        for (const DynArray& arr : p_.arrays) {
          if (p_.StorageSlot(arr.name) == slot) Add(rule::kYulArrayLengthWrite, fragment);
        }
      }
    } else if (f == "mstore") {
      CheckMemory(call, call.args[0], std::nullopt, true);
    } else if (f == "mload") {
      CheckMemory(call, call.args[0], std::nullopt, false);
    } else if (f == "keccak256") {
      std::optional<uint64_t> len = YulLiteralValue(call.args[1]);
      if (!len) {
        Add(rule::kYulMemoryRange, fragment);
      } else {
        CheckMemory(call, call.args[0], *len, false);
      }
    } else if (f == "mstore8") {
      Add(rule::kYulMemoryRange, fragment);
    }
  }

  const Program& p_;
  std::vector<Violation> out_;
  std::vector<std::string> path_;
  std::string fragment_;

  const FunctionDecl* fn_ = nullptr;
  size_t fn_index_ = 0;
  bool in_modifier_ = false;
  int unchecked_depth_ = 0;
  std::vector<std::map<std::string, Local>> scopes_;
  std::map<std::string, Occurrences> occurrences_;

  std::vector<std::set<std::string>> yul_scopes_;
  std::map<std::string, std::pair<size_t, size_t>> yul_functions_;
  std::set<std::string> yul_counters_;
  bool in_yul_function_ = false;
  std::vector<std::set<uint64_t>> written_;
};

class LiveLocalCounter {
 public:
  int Run(const FunctionDecl& fn) {
    live_ = static_cast<int>(fn.params.size()) + (fn.returns ? 1 : 0);
    max_ = live_;
    Scoped(fn.body);
    return max_;
  }

 private:
  void Declare(int n = 1) {
    live_ += n;
    max_ = std::max(max_, live_);
  }

  void Scoped(const Block& block) {
    int saved = live_;
    for (const Stmt& s : block) Visit(s);
    live_ = saved;
  }

  void Visit(const Stmt& stmt) {
    if (stmt.Is<LocalDecl>()) {
      Declare();
    } else if (stmt.Is<If>()) {
      const If& s = stmt.As<If>();
      Scoped(s.then_block);
      if (s.else_block) Scoped(*s.else_block);
    } else if (stmt.Is<ForLoop>()) {
      int saved = live_;
      Declare();
      Scoped(stmt.As<ForLoop>().body);
      live_ = saved;
    } else if (stmt.Is<Unchecked>()) {
      Scoped(stmt.As<Unchecked>().body);
    } else if (stmt.Is<BareBlock>()) {
      Scoped(stmt.As<BareBlock>().body);
    } else if (stmt.Is<ArrayDump>()) {
      Declare();
      live_--;
    }
  }

  int live_ = 0;
  int max_ = 0;
};

}  // namespace

std::vector<Violation> Validate(const Program& program) {
  return Validator(program).Run();
}

int MaxLiveLocals(const FunctionDecl& fn) { return LiveLocalCounter().Run(fn); }

int CallChainLength(const Expr& expr) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Call>) {
          int deepest = 0;
          for (const Expr& arg : node.args) deepest = std::max(deepest, CallChainLength(arg));
          return deepest + 1;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return std::max(CallChainLength(*node.lhs), CallChainLength(*node.rhs));
        } else if constexpr (std::is_same_v<T, Not> || std::is_same_v<T, Cast>) {
          return CallChainLength(*node.operand);
        } else if constexpr (std::is_same_v<T, DivGuard>) {
          return CallChainLength(*node.divisor);
        } else {
          return 0;
        }
      },
      expr.node);
}

}  // namespace solgen
