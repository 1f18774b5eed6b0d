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
#include "solgen/policies.h"

#include <algorithm>
#include <stdexcept>

#include "solgen/context.h"
#include "solgen/emitter.h"

namespace solgen {

std::string_view UsageName(Usage usage) {
  switch (usage) {
    case Usage::kUnused: return "unused";
    case Usage::kUsedPlain: return "used_plain";
    case Usage::kUsedIncDec: return "used_incdec";
  }
  return "?";
}

std::string_view UsageDecisionName(UsageDecision decision) {
  switch (decision) {
    case UsageDecision::kAllowPlain: return "allow_plain";
    case UsageDecision::kAllowIncDec: return "allow_incdec";
    case UsageDecision::kSubstituteConstant: return "substitute_constant";
  }
  return "?";
}

UsageTransition UsageGate(Usage state, UsageRequest request) {
  switch (state) {
    case Usage::kUnused:
      return request == UsageRequest::kPlain
                 ? UsageTransition{UsageDecision::kAllowPlain, Usage::kUsedPlain}
                 : UsageTransition{UsageDecision::kAllowIncDec, Usage::kUsedIncDec};
    case Usage::kUsedPlain:
      return request == UsageRequest::kPlain
                 ? UsageTransition{UsageDecision::kAllowPlain, Usage::kUsedPlain}
                 : UsageTransition{UsageDecision::kSubstituteConstant, Usage::kUsedPlain};
    case Usage::kUsedIncDec:
      return {UsageDecision::kSubstituteConstant, Usage::kUsedIncDec};
  }
  throw std::logic_error("UsageGate: bad state");
}

Usage UsageState::Get(const std::string& var) const {
  auto it = states_.find(var);
  return it == states_.end() ? Usage::kUnused : it->second;
}

UsageDecision UsageState::Request(const std::string& var, UsageRequest request) {
  UsageTransition t = UsageGate(Get(var), request);
  states_[var] = t.next;
  return t.decision;
}

PlaceholderDecision PlaceholderGate(int& counter) {
  if (counter == 0) {
    counter = 1;
    return PlaceholderDecision::kEmit;
  }
  return PlaceholderDecision::kRedraw;
}

std::string_view PayloadKindName(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::kKeccakPair: return strategy::kKeccakPair;
    case PayloadKind::kStorageWriteReturn: return strategy::kStorageWriteReturn;
    case PayloadKind::kYulSolvarRef: return strategy::kYulSolvarRef;
    case PayloadKind::kSelectorAccess: return strategy::kSelectorAccess;
  }
  return "?";
}

bool IsCollisionPronePair(uint64_t l1, uint64_t l2) {
  return l1 != l2 && (l1 + 31) / 32 == (l2 + 31) / 32;
}

namespace {

std::vector<const StateVar*> WritableScalars(const Program& program) {
  std::vector<const StateVar*> out;
  for (const StateVar& sv : program.state_vars) {
    if (!sv.is_constant) out.push_back(&sv);
  }
  return out;
}

template <typename T>
const T& Choose(Prng& prng, const std::vector<T>& items) {
  return items[prng.NextBounded(items.size())];
}

YulExpr Keccak(uint64_t address, uint64_t length) {
  return YCall("keccak256", {YLit(address), YLit(length)});
}

}  // namespace

StrategyPayload InjectKeccakPair(GenContext& ctx) {
  if (!ctx.yul.active) throw std::logic_error("InjectKeccakPair outside assembly");
  Prng& prng = ctx.prng;
  StrategyPayload p;
  p.kind = PayloadKind::kKeccakPair;
  p.address = 0;
  p.collision_prone = prng.Chance(ctx.cfg.keccak_collision_probability);
  uint64_t words = prng.NextInRange(1, 2);
  p.length_a = 32 * words;
  p.length_b = p.collision_prone ? 32 * (words - 1) + prng.NextInRange(1, 31) : p.length_a;

  // Prime every scratch word the hashes read.
  for (uint64_t word = 0; word < words; ++word) {
    p.body.push_back(YEffect("mstore", {YLit(32 * word), YLit(prng.NextBounded(256))}));
    ctx.yul.written.back().insert(32 * word);
  }

  const Program& program = ctx.program;
  std::vector<const StateVar*> scalars = WritableScalars(program);
  bool can_store = ctx.frame.writes_state() && !scalars.empty() && !ctx.yul.in_function;

  std::vector<std::string> locals;
  if (!ctx.yul.in_function) {
    for (const LocalSym& sym : ctx.VisibleLocals()) {
      if (!sym.counter && IsInteger(sym.type)) locals.push_back(sym.name);
    }
  }
  if (locals.size() >= 2 && prng.Chance(0.5)) {
    size_t a = prng.NextBounded(locals.size());
    size_t b = (a + 1 + prng.NextBounded(locals.size() - 1)) % locals.size();
    p.body.push_back(YulAssign{locals[a], Keccak(p.address, p.length_a)});
    p.body.push_back(YulAssign{locals[b], Keccak(p.address, p.length_b)});
    return p;
  }
  bool room = ctx.LiveLocals() + ctx.yul.Live() + 2 <= ctx.cfg.max_live_locals;
  if (room) {
    std::string ya = ctx.FreshYul("y");
    std::string yb = ctx.FreshYul("y");
    p.body.push_back(YulLet{ya, Keccak(p.address, p.length_a)});
    p.body.push_back(YulLet{yb, Keccak(p.address, p.length_b)});
    ctx.yul.scopes.back().push_back(ya);
    ctx.yul.scopes.back().push_back(yb);
    if (can_store) {
      p.body.push_back(YEffect("sstore", {YSlot(Choose(prng, scalars)->name), YRef(ya)}));
      p.body.push_back(YEffect("sstore", {YSlot(Choose(prng, scalars)->name), YRef(yb)}));
    } else {
      p.body.push_back(YEffect("mstore", {YLit(0), YCall("eq", {YRef(ya), YRef(yb)})}));
    }
    return p;
  }
  if (can_store) {
    p.body.push_back(
        YEffect("sstore", {YSlot(Choose(prng, scalars)->name), Keccak(p.address, p.length_a)}));
    p.body.push_back(
        YEffect("sstore", {YSlot(Choose(prng, scalars)->name), Keccak(p.address, p.length_b)}));
  } else {
    p.body.push_back(YEffect(
        "mstore", {YLit(0), YCall("eq", {Keccak(p.address, p.length_a),
                                         Keccak(p.address, p.length_b)})}));
  }
  return p;
}

StrategyPayload InjectStorageWriteReturn(GenContext& ctx) {
  if (!ctx.yul.active) throw std::logic_error("InjectStorageWriteReturn outside assembly");
  std::vector<const StateVar*> scalars = WritableScalars(ctx.program);
  if (scalars.empty() || !ctx.frame.writes_state()) {
    throw std::logic_error("InjectStorageWriteReturn needs a writable scalar");
  }
  Prng& prng = ctx.prng;
  StrategyPayload p;
  p.kind = PayloadKind::kStorageWriteReturn;
  p.slot = *ctx.program.StorageSlot(Choose(prng, scalars)->name);
  p.value = prng.NextInRange(1, 1000);
  p.use_stop = prng.Chance(0.5);
  p.overwrite = prng.Chance(0.5);

  std::string fn = ctx.FreshYul("yr");
  p.body.push_back(YEffect("sstore", {YLit(p.slot), YLit(p.value)}));
  YulFnDef def{fn, {}, {}, {}};
  if (p.use_stop) {
    def.body.push_back(YEffect("stop"));
  } else {
    def.body.push_back(YEffect("return", {YLit(0), YLit(0)}));
  }
  p.body.push_back(std::move(def));
  ctx.yul.function_arity.emplace_back(fn, 0);

  YulExpr cond = YLit(0);
  switch (prng.NextBounded(3)) {
    case 0: cond = YCall("eq", {YCall("sload", {YLit(p.slot)}), YLit(p.value)}); break;
    case 1: cond = YCall("lt", {YCall("sload", {YLit(p.slot)}), YLit(p.value)}); break;
    default: cond = YLit(prng.NextBounded(2)); break;
  }
  p.body.push_back(YulIf{std::move(cond), {YEffect(fn)}});
  if (p.overwrite) {
    p.body.push_back(YEffect("sstore", {YLit(p.slot), YLit(prng.NextInRange(1, 1000))}));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Undefined-behaviour screen
// ---------------------------------------------------------------------------

namespace {

class UbScreener {
 public:
  explicit UbScreener(const Program& program) : p_(program) {}

  std::vector<Violation> Run() {
    for (size_t i = 0; i < p_.modifiers.size(); ++i) {
      Walk(p_.modifiers[i].body, "modifiers[" + std::to_string(i) + "].body");
    }
    for (size_t i = 0; i < p_.functions.size(); ++i) {
      Walk(p_.functions[i].body, "functions[" + std::to_string(i) + "].body");
    }
    return std::move(out_);
  }

 private:
  void Add(std::string_view rule, const std::string& path, std::string fragment) {
    out_.push_back(Violation{std::string(rule), path, std::move(fragment)});
  }

  static std::string FirstLine(const std::string& text) {
    size_t start = text.find_first_not_of(' ');
    if (start == std::string::npos) return "";
    return text.substr(start, text.find('\n', start) - start);
  }

  bool HasSideEffects(const Expr& e) const {
    if (e.Is<IncDec>() || e.Is<PushExpr>()) return true;
    if (e.Is<Binary>()) {
      return HasSideEffects(*e.As<Binary>().lhs) || HasSideEffects(*e.As<Binary>().rhs);
    }
    if (e.Is<Not>()) return HasSideEffects(*e.As<Not>().operand);
    if (e.Is<Cast>()) return HasSideEffects(*e.As<Cast>().operand);
    if (e.Is<DivGuard>()) return HasSideEffects(*e.As<DivGuard>().divisor);
    if (e.Is<Call>()) {
      const Call& c = e.As<Call>();
      const FunctionDecl* callee = p_.FindFunction(c.callee);
      if (!callee || callee->mutability != Mutability::kPure) return true;
      return std::any_of(c.args.begin(), c.args.end(),
                         [this](const Expr& a) { return HasSideEffects(a); });
    }
    return false;
  }

  // Per-statement array growth and access bookkeeping.
  struct ArrayUse {
    int pushes = 0;
    int other = 0;
  };

  void ScanExpr(const Expr& e, std::map<std::string, ArrayUse>& arrays,
                const std::string& path) {
    if (e.Is<PushExpr>()) {
      arrays[e.As<PushExpr>().array].pushes++;
    } else if (e.Is<Index>()) {
      arrays[e.As<Index>().array].other++;
    } else if (e.Is<Binary>()) {
      ScanExpr(*e.As<Binary>().lhs, arrays, path);
      ScanExpr(*e.As<Binary>().rhs, arrays, path);
    } else if (e.Is<Not>()) {
      ScanExpr(*e.As<Not>().operand, arrays, path);
    } else if (e.Is<Cast>()) {
      ScanExpr(*e.As<Cast>().operand, arrays, path);
    } else if (e.Is<DivGuard>()) {
      ScanExpr(*e.As<DivGuard>().divisor, arrays, path);
    } else if (e.Is<Call>()) {
      for (const Expr& arg : e.As<Call>().args) {
        if (HasSideEffects(arg)) {
          Add(ub_rule::kArgumentSideEffect, path, EmitExpr(e));
        }
        ScanExpr(arg, arrays, path);
      }
    }
  }

  void CheckArrays(const std::map<std::string, ArrayUse>& arrays, const std::string& path,
                   const std::string& fragment) {
    for (const auto& [name, use] : arrays) {
      if (use.pushes > 1 || (use.pushes == 1 && use.other > 0)) {
        Add(ub_rule::kArrayGrowth, path, fragment);
      }
    }
  }

  void Walk(const Block& block, const std::string& path) {
    for (size_t i = 0; i < block.size(); ++i) {
      WalkStmt(block[i], path + "[" + std::to_string(i) + "]");
    }
  }

  void WalkStmt(const Stmt& stmt, const std::string& path) {
    std::string fragment = FirstLine(EmitStmt(stmt));
    std::map<std::string, ArrayUse> arrays;
    if (stmt.Is<LocalDecl>()) {
      ScanExpr(stmt.As<LocalDecl>().init, arrays, path);
    } else if (stmt.Is<Assign>()) {
      ScanExpr(stmt.As<Assign>().value, arrays, path);
    } else if (stmt.Is<If>()) {
      const If& s = stmt.As<If>();
      ScanExpr(s.cond, arrays, path);
      Walk(s.then_block, path + ".then");
      if (s.else_block) Walk(*s.else_block, path + ".else");
    } else if (stmt.Is<ForLoop>()) {
      Walk(stmt.As<ForLoop>().body, path + ".body");
    } else if (stmt.Is<Unchecked>()) {
      Walk(stmt.As<Unchecked>().body, path + ".unchecked");
    } else if (stmt.Is<BareBlock>()) {
      Walk(stmt.As<BareBlock>().body, path + ".block");
    } else if (stmt.Is<ArrayOp>()) {
      const ArrayOp& s = stmt.As<ArrayOp>();
      if (s.kind == ArrayOpKind::kPush) {
        arrays[s.array].pushes++;
        if (s.value) ScanExpr(*s.value, arrays, path);
      }
    } else if (stmt.Is<EmitLog>()) {
      for (const Expr& arg : stmt.As<EmitLog>().args) {
        if (HasSideEffects(arg)) Add(ub_rule::kArgumentSideEffect, path, fragment);
        ScanExpr(arg, arrays, path);
      }
    } else if (stmt.Is<YulBlock>()) {
      for (const YulStmt& y : stmt.As<YulBlock>().body) WalkYul(y, path + ".assembly");
    }
    CheckArrays(arrays, path, fragment);
  }

  bool IsArrayName(const std::string& name) const { return p_.FindArray(name) != nullptr; }

  void WalkYulExpr(const YulExpr& e, const std::string& path) {
    if (e.Is<YulRef>() && IsArrayName(e.As<YulRef>().name)) {
      Add(ub_rule::kArrayInAssembly, path, EmitYulExpr(e));
    } else if (e.Is<YulSlot>() && IsArrayName(e.As<YulSlot>().var)) {
      Add(ub_rule::kArrayInAssembly, path, EmitYulExpr(e));
    } else if (e.Is<YulCall>()) {
      WalkYulCall(e.As<YulCall>(), path);
    }
  }

  void WalkYulCall(const YulCall& call, const std::string& path) {
    if (call.function.find("verbatim") != std::string::npos) {
      Add(ub_rule::kVerbatim, path, EmitYulExpr(call));
    }
    if ((call.function == "sstore" || call.function == "sload") && !call.args.empty() &&
        call.args[0].Is<YulLit>()) {
      for (const DynArray& arr : p_.arrays) {
        if (std::to_string(*p_.StorageSlot(arr.name)) == call.args[0].As<YulLit>().value) {
          Add(ub_rule::kArrayInAssembly, path, EmitYulExpr(call));
        }
      }
    }
    for (const YulExpr& arg : call.args) WalkYulExpr(arg, path);
  }

  void WalkYul(const YulStmt& stmt, const std::string& path) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, YulLet> || std::is_same_v<T, YulAssign>) {
            if (IsArrayName(node.name)) {
              Add(ub_rule::kArrayInAssembly, path, node.name);
            }
            WalkYulExpr(node.value, path);
          } else if constexpr (std::is_same_v<T, YulExprStmt>) {
            WalkYulCall(node.call, path);
          } else if constexpr (std::is_same_v<T, YulIf>) {
            WalkYulExpr(node.cond, path);
            for (const YulStmt& s : node.body) WalkYul(s, path);
          } else if constexpr (std::is_same_v<T, YulFor>) {
            for (const YulStmt& s : node.body) WalkYul(s, path);
          } else if constexpr (std::is_same_v<T, YulFnDef>) {
            if (node.name.find("verbatim") != std::string::npos) {
              Add(ub_rule::kVerbatim, path, node.name);
            }
            for (const YulStmt& s : node.body) WalkYul(s, path);
          }
        },
        stmt.node);
  }

  const Program& p_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> UbScreen(const Program& program) {
  return UbScreener(program).Run();
}

}  // namespace solgen
