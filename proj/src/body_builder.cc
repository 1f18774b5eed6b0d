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

#include <algorithm>
#include <array>
#include <stdexcept>

namespace solgen {
namespace {

constexpr std::array<std::string_view, 7> kUintPool = {
    "115792089237316195423570985008687907853269984665640564039457584007913129639935",
    "57896044618658097711785492504343953926634992332820282019728792003956564819968",
    "6277101735386680763835789423207666416102355444464034512895",
    "1461501637330902918203684832716283019655932542975",
    "340282366920938463463374607431768211456",
    "18446744073709551615",
    "4294967296",
};
constexpr std::array<std::string_view, 7> kIntPool = {
    "57896044618658097711785492504343953926634992332820282019728792003956564819967",
    "-57896044618658097711785492504343953926634992332820282019728792003956564819968",
    "-170141183460469231731687303715884105728",
    "340282366920938463463374607431768211455",
    "-18446744073709551616",
    "4294967295",
    "-1",
};

struct VarSym {
  std::string name;
  Type type;
};

Type RandomIntType(Prng& prng) { return prng.Chance(0.5) ? Type::kInt256 : Type::kUint256; }

Expr Coerce(Expr e, Type from, Type to) {
  if (from == to) return e;
  return Cast{to, std::move(e)};
}

Expr Literal(GenContext& ctx, Type type) { return MakeLit(type, RandomLiteral(ctx.prng, type)); }

std::vector<VarSym> ReadableVars(const GenContext& ctx) {
  std::vector<VarSym> out;
  if (ctx.frame.has_locals()) {
    for (const LocalSym& sym : ctx.VisibleLocals()) out.push_back({sym.name, sym.type});
  }
  if (ctx.frame.reads_state()) {
    for (const StateVar& sv : ctx.program.state_vars) out.push_back({sv.name, sv.type});
  }
  return out;
}

std::vector<VarSym> WritableVars(const GenContext& ctx) {
  std::vector<VarSym> out;
  if (ctx.frame.has_locals()) {
    for (const LocalSym& sym : ctx.VisibleLocals()) {
      if (!sym.counter) out.push_back({sym.name, sym.type});
    }
  }
  if (ctx.frame.writes_state()) {
    for (const StateVar& sv : ctx.program.state_vars) {
      if (!sv.is_constant) out.push_back({sv.name, sv.type});
    }
  }
  return out;
}

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

uint64_t FunctionCost(const GenContext& ctx, const std::string& name) {
  for (const auto& [fn, cost] : ctx.function_costs) {
    if (fn == name) return cost;
  }
  return 0;
}

std::vector<std::string> SelectorTargets(const GenContext& ctx) {
  std::vector<std::string> out;
  if (ctx.frame.in_modifier || !ctx.frame.reads_state()) return out;
  for (const FunctionDecl& fn : ctx.program.functions) {
    if (fn.IsExternallyCallable()) out.push_back(fn.name);
  }
  if (ctx.frame.externally_callable) out.push_back(ctx.frame.function_name);
  return out;
}

std::vector<const FunctionDecl*> CallCandidates(const GenContext& ctx) {
  std::vector<const FunctionDecl*> out;
  if (!ctx.frame.has_locals()) return out;
  if (ctx.call_nesting_depth > static_cast<int>(ctx.cfg.max_call_nesting)) return out;
  for (const FunctionDecl& fn : ctx.program.functions) {
    if (fn.mutability != Mutability::kPure || !fn.returns ||
        fn.visibility == Visibility::kExternal) {
      continue;
    }
    if (FunctionCost(ctx, fn.name) * ctx.loop_multiplier > kCallCostBudget) continue;
    out.push_back(&fn);
  }
  return out;
}

int StatementDepth(GenContext& ctx) {
  if (ctx.cfg.max_expr_depth == 0) return 0;
  return static_cast<int>(ctx.prng.NextInRange(1, ctx.cfg.max_expr_depth));
}

uint64_t NestedNodes(const GenContext& ctx) {
  return std::max<uint64_t>(1, ctx.cfg.max_nodes_per_block / 4);
}

// Count in [1, max] skewed towards small values: the lesser of two draws.
uint64_t SkewedCount(Prng& prng, uint64_t max) {
  uint64_t a = prng.NextInRange(1, max);
  uint64_t b = prng.NextInRange(1, max);
  return std::min(a, b);
}

bool LocalRoom(const GenContext& ctx) {
  return ctx.LiveLocals() + ctx.yul.Live() < ctx.cfg.max_live_locals;
}

Expr Divisor(GenContext& ctx, Type type, int depth, const ExprOptions& opts) {
  ExprOptions pure_opts = opts;
  pure_opts.side_effects = false;
  Expr d = GenArithExpr(ctx, type, depth, pure_opts);
  if (IsLiteralOnly(d)) {
    if (d.Is<IntLit>() && !IsZeroLiteral(d.As<IntLit>().value)) return d;
    return MakeLit(type, ctx.prng.NextInRange(1, 16));
  }
  return DivGuard{std::move(d)};
}

Expr Relational(GenContext& ctx, int depth) {
  static constexpr BinaryOp kOps[] = {BinaryOp::kGt, BinaryOp::kLt, BinaryOp::kEq,
                                      BinaryOp::kNe};
  Type t = RandomIntType(ctx.prng);
  Expr lhs = GenArithExpr(ctx, t, depth);
  Expr rhs = GenArithExpr(ctx, t, depth);
  if (lhs.Is<IntLit>() && rhs.Is<IntLit>()) lhs = Cast{t, std::move(lhs)};
  Expr rel = Binary{kOps[ctx.prng.NextBounded(4)], std::move(lhs), std::move(rhs)};
  if (ctx.prng.Chance(0.15)) return Not{std::move(rel)};
  return rel;
}

std::optional<Stmt> DrawStatement(GenContext& ctx) {
  Weights weights = AvailableStmtWeights(ctx);
  for (;;) {
    bool any = std::any_of(weights.begin(), weights.end(),
                           [](const auto& kv) { return kv.second > 0; });
    if (!any) return std::nullopt;
    const std::string kind = PickWeighted(ctx.prng, weights);
    if (std::optional<Stmt> s = GenStatement(ctx, kind)) return s;
    weights[kind] = 0;
  }
}

// ---------------------------------------------------------------------------
// Inline assembly
// ---------------------------------------------------------------------------

std::vector<std::string> YulVisible(const GenContext& ctx, bool include_counters) {
  std::vector<std::string> out;
  for (const auto& scope : ctx.yul.scopes) {
    for (const std::string& name : scope) {
      if (include_counters || !ctx.yul.counters.count(name)) out.push_back(name);
    }
  }
  return out;
}

std::vector<std::string> SolidityLocalsForYul(const GenContext& ctx, bool writable) {
  std::vector<std::string> out;
  if (ctx.yul.in_function) return out;
  for (const LocalSym& sym : ctx.VisibleLocals()) {
    if (!writable || !sym.counter) out.push_back(sym.name);
  }
  return out;
}

YulExpr SlotOf(GenContext& ctx, const StateVar& sv) {
  if (ctx.yul.in_function) return YLit(*ctx.program.StorageSlot(sv.name));
  return YSlot(sv.name);
}

YulExpr GenYulExpr(GenContext& ctx, int depth);

YulExpr GenYulExprOfKind(GenContext& ctx, const std::string& kind, int depth) {
  Prng& prng = ctx.prng;
  if (kind == "yul-ref") return YRef(Choose(prng, YulVisible(ctx, true)));
  if (kind == "sol-ref") return YRef(Choose(prng, SolidityLocalsForYul(ctx, false)));
  if (kind == "sload") {
    return YCall("sload", {SlotOf(ctx, *Choose(prng, WritableScalars(ctx.program)))});
  }
  if (kind == "mload") {
    const std::set<uint64_t>& written = ctx.yul.written.back();
    std::vector<uint64_t> words(written.begin(), written.end());
    return YCall("mload", {YLit(Choose(prng, words))});
  }
  if (kind == "binary") {
    static constexpr std::string_view kOps[] = {
        "add", "sub", "mul", "div", "sdiv", "mod", "smod", "and", "or", "xor",
        "lt",  "gt",  "slt", "sgt", "eq",   "shl", "shr", "sar", "byte", "signextend"};
    std::string op(kOps[prng.NextBounded(std::size(kOps))]);
    YulExpr a = GenYulExpr(ctx, depth - 1);
    YulExpr b = GenYulExpr(ctx, depth - 1);
    return YCall(op, {std::move(a), std::move(b)});
  }
  if (kind == "ternary") {
    std::string op = prng.Chance(0.5) ? "addmod" : "mulmod";
    YulExpr a = GenYulExpr(ctx, depth - 1);
    YulExpr b = GenYulExpr(ctx, depth - 1);
    YulExpr n = GenYulExpr(ctx, depth - 1);
    return YCall(op, {std::move(a), std::move(b), std::move(n)});
  }
  if (kind == "unary") {
    std::string op = prng.Chance(0.5) ? "iszero" : "not";
    return YCall(op, {GenYulExpr(ctx, depth - 1)});
  }
  if (kind == "call") {
    const auto& [name, arity] = Choose(prng, ctx.yul.value_functions);
    std::vector<YulExpr> args;
    for (size_t i = 0; i < arity; ++i) args.push_back(GenYulExpr(ctx, depth - 1));
    return YCall(name, std::move(args));
  }
  return YLit(prng.Chance(0.8) ? prng.NextBounded(256) : prng.Next());
}

YulExpr GenYulExpr(GenContext& ctx, int depth) {
  ctx.cost += ctx.loop_multiplier;
  Weights w = {{"literal", 3}};
  if (!YulVisible(ctx, true).empty()) w["yul-ref"] = 3;
  if (!SolidityLocalsForYul(ctx, false).empty()) {
    w["sol-ref"] = 6 * ctx.StrategyProbability(strategy::kYulSolvarRef);
  }
  if (!WritableScalars(ctx.program).empty()) w["sload"] = 2;
  if (!ctx.yul.written.back().empty()) w["mload"] = 1;
  if (depth > 0) {
    w["binary"] = 3;
    w["unary"] = 0.5;
    w["ternary"] = 0.3;
    if (!ctx.yul.value_functions.empty()) w["call"] = 1;
  }
  return GenYulExprOfKind(ctx, PickWeighted(ctx.prng, w), depth);
}

std::optional<YulStmt> GenYulStmt(GenContext& ctx, int depth);

YulBody GenYulBody(GenContext& ctx, int depth, uint64_t max_nodes) {
  YulBody body;
  uint64_t n = ctx.prng.NextInRange(1, std::max<uint64_t>(1, max_nodes));
  for (uint64_t i = 0; i < n; ++i) {
    if (std::optional<YulStmt> s = GenYulStmt(ctx, depth)) body.push_back(std::move(*s));
  }
  return body;
}

YulStmt GenYulFunction(GenContext& ctx) {
  Prng& prng = ctx.prng;
  std::string name = ctx.FreshYul("yf");
  size_t arity = prng.NextBounded(3);
  std::vector<std::string> params;
  for (size_t i = 0; i < arity; ++i) params.push_back(ctx.FreshYul("yp"));
  std::string ret = ctx.FreshYul("yp");

  auto saved_scopes = std::move(ctx.yul.scopes);
  auto saved_written = std::move(ctx.yul.written);
  auto saved_counters = std::move(ctx.yul.counters);
  ctx.yul.scopes = {params};
  ctx.yul.scopes.back().push_back(ret);
  ctx.yul.written = {{}};
  ctx.yul.counters.clear();
  ctx.yul.in_function = true;

  YulBody body;
  std::vector<const StateVar*> scalars = WritableScalars(ctx.program);
  if (ctx.frame.writes_state() && !scalars.empty() && prng.Chance(0.5)) {
    YulExpr value = params.empty() ? YLit(prng.NextBounded(256)) : YRef(Choose(prng, params));
    body.push_back(YEffect("sstore", {SlotOf(ctx, *Choose(prng, scalars)), std::move(value)}));
  }
  uint64_t extra = prng.NextBounded(3);
  for (uint64_t i = 0; i < extra; ++i) {
    if (std::optional<YulStmt> s = GenYulStmt(ctx, 1)) body.push_back(std::move(*s));
  }
  body.push_back(YulAssign{ret, GenYulExpr(ctx, 2)});

  ctx.yul.in_function = false;
  ctx.yul.scopes = std::move(saved_scopes);
  ctx.yul.written = std::move(saved_written);
  ctx.yul.counters = std::move(saved_counters);
  ctx.yul.value_functions.emplace_back(name, arity);
  return YulFnDef{name, std::move(params), {ret}, std::move(body)};
}

std::optional<YulStmt> GenYulStmt(GenContext& ctx, int depth) {
  Prng& prng = ctx.prng;
  ctx.cost += ctx.loop_multiplier;
  bool room = LocalRoom(ctx);
  std::vector<const StateVar*> scalars = WritableScalars(ctx.program);
  std::vector<std::string> sol_targets = SolidityLocalsForYul(ctx, true);
  std::vector<std::string> yul_targets = YulVisible(ctx, false);

  Weights w = {{"mstore", 2}};
  if (room) w["let"] = 3;
  if (!yul_targets.empty() || !sol_targets.empty()) w["assign"] = 2;
  if (ctx.frame.writes_state() && !scalars.empty()) w["sstore"] = 2;
  if (depth < 2) w["if"] = 1;
  if (depth < 2 && room) w["for"] = 1;
  if (depth == 0 && !ctx.yul.in_function) w["function"] = 1;
  const std::string kind = PickWeighted(prng, w);

  if (kind == "let") {
    YulExpr value = GenYulExpr(ctx, 2);
    std::string name = ctx.FreshYul("y");
    ctx.yul.scopes.back().push_back(name);
    return YulLet{name, std::move(value)};
  }
  if (kind == "assign") {
    bool use_sol = !sol_targets.empty() &&
                   (yul_targets.empty() ||
                    prng.Chance(ctx.StrategyProbability(strategy::kYulSolvarRef)));
    std::string target = use_sol ? Choose(prng, sol_targets) : Choose(prng, yul_targets);
    YulExpr value = GenYulExpr(ctx, 2);
    if (use_sol && prng.Chance(0.5)) value = YCall("add", {YRef(target), std::move(value)});
    return YulAssign{target, std::move(value)};
  }
  if (kind == "mstore") {
    uint64_t address = 32 * prng.NextBounded(2);
    YulExpr value = GenYulExpr(ctx, 2);
    ctx.yul.written.back().insert(address);
    return YEffect("mstore", {YLit(address), std::move(value)});
  }
  if (kind == "sstore") {
    YulExpr slot = SlotOf(ctx, *Choose(prng, scalars));
    return YEffect("sstore", {std::move(slot), GenYulExpr(ctx, 2)});
  }
  if (kind == "if") {
    YulExpr cond = GenYulExpr(ctx, 1);
    ctx.yul.scopes.emplace_back();
    ctx.yul.written.push_back(ctx.yul.written.back());
    YulBody body = GenYulBody(ctx, depth + 1, 3);
    ctx.yul.written.pop_back();
    ctx.yul.scopes.pop_back();
    return YulIf{std::move(cond), std::move(body)};
  }
  if (kind == "for") {
    std::string counter = ctx.FreshYul("yi");
    uint64_t bound = prng.NextInRange(ctx.cfg.loop_bound_range.lo, ctx.cfg.loop_bound_range.hi);
    uint64_t saved_multiplier = ctx.loop_multiplier;
    ctx.loop_multiplier *= bound;
    ctx.yul.scopes.push_back({counter});
    ctx.yul.counters.insert(counter);
    ctx.yul.written.push_back(ctx.yul.written.back());
    YulBody body = GenYulBody(ctx, depth + 1, 3);
    ctx.yul.written.pop_back();
    ctx.yul.counters.erase(counter);
    ctx.yul.scopes.pop_back();
    ctx.loop_multiplier = saved_multiplier;
    return YulFor{counter, bound, std::move(body)};
  }
  return GenYulFunction(ctx);
}

}  // namespace

// ---------------------------------------------------------------------------
// Literals and expressions
// ---------------------------------------------------------------------------

std::string RandomLiteral(Prng& prng, Type type) {
  uint64_t bucket = prng.NextBounded(8);
  if (bucket < 4) {
    uint64_t v = prng.NextBounded(17);
    if (type == Type::kInt256 && v != 0 && prng.Chance(0.3)) return "-" + std::to_string(v);
    return std::to_string(v);
  }
  if (bucket < 6) return std::to_string(prng.NextBounded(65536));
  const auto& pool = type == Type::kInt256 ? kIntPool : kUintPool;
  return std::string(pool[prng.NextBounded(pool.size())]);
}

Expr GenArithExpr(GenContext& ctx, Type target, int depth, const ExprOptions& opts) {
  Prng& prng = ctx.prng;
  ctx.cost += ctx.loop_multiplier;
  const Weights& base = ctx.cfg.expr_weights;
  auto weight = [&](std::string_view k) {
    auto it = base.find(std::string(k));
    return it == base.end() ? 0.0 : it->second;
  };

  std::vector<VarSym> readable = ReadableVars(ctx);
  std::vector<VarSym> writable = opts.side_effects ? WritableVars(ctx) : std::vector<VarSym>{};
  std::vector<std::string> arrays;
  if (ctx.frame.reads_state()) {
    for (const DynArray& arr : ctx.program.arrays) {
      if (arr.name != opts.exclude_array) arrays.push_back(arr.name);
    }
  }
  std::vector<std::string> selectors = SelectorTargets(ctx);
  bool can_call = depth > 0 && !CallCandidates(ctx).empty();

  Weights w;
  w[std::string(expr_kind::kLiteral)] = weight(expr_kind::kLiteral);
  if (!readable.empty()) w[std::string(expr_kind::kVariable)] = weight(expr_kind::kVariable);
  if (depth > 0) w[std::string(expr_kind::kBinary)] = weight(expr_kind::kBinary);
  if (!arrays.empty()) w[std::string(expr_kind::kIndex)] = weight(expr_kind::kIndex);
  if (can_call) w[std::string(expr_kind::kCall)] = weight(expr_kind::kCall);
  if (!writable.empty()) w[std::string(expr_kind::kIncDec)] = weight(expr_kind::kIncDec);
  if (!selectors.empty()) {
    auto it = ctx.active_weights().find(std::string(strategy::kSelectorAccess));
    if (it != ctx.active_weights().end()) w[std::string(strategy::kSelectorAccess)] = it->second;
  }
  bool any = std::any_of(w.begin(), w.end(), [](const auto& kv) { return kv.second > 0; });
  if (!any) return Literal(ctx, target);
  const std::string kind = PickWeighted(prng, w);

  if (kind == expr_kind::kVariable) {
    const VarSym& v = Choose(prng, readable);
    if (ctx.stmt_usage.Request(v.name, UsageRequest::kPlain) ==
        UsageDecision::kSubstituteConstant) {
      return Literal(ctx, target);
    }
    return Coerce(VarRef{v.name, v.type}, v.type, target);
  }
  if (kind == expr_kind::kIncDec) {
    const VarSym& v = Choose(prng, writable);
    if (ctx.stmt_usage.Request(v.name, UsageRequest::kIncDec) !=
        UsageDecision::kAllowIncDec) {
      return Literal(ctx, target);
    }
    return Coerce(IncDec{v.name, v.type, prng.Chance(0.5)}, v.type, target);
  }
  if (kind == expr_kind::kBinary) {
    static constexpr BinaryOp kOps[] = {BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul,
                                        BinaryOp::kDiv, BinaryOp::kMod};
    BinaryOp op = kOps[prng.NextBounded(std::size(kOps))];
    Expr lhs = GenArithExpr(ctx, target, depth - 1, opts);
    Expr rhs = IsDivision(op) ? Divisor(ctx, target, depth - 1, opts)
                              : GenArithExpr(ctx, target, depth - 1, opts);
    if (lhs.Is<IntLit>() && rhs.Is<IntLit>()) lhs = Cast{target, std::move(lhs)};
    return Binary{op, std::move(lhs), std::move(rhs)};
  }
  if (kind == expr_kind::kIndex) {
    uint64_t k = prng.NextBounded(ctx.cfg.array_len_range.hi + 3);
    return Coerce(Index{Choose(prng, arrays), k}, Type::kUint256, target);
  }
  if (kind == expr_kind::kCall) {
    if (std::optional<Expr> call = GenCallExpr(ctx, target, depth, opts)) return std::move(*call);
    return Literal(ctx, target);
  }
  if (kind == strategy::kSelectorAccess) {
    return Coerce(SelectorAccess{Choose(prng, selectors)}, Type::kUint256, target);
  }
  return Literal(ctx, target);
}

std::optional<Expr> GenCallExpr(GenContext& ctx, Type target, int depth,
                                const ExprOptions& opts) {
  std::vector<const FunctionDecl*> candidates = CallCandidates(ctx);
  if (candidates.empty()) return std::nullopt;
  const FunctionDecl& callee = *Choose(ctx.prng, candidates);
  ctx.call_nesting_depth++;
  Call call{callee.name, callee.returns->type, {}};
  ExprOptions args_opts = opts;
  args_opts.side_effects = false;
  for (const Param& param : callee.params) {
    call.args.push_back(GenArithExpr(ctx, param.type, std::max(depth - 1, 0), args_opts));
  }
  ctx.call_nesting_depth--;
  ctx.cost += ctx.loop_multiplier * FunctionCost(ctx, callee.name);
  return Coerce(std::move(call), callee.returns->type, target);
}

Expr GenCondition(GenContext& ctx, int depth) {
  int operand_depth = std::max(depth - 1, 0);
  uint64_t n = ctx.prng.Chance(0.5) ? 1 : ctx.prng.NextInRange(2, 3);
  Expr acc = Relational(ctx, operand_depth);
  for (uint64_t i = 1; i < n; ++i) {
    BinaryOp op = ctx.prng.Chance(0.5) ? BinaryOp::kAnd : BinaryOp::kOr;
    acc = Binary{op, std::move(acc), Relational(ctx, operand_depth)};
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

Weights AvailableStmtWeights(const GenContext& ctx) {
  Weights w = ctx.cfg.stmt_weights;
  const Frame& f = ctx.frame;
  bool room = LocalRoom(ctx);
  bool nest = ctx.cond_loop_depth < static_cast<int>(ctx.cfg.max_cond_loop_depth);
  auto set_if = [&w](std::string_view kind, bool ok) {
    if (!ok) w[std::string(kind)] = 0;
  };
  set_if(stmt_kind::kLocalDecl, f.has_locals() && room);
  set_if(stmt_kind::kAssignment, !WritableVars(ctx).empty());
  set_if(stmt_kind::kConditional, nest);
  set_if(stmt_kind::kLoop, f.has_locals() && nest && room);
  set_if(stmt_kind::kYulBlock, !f.in_modifier && !f.pure() && !ctx.yul.active);
  set_if(stmt_kind::kArrayOp, f.writes_state() && !ctx.program.arrays.empty());
  return w;
}

std::optional<Stmt> GenStatement(GenContext& ctx, std::string_view kind) {
  ctx.cost += ctx.loop_multiplier;
  if (kind == stmt_kind::kLocalDecl) return GenLocalDecl(ctx);
  if (kind == stmt_kind::kAssignment) return GenAssignment(ctx);
  if (kind == stmt_kind::kConditional) return GenConditional(ctx);
  if (kind == stmt_kind::kLoop) return GenLoop(ctx);
  if (kind == stmt_kind::kArrayOp) return GenArrayOp(ctx);
  if (kind == stmt_kind::kYulBlock) {
    if (ctx.frame.in_modifier || ctx.frame.pure() || ctx.yul.active) return std::nullopt;
    return GenYulBlock(ctx);
  }
  return std::nullopt;
}

Block GenBlock(GenContext& ctx, uint64_t max_nodes) {
  Block block;
  ctx.EnterScope();
  ctx.DistortRegion();
  uint64_t n = max_nodes == 0 ? 0 : SkewedCount(ctx.prng, max_nodes);
  for (uint64_t i = 0; i < n; ++i) {
    std::optional<Stmt> s = DrawStatement(ctx);
    if (!s) break;
    block.push_back(std::move(*s));
  }
  ctx.RestoreRegion();
  ctx.ExitScope();
  return block;
}

std::optional<Stmt> GenLocalDecl(GenContext& ctx) {
  if (!ctx.frame.has_locals() || !LocalRoom(ctx)) return std::nullopt;
  Type type = RandomIntType(ctx.prng);
  ctx.stmt_usage.Reset();
  Expr init = GenArithExpr(ctx, type, StatementDepth(ctx));
  std::string name = ctx.FreshLocal();
  bool last_slot = ctx.LiveLocals() + ctx.yul.Live() + 1 == ctx.cfg.max_live_locals;
  if (!last_slot) {
    ctx.DeclareLocal(name, type);
    return LocalDecl{name, type, std::move(init)};
  }
  // The final free slot: scope the local to a block so it dies immediately.
  ctx.EnterScope();
  ctx.DeclareLocal(name, type);
  BareBlock block;
  block.body.push_back(LocalDecl{name, type, std::move(init)});
  if (std::optional<Stmt> use = GenAssignment(ctx)) block.body.push_back(std::move(*use));
  ctx.ExitScope();
  return block;
}

std::optional<Stmt> GenAssignment(GenContext& ctx) {
  std::vector<VarSym> targets = WritableVars(ctx);
  if (targets.empty()) return std::nullopt;
  Prng& prng = ctx.prng;
  const VarSym target = Choose(prng, targets);
  static constexpr AssignOp kOps[] = {AssignOp::kAssign,    AssignOp::kAssign,
                                      AssignOp::kAssign,    AssignOp::kAddAssign,
                                      AssignOp::kSubAssign, AssignOp::kMulAssign};
  AssignOp op = kOps[prng.NextBounded(std::size(kOps))];
  ctx.stmt_usage.Reset();
  ctx.stmt_usage.Request(target.name, UsageRequest::kPlain);
  Expr value = GenArithExpr(ctx, target.type, StatementDepth(ctx));
  return Assign{target.name, target.type, op, std::move(value)};
}

std::optional<Stmt> GenConditional(GenContext& ctx) {
  if (ctx.cond_loop_depth >= static_cast<int>(ctx.cfg.max_cond_loop_depth)) return std::nullopt;
  ctx.stmt_usage.Reset();
  Expr cond = GenCondition(ctx, StatementDepth(ctx));
  ctx.cond_loop_depth++;
  If s{std::move(cond), GenBlock(ctx, NestedNodes(ctx)), std::nullopt};
  if (ctx.prng.Chance(ctx.cfg.else_probability)) s.else_block = GenBlock(ctx, NestedNodes(ctx));
  ctx.cond_loop_depth--;
  return s;
}

std::optional<Stmt> GenLoop(GenContext& ctx) {
  if (!ctx.frame.has_locals() || !LocalRoom(ctx) ||
      ctx.cond_loop_depth >= static_cast<int>(ctx.cfg.max_cond_loop_depth)) {
    return std::nullopt;
  }
  Prng& prng = ctx.prng;
  ForLoop loop;
  loop.form = prng.Chance(0.5) ? LoopForm::kInitInHeader : LoopForm::kInitBeforeLoop;
  loop.counter = "i" + std::to_string(ctx.loop_depth);
  loop.bound = prng.NextInRange(ctx.cfg.loop_bound_range.lo, ctx.cfg.loop_bound_range.hi);

  uint64_t saved_multiplier = ctx.loop_multiplier;
  ctx.loop_multiplier *= loop.bound;
  ctx.cond_loop_depth++;
  ctx.loop_depth++;
  ctx.EnterScope();
  ctx.DeclareLocal(loop.counter, Type::kUint256, /*counter=*/true);
  loop.body = GenBlock(ctx, NestedNodes(ctx));
  ctx.ExitScope();
  ctx.loop_depth--;
  ctx.cond_loop_depth--;
  ctx.loop_multiplier = saved_multiplier;
  return loop;
}

std::optional<Stmt> GenArrayOp(GenContext& ctx) {
  if (!ctx.frame.writes_state() || ctx.program.arrays.empty()) return std::nullopt;
  Prng& prng = ctx.prng;
  ArrayOp op;
  op.array = Choose(prng, ctx.program.arrays).name;
  switch (prng.NextBounded(3)) {
    case 0: {
      op.kind = ArrayOpKind::kPush;
      ctx.stmt_usage.Reset();
      ExprOptions opts;
      opts.exclude_array = op.array;
      op.value = GenArithExpr(ctx, Type::kUint256, StatementDepth(ctx), opts);
      break;
    }
    case 1:
      op.kind = ArrayOpKind::kGuardedPop;
      break;
    default:
      op.kind = ArrayOpKind::kGuardedIndexUpdate;
      op.index = prng.NextBounded(ctx.cfg.array_len_range.hi + 3);
      op.increment = prng.Chance(0.5);
      break;
  }
  return op;
}

Stmt GenYulBlock(GenContext& ctx) {
  Prng& prng = ctx.prng;
  ctx.yul = YulState{};
  ctx.yul.active = true;
  ctx.yul.scopes = {{}};
  ctx.yul.written = {{}};

  uint64_t n = prng.NextInRange(ctx.cfg.yul_nodes_range.lo, ctx.cfg.yul_nodes_range.hi);
  bool store_return = ctx.frame.writes_state() && !WritableScalars(ctx.program).empty() &&
                      prng.Chance(ctx.StrategyProbability(strategy::kStorageWriteReturn));
  bool keccak = prng.Chance(ctx.StrategyProbability(strategy::kKeccakPair));
  uint64_t store_return_at = store_return ? prng.NextBounded(n + 1) : UINT64_MAX;
  uint64_t keccak_at = keccak ? prng.NextBounded(n + 1) : UINT64_MAX;

  YulBlock block;
  auto append = [&block](YulBody body) {
    for (YulStmt& s : body) block.body.push_back(std::move(s));
  };
  for (uint64_t i = 0; i <= n; ++i) {
    if (i == keccak_at) append(InjectKeccakPair(ctx).body);
    if (i == store_return_at) append(InjectStorageWriteReturn(ctx).body);
    if (i == n) break;
    if (std::optional<YulStmt> s = GenYulStmt(ctx, 0)) block.body.push_back(std::move(*s));
  }
  ctx.yul = YulState{};
  return block;
}

// ---------------------------------------------------------------------------
// Functions
// ---------------------------------------------------------------------------

FunctionDecl GenFunctionFrame(GenContext& ctx) {
  Prng& prng = ctx.prng;
  const GenConfig& cfg = ctx.cfg;
  FunctionDecl fn;
  fn.name = "f" + std::to_string(ctx.program.functions.size());

  const std::string& vis = PickWeighted(prng, cfg.visibility_weights);
  fn.visibility = vis == "external"   ? Visibility::kExternal
                  : vis == "internal" ? Visibility::kInternal
                                      : Visibility::kPublic;
  const std::string& mut = PickWeighted(prng, cfg.mutability_weights);
  fn.mutability = mut == "view"      ? Mutability::kView
                  : mut == "pure"    ? Mutability::kPure
                  : mut == "payable" ? Mutability::kPayable
                                     : Mutability::kDefault;
  if (fn.mutability == Mutability::kPayable && fn.visibility == Visibility::kInternal) {
    fn.visibility = Visibility::kPublic;
  }
  uint64_t params = prng.NextInRange(cfg.param_count_range.lo, cfg.param_count_range.hi);
  for (uint64_t i = 0; i < params; ++i) {
    fn.params.push_back(Param{"p" + std::to_string(i), RandomIntType(prng)});
  }
  if (prng.Chance(cfg.return_probability)) fn.returns = Param{"res", RandomIntType(prng)};
  bool may_modify = fn.mutability == Mutability::kDefault ||
                    fn.mutability == Mutability::kPayable;
  if (may_modify && !ctx.program.modifiers.empty() && prng.Chance(cfg.modifier_probability)) {
    fn.modifiers.push_back(Choose(prng, ctx.program.modifiers).name);
  }
  return fn;
}

FunctionDecl FillFunction(GenContext& ctx, FunctionDecl fn) {
  ctx.ResetFunction();
  ctx.frame = Frame{};
  ctx.frame.function_index = ctx.program.functions.size();
  ctx.frame.function_name = fn.name;
  ctx.frame.mutability = fn.mutability;
  ctx.frame.externally_callable = fn.IsExternallyCallable();

  ctx.EnterScope();
  for (const Param& p : fn.params) ctx.DeclareLocal(p.name, p.type);
  if (fn.returns) ctx.DeclareLocal(fn.returns->name, fn.returns->type);

  fn.body.clear();
  uint64_t blocks = ctx.cfg.max_blocks_per_function == 0
                        ? 0
                        : SkewedCount(ctx.prng, ctx.cfg.max_blocks_per_function);
  for (uint64_t b = 0; b < blocks; ++b) {
    Block block = GenBlock(ctx, ctx.cfg.max_nodes_per_block);
    if (!block.empty()) fn.body.push_back(Unchecked{std::move(block)});
  }
  if (fn.returns) {
    ctx.stmt_usage.Reset();
    ctx.stmt_usage.Request(fn.returns->name, UsageRequest::kPlain);
    Expr value = GenArithExpr(ctx, fn.returns->type, StatementDepth(ctx));
    Block ret;
    ret.push_back(Assign{fn.returns->name, fn.returns->type, AssignOp::kAssign, std::move(value)});
    fn.body.push_back(Unchecked{std::move(ret)});
  }
  AppendStateLog(fn, ctx.program);
  ctx.ExitScope();
  ctx.function_costs.emplace_back(fn.name, ctx.cost);
  return fn;
}

void AppendStateLog(FunctionDecl& fn, const Program& program) {
  if (fn.IsReadOnly()) return;
  uint64_t id = 0;
  for (const StateVar& sv : program.state_vars) {
    std::string event(sv.type == Type::kInt256 ? kLogSigned : kLogUnsigned);
    fn.body.push_back(EmitLog{event, {MakeLit(Type::kUint256, id++), VarRef{sv.name, sv.type}}});
  }
  for (const DynArray& arr : program.arrays) {
    fn.body.push_back(ArrayDump{arr.name, id++, 8});
  }
}

}  // namespace solgen
