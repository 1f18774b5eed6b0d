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

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "solgen/validate.h"

namespace solgen {
namespace {

constexpr int kIndentWidth = 4;

// Binary nodes print parenthesized unless they sit directly under a
// statement, a call argument list or a cast.
std::string ExprText(const Expr& expr, bool top);

std::string JoinArgs(const std::vector<Expr>& args) {
  std::string out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += ExprText(args[i], true);
  }
  return out;
}

std::string ExprText(const Expr& expr, bool top) {
  struct Visitor {
    bool top;
    std::string operator()(const IntLit& e) { return e.value; }
    std::string operator()(const VarRef& e) { return e.name; }
    std::string operator()(const Binary& e) {
      std::string inner = ExprText(*e.lhs, false) + " " +
                          std::string(BinaryOpToken(e.op)) + " " +
                          ExprText(*e.rhs, false);
      return top ? inner : "(" + inner + ")";
    }
    std::string operator()(const Not& e) {
      std::string operand = ExprText(*e.operand, false);
      return "!" + operand;
    }
    std::string operator()(const Cast& e) {
      return std::string(TypeName(e.type)) + "(" + ExprText(*e.operand, true) + ")";
    }
    std::string operator()(const DivGuard& e) {
      std::string d = ExprText(*e.divisor, false);
      std::string one = ExprType(*e.divisor) == Type::kInt256 ? "int256(1)" : "1";
      return "(" + d + " == 0 ? " + one + " : " + d + ")";
    }
    std::string operator()(const IncDec& e) {
      return e.name + (e.increment ? "++" : "--");
    }
    std::string operator()(const Call& e) {
      return e.callee + "(" + JoinArgs(e.args) + ")";
    }
    std::string operator()(const Index& e) {
      std::string k = std::to_string(e.index);
      return "(" + e.array + ".length > " + k + " ? " + e.array + "[" + k +
             "] : 0)";
    }
    std::string operator()(const SelectorAccess& e) {
      return "uint256(uint32(this." + e.function + ".selector))";
    }
    std::string operator()(const PushExpr& e) { return e.array + ".push()"; }
  };
  return std::visit(Visitor{top}, expr.node);
}

class Printer {
 public:
  explicit Printer(int indent) : indent_(indent) {}

  std::string Take() { return std::move(out_); }

  void Line(std::string_view text) {
    out_.append(static_cast<size_t>(indent_ * kIndentWidth), ' ');
    out_ += text;
    out_ += '\n';
  }
  void Blank() { out_ += '\n'; }
  void Indent() { ++indent_; }
  void Dedent() { --indent_; }

  void BlockBody(const Block& block) {
    Indent();
    for (const Stmt& s : block) Statement(s);
    Dedent();
  }

  void Statement(const Stmt& stmt) {
    std::visit([this](const auto& node) { Print(node); }, stmt.node);
  }

  void YulStatement(const YulStmt& stmt) {
    std::visit([this](const auto& node) { PrintYul(node); }, stmt.node);
  }

  void Function(const FunctionDecl& fn) {
    std::string header = "function " + fn.name + "(";
    for (size_t i = 0; i < fn.params.size(); ++i) {
      if (i) header += ", ";
      header += std::string(TypeName(fn.params[i].type)) + " " + fn.params[i].name;
    }
    header += ") ";
    header += VisibilityName(fn.visibility);
    if (fn.mutability != Mutability::kDefault) {
      header += " ";
      header += MutabilityName(fn.mutability);
    }
    for (const std::string& m : fn.modifiers) header += " " + m;
    if (fn.returns) {
      header += " returns (" + std::string(TypeName(fn.returns->type)) + " " +
                fn.returns->name + ")";
    }
    header += " {";
    Line(header);
    BlockBody(fn.body);
    Line("}");
  }

  void Modifier(const ModifierDecl& mod) {
    Line("modifier " + mod.name + "() {");
    BlockBody(mod.body);
    Line("}");
  }

 private:
  void Print(const LocalDecl& s) {
    Line(std::string(TypeName(s.type)) + " " + s.name + " = " +
         ExprText(s.init, true) + ";");
  }
  void Print(const Assign& s) {
    Line(s.target + " " + std::string(AssignOpToken(s.op)) + " " +
         ExprText(s.value, true) + ";");
  }
  void Print(const If& s) {
    Line("if (" + ExprText(s.cond, true) + ") {");
    BlockBody(s.then_block);
    if (s.else_block) {
      Line("} else {");
      BlockBody(*s.else_block);
    }
    Line("}");
  }
  void Print(const ForLoop& s) {
    std::string bound = std::to_string(s.bound);
    if (s.form == LoopForm::kInitInHeader) {
      Line("for (uint256 " + s.counter + " = 0; " + s.counter + " < " + bound +
           "; " + s.counter + "++) {");
      BlockBody(s.body);
      Line("}");
      return;
    }
    Line("{");
    Indent();
    Line("uint256 " + s.counter + " = 0;");
    Line("for (; " + s.counter + " < " + bound + "; " + s.counter + "++) {");
    BlockBody(s.body);
    Line("}");
    Dedent();
    Line("}");
  }
  void Print(const YulBlock& s) {
    if (s.body.empty()) {
      Line("assembly {}");
      return;
    }
    Line("/// @solidity memory-safe-assembly");
    Line("assembly {");
    YulBody(s.body);
    Line("}");
  }
  void Print(const ArrayOp& s) {
    switch (s.kind) {
      case ArrayOpKind::kPush:
        Line(s.array + ".push(" + ExprText(*s.value, true) + ");");
        break;
      case ArrayOpKind::kGuardedPop:
        Line("if(" + s.array + ".length>0)" + s.array + ".pop();");
        break;
      case ArrayOpKind::kGuardedIndexUpdate: {
        std::string k = std::to_string(s.index);
        Line("if(" + s.array + ".length>" + k + ")" + s.array + "[" + k + "]" +
             (s.increment ? "++" : "--") + ";");
        break;
      }
    }
  }
  void Print(const Unchecked& s) {
    Line("unchecked {");
    BlockBody(s.body);
    Line("}");
  }
  void Print(const EmitLog& s) {
    Line("emit " + s.event + "(" + JoinArgs(s.args) + ");");
  }
  void Print(const ArrayDump& s) {
    std::string id = std::to_string(s.id);
    std::string limit = std::to_string(s.limit);
    Line("emit " + std::string(kLogUnsigned) + "(" + id + ", " + s.array +
         ".length);");
    Line("for (uint256 li = 0; li < " + s.array + ".length && li < " + limit +
         "; li++) {");
    Indent();
    Line("emit " + std::string(kLogUnsigned) + "(" + id + ", " + s.array +
         "[li]);");
    Dedent();
    Line("}");
  }
  void Print(const BareBlock& s) {
    Line("{");
    BlockBody(s.body);
    Line("}");
  }
  void Print(const Placeholder&) { Line("_;"); }

  void YulBody(const solgen::YulBody& body) {
    Indent();
    for (const YulStmt& s : body) YulStatement(s);
    Dedent();
  }
  void PrintYul(const YulLet& s) {
    Line("let " + s.name + " := " + EmitYulExpr(s.value));
  }
  void PrintYul(const YulAssign& s) {
    Line(s.name + " := " + EmitYulExpr(s.value));
  }
  void PrintYul(const YulExprStmt& s) { Line(EmitYulExpr(s.call)); }
  void PrintYul(const YulIf& s) {
    Line("if " + EmitYulExpr(s.cond) + " {");
    YulBody(s.body);
    Line("}");
  }
  void PrintYul(const YulFor& s) {
    std::string c = s.counter;
    Line("for { let " + c + " := 0 } lt(" + c + ", " + std::to_string(s.bound) +
         ") { " + c + " := add(" + c + ", 1) } {");
    YulBody(s.body);
    Line("}");
  }
  void PrintYul(const YulFnDef& s) {
    std::string header = "function " + s.name + "(";
    for (size_t i = 0; i < s.params.size(); ++i) {
      if (i) header += ", ";
      header += s.params[i];
    }
    header += ")";
    if (!s.rets.empty()) {
      header += " -> ";
      for (size_t i = 0; i < s.rets.size(); ++i) {
        if (i) header += ", ";
        header += s.rets[i];
      }
    }
    Line(header + " {");
    YulBody(s.body);
    Line("}");
  }

  int indent_;
  std::string out_;
};

std::string ArrayInit(const DynArray& arr) {
  std::string out = "[";
  for (size_t i = 0; i < arr.init_elems.size(); ++i) {
    if (i) out += ", ";
    out += i == 0 ? "uint256(" + arr.init_elems[i] + ")" : arr.init_elems[i];
  }
  return out + "]";
}

}  // namespace

std::string EmitProgramUnchecked(const Program& program) {
  Printer p(0);
  p.Line("// SPDX-License-Identifier: " + program.spdx_id);
  p.Line("pragma solidity ^" + program.pragma_floor.ToString() + ";");
  p.Blank();
  p.Line("contract " + program.contract_name + " {");
  p.Indent();
  for (const EventDecl& ev : program.events) {
    std::string params;
    for (size_t i = 0; i < ev.params.size(); ++i) {
      if (i) params += ", ";
      params += std::string(TypeName(ev.params[i].type)) + " " + ev.params[i].name;
    }
    p.Line("event " + ev.name + "(" + params + ");");
  }
  for (const StateVar& sv : program.state_vars) {
    p.Line(std::string(TypeName(sv.type)) + (sv.is_constant ? " constant " : " ") +
           sv.name + " = " + sv.init + ";");
  }
  for (const DynArray& arr : program.arrays) {
    if (arr.init_elems.empty()) {
      p.Line("uint256[] " + arr.name + ";");
    } else {
      p.Line("uint256[] " + arr.name + " = " + ArrayInit(arr) + ";");
    }
  }
  for (const ModifierDecl& mod : program.modifiers) {
    p.Blank();
    p.Modifier(mod);
  }
  for (const FunctionDecl& fn : program.functions) {
    p.Blank();
    p.Function(fn);
  }
  p.Dedent();
  p.Line("}");
  return p.Take();
}

std::string EmitProgram(const Program& program) {
  std::vector<Violation> violations = Validate(program);
  if (!violations.empty()) {
    throw std::logic_error("refusing to emit invalid program: " +
                           violations.front().ToString());
  }
  return EmitProgramUnchecked(program);
}

std::string EmitFunction(const FunctionDecl& fn, int indent) {
  Printer p(indent);
  p.Function(fn);
  return p.Take();
}

std::string EmitModifier(const ModifierDecl& mod, int indent) {
  Printer p(indent);
  p.Modifier(mod);
  return p.Take();
}

std::string EmitStmt(const Stmt& stmt, int indent) {
  Printer p(indent);
  p.Statement(stmt);
  return p.Take();
}

std::string EmitExpr(const Expr& expr) { return ExprText(expr, true); }

std::string EmitYulStmt(const YulStmt& stmt, int indent) {
  Printer p(indent);
  p.YulStatement(stmt);
  return p.Take();
}

std::string EmitYulExpr(const YulExpr& expr) {
  struct Visitor {
    std::string operator()(const YulLit& e) { return e.value; }
    std::string operator()(const YulRef& e) { return e.name; }
    std::string operator()(const YulSlot& e) { return e.var + ".slot"; }
    std::string operator()(const YulCall& e) {
      std::string out = e.function + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += EmitYulExpr(e.args[i]);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, expr.node);
}

std::size_t LineCount(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace solgen
