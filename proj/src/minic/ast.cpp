#include "minic/ast.hpp"

#include <stdexcept>

namespace htg::minic {

const char* type_name(Type t) {
  switch (t) {
    case Type::Void: return "void";
    case Type::Int: return "int";
    case Type::Bool: return "bool";
  }
  return "?";
}

bool is_comparison(BinOp op) {
  switch (op) {
    case BinOp::Eq:
    case BinOp::Ne:
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:
      return true;
    default:
      return false;
  }
}

bool is_arithmetic(BinOp op) {
  switch (op) {
    case BinOp::Add:
    case BinOp::Sub:
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod:
      return true;
    default:
      return false;
  }
}

const char* binop_spelling(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
  }
  return "?";
}

const FunctionDecl* Program::find(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

const FunctionDecl& Program::main_function() const {
  const FunctionDecl* f = find("main");
  if (!f) throw std::logic_error("program has no main");
  return *f;
}

ExprPtr clone(const Expr& e) {
  auto out = std::make_unique<Expr>();
  out->kind = e.kind;
  out->loc = e.loc;
  out->type = e.type;
  out->int_value = e.int_value;
  out->name = e.name;
  out->bin = e.bin;
  out->un = e.un;
  out->nondet_site = e.nondet_site;
  if (e.lhs) out->lhs = clone(*e.lhs);
  if (e.rhs) out->rhs = clone(*e.rhs);
  out->args.reserve(e.args.size());
  for (const auto& a : e.args) out->args.push_back(clone(*a));
  return out;
}

StmtPtr clone(const Stmt& s) {
  auto out = std::make_unique<Stmt>();
  out->kind = s.kind;
  out->loc = s.loc;
  if (s.expr) out->expr = clone(*s.expr);
  out->name = s.name;
  out->decl_type = s.decl_type;
  out->loop_id = s.loop_id;
  out->goal_id = s.goal_id;
  out->body.reserve(s.body.size());
  for (const auto& c : s.body) out->body.push_back(clone(*c));
  out->else_body.reserve(s.else_body.size());
  for (const auto& c : s.else_body) out->else_body.push_back(clone(*c));
  return out;
}

Program clone(const Program& p) {
  Program out;
  out.functions.reserve(p.functions.size());
  for (const auto& f : p.functions) {
    FunctionDecl g;
    g.name = f.name;
    g.return_type = f.return_type;
    g.params = f.params;
    g.loc = f.loc;
    g.body.reserve(f.body.size());
    for (const auto& s : f.body) g.body.push_back(clone(*s));
    out.functions.push_back(std::move(g));
  }
  return out;
}

}  // namespace htg::minic
