#include "minic/pretty_print.hpp"

#include <sstream>

namespace htg::minic {

namespace {

int precedence(const Expr& e) {
  if (e.kind == ExprKind::Unary) return 7;
  if (e.kind != ExprKind::Binary) return 8;
  switch (e.bin) {
    case BinOp::Or: return 1;
    case BinOp::And: return 2;
    case BinOp::Eq:
    case BinOp::Ne: return 3;
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge: return 4;
    case BinOp::Add:
    case BinOp::Sub: return 5;
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod: return 6;
  }
  return 8;
}

class Printer {
 public:
  std::string run(const Program& p) {
    bool first = true;
    for (const auto& f : p.functions) {
      if (!first) os_ << "\n";
      first = false;
      function(f);
    }
    return os_.str();
  }

  std::string take() { return os_.str(); }

  void expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::IntLit:
        os_ << e.int_value;
        return;
      case ExprKind::BoolLit:
        os_ << (e.int_value ? "true" : "false");
        return;
      case ExprKind::Var:
        os_ << e.name;
        return;
      case ExprKind::NondetInt:
        os_ << "__VERIFIER_nondet_int()";
        return;
      case ExprKind::NondetBool:
        os_ << "__VERIFIER_nondet_bool()";
        return;
      case ExprKind::Call: {
        os_ << e.name << "(";
        bool first = true;
        for (const auto& a : e.args) {
          if (!first) os_ << ", ";
          first = false;
          expr(*a);
        }
        os_ << ")";
        return;
      }
      case ExprKind::Unary: {
        os_ << (e.un == UnOp::Not ? "!" : "-");
        child(*e.lhs, precedence(e), /*strict=*/false);
        return;
      }
      case ExprKind::Binary: {
        child(*e.lhs, precedence(e), /*strict=*/false);
        os_ << " " << binop_spelling(e.bin) << " ";
        // left-associative: parenthesize an equal-precedence right child
        child(*e.rhs, precedence(e), /*strict=*/true);
        return;
      }
    }
  }

 private:
  void child(const Expr& e, int parent_prec, bool strict) {
    bool parens = strict ? precedence(e) <= parent_prec : precedence(e) < parent_prec;
    if (parens) os_ << "(";
    expr(e);
    if (parens) os_ << ")";
  }

  void function(const FunctionDecl& f) {
    os_ << type_name(f.return_type) << " " << f.name << "(";
    bool first = true;
    for (const auto& p : f.params) {
      if (!first) os_ << ", ";
      first = false;
      os_ << type_name(p.type) << " " << p.name;
    }
    os_ << ") {\n";
    stmts(f.body, 1);
    os_ << "}\n";
  }

  void stmts(const std::vector<StmtPtr>& list, int depth) {
    for (const auto& s : list) stmt(*s, depth);
  }

  void indent(int depth) {
    for (int i = 0; i < depth; ++i) os_ << "  ";
  }

  void stmt(const Stmt& s, int depth) {
    indent(depth);
    switch (s.kind) {
      case StmtKind::Block:
        os_ << "{\n";
        stmts(s.body, depth + 1);
        indent(depth);
        os_ << "}\n";
        return;
      case StmtKind::If:
        os_ << "if (";
        expr(*s.expr);
        os_ << ") {\n";
        stmts(s.body, depth + 1);
        indent(depth);
        os_ << "}";
        if (!s.else_body.empty()) {
          os_ << " else {\n";
          stmts(s.else_body, depth + 1);
          indent(depth);
          os_ << "}";
        }
        os_ << "\n";
        return;
      case StmtKind::While:
        os_ << "while (";
        expr(*s.expr);
        os_ << ") {\n";
        stmts(s.body, depth + 1);
        indent(depth);
        os_ << "}\n";
        return;
      case StmtKind::Assign:
        os_ << s.name << " = ";
        expr(*s.expr);
        os_ << ";\n";
        return;
      case StmtKind::Decl:
        os_ << type_name(s.decl_type) << " " << s.name;
        if (s.expr) {
          os_ << " = ";
          expr(*s.expr);
        }
        os_ << ";\n";
        return;
      case StmtKind::Return:
        os_ << "return";
        if (s.expr) {
          os_ << " ";
          expr(*s.expr);
        }
        os_ << ";\n";
        return;
      case StmtKind::CallStmt:
        expr(*s.expr);
        os_ << ";\n";
        return;
      case StmtKind::AssertFail:
        os_ << kReachErrorName << "();\n";
        return;
      case StmtKind::Label:
        os_ << s.name << ":;\n";
        return;
    }
  }

  std::ostringstream os_;
};

}  // namespace

std::string pretty_print(const Program& p) { return Printer().run(p); }

std::string pretty_print(const Expr& e) {
  Printer pr;
  pr.expr(e);
  return pr.take();
}

bool structurally_equal(const Program& a, const Program& b) {
  return pretty_print(a) == pretty_print(b);
}

}  // namespace htg::minic
