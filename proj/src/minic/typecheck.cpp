#include "minic/typecheck.hpp"

#include <map>
#include <set>
#include <vector>

#include "minic/lexer.hpp"

namespace htg::minic {

namespace {

[[noreturn]] void fail(SourceLoc loc, const std::string& msg) {
  throw Diag(DiagKind::SyntaxError, loc, msg);
}

class Checker {
 public:
  explicit Checker(Program& p) : prog_(p) {}

  void run() {
    int mains = 0;
    std::set<std::string> names;
    for (const auto& f : prog_.functions) {
      if (!names.insert(f.name).second) fail(f.loc, "duplicate function '" + f.name + "'");
      if (f.name == "main") {
        ++mains;
        if (f.return_type != Type::Int || !f.params.empty())
          fail(f.loc, "main must be declared as 'int main()'");
      }
      if (f.name == kReachErrorName && (f.return_type != Type::Void || !f.params.empty()))
        fail(f.loc, "reach_error must be declared as 'void reach_error()'");
    }
    if (mains == 0) fail({1, 1}, "program has no main function");
    if (mains > 1) fail({1, 1}, "program has more than one main function");

    for (auto& f : prog_.functions) check_function(f);
  }

 private:
  void check_function(FunctionDecl& f) {
    scopes_.clear();
    scopes_.emplace_back();
    current_ = &f;
    std::set<std::string> param_names;
    for (const auto& p : f.params) {
      if (!param_names.insert(p.name).second)
        fail(f.loc, "duplicate parameter '" + p.name + "' in function '" + f.name + "'");
      scopes_.back()[p.name] = p.type;
    }
    check_stmts(f.body);
    scopes_.pop_back();
  }

  void check_stmts(std::vector<StmtPtr>& stmts) {
    scopes_.emplace_back();
    for (auto& s : stmts) check_stmt(*s);
    scopes_.pop_back();
  }

  void check_stmt(Stmt& s) {
    switch (s.kind) {
      case StmtKind::Block:
        check_stmts(s.body);
        break;
      case StmtKind::If: {
        Type t = check_expr(*s.expr);
        if (t == Type::Void) fail(s.expr->loc, "condition cannot be void");
        check_stmts(s.body);
        check_stmts(s.else_body);
        break;
      }
      case StmtKind::While: {
        Type t = check_expr(*s.expr);
        if (t == Type::Void) fail(s.expr->loc, "condition cannot be void");
        check_stmts(s.body);
        break;
      }
      case StmtKind::Assign: {
        Type var = lookup(s.name, s.loc);
        Type val = check_expr(*s.expr);
        if (var != val)
          fail(s.loc, "cannot assign " + std::string(type_name(val)) + " to " +
                          type_name(var) + " variable '" + s.name + "'");
        break;
      }
      case StmtKind::Decl: {
        if (scopes_.back().count(s.name))
          fail(s.loc, "redeclaration of '" + s.name + "'");
        if (s.expr) {
          Type val = check_expr(*s.expr);
          if (val != s.decl_type)
            fail(s.loc, "initializer type " + std::string(type_name(val)) +
                            " does not match " + type_name(s.decl_type));
        }
        scopes_.back()[s.name] = s.decl_type;
        break;
      }
      case StmtKind::Return: {
        Type want = current_->return_type;
        if (s.expr) {
          Type got = check_expr(*s.expr);
          if (want == Type::Void) fail(s.loc, "void function returns a value");
          if (got != want)
            fail(s.loc, std::string("return type mismatch: expected ") + type_name(want) +
                            ", got " + type_name(got));
        } else if (want != Type::Void) {
          fail(s.loc, "non-void function returns no value");
        }
        break;
      }
      case StmtKind::CallStmt:
        check_expr(*s.expr, /*allow_void=*/true);
        break;
      case StmtKind::AssertFail:
      case StmtKind::Label:
        break;
    }
  }

  Type check_expr(Expr& e, bool allow_void = false) {
    switch (e.kind) {
      case ExprKind::IntLit:
        return e.type = Type::Int;
      case ExprKind::BoolLit:
        return e.type = Type::Bool;
      case ExprKind::NondetInt:
        return e.type = Type::Int;
      case ExprKind::NondetBool:
        return e.type = Type::Bool;
      case ExprKind::Var:
        return e.type = lookup(e.name, e.loc);
      case ExprKind::Unary: {
        Type t = check_expr(*e.lhs);
        if (e.un == UnOp::Neg) {
          if (t != Type::Int) fail(e.loc, "unary '-' needs an int operand");
          return e.type = Type::Int;
        }
        // '!' takes int or bool (C truthiness)
        if (t == Type::Void) fail(e.loc, "'!' cannot take void");
        return e.type = Type::Bool;
      }
      case ExprKind::Binary: {
        Type a = check_expr(*e.lhs);
        Type b = check_expr(*e.rhs);
        if (a == Type::Void || b == Type::Void) fail(e.loc, "void operand");
        if (is_arithmetic(e.bin)) {
          if (a != Type::Int || b != Type::Int)
            fail(e.loc, std::string("'") + binop_spelling(e.bin) + "' needs int operands");
          return e.type = Type::Int;
        }
        if (e.bin == BinOp::Eq || e.bin == BinOp::Ne) {
          if (a != b) fail(e.loc, "comparison of mismatched types");
          return e.type = Type::Bool;
        }
        if (is_comparison(e.bin)) {
          if (a != Type::Int || b != Type::Int)
            fail(e.loc, std::string("'") + binop_spelling(e.bin) + "' needs int operands");
          return e.type = Type::Bool;
        }
        // && and || accept int or bool operands, C truthiness.
        return e.type = Type::Bool;
      }
      case ExprKind::Call: {
        const FunctionDecl* callee = prog_.find(e.name);
        if (!callee) fail(e.loc, "call to undeclared function '" + e.name + "'");
        if (callee->params.size() != e.args.size())
          fail(e.loc, "call to '" + e.name + "' with wrong number of arguments");
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          Type got = check_expr(*e.args[i]);
          if (got != callee->params[i].type)
            fail(e.args[i]->loc, "argument type mismatch in call to '" + e.name + "'");
        }
        if (callee->return_type == Type::Void && !allow_void)
          fail(e.loc, "void call used as a value");
        return e.type = callee->return_type;
      }
    }
    fail(e.loc, "malformed expression");
  }

  Type lookup(const std::string& name, SourceLoc loc) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    fail(loc, "use of undeclared variable '" + name + "'");
  }

  Program& prog_;
  const FunctionDecl* current_ = nullptr;
  std::vector<std::map<std::string, Type>> scopes_;
};

}  // namespace

void type_check(Program& p) { Checker(p).run(); }

}  // namespace htg::minic
