#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace htg::minic {

struct SourceLoc {
  int line = 0;
  int column = 0;
};

enum class Type { Void, Int, Bool };

const char* type_name(Type t);

enum class BinOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnOp { Not, Neg };

bool is_comparison(BinOp op);
bool is_arithmetic(BinOp op);
const char* binop_spelling(BinOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class ExprKind { IntLit, BoolLit, Var, Binary, Unary, Call, NondetInt, NondetBool };

struct Expr {
  ExprKind kind;
  SourceLoc loc;
  Type type = Type::Int;  // filled in by the type checker

  std::int64_t int_value = 0;  // IntLit; BoolLit stores 0/1
  std::string name;            // Var, Call
  BinOp bin{};
  UnOp un{};
  ExprPtr lhs, rhs;          // Binary; Unary uses lhs only
  std::vector<ExprPtr> args; // Call
  int nondet_site = -1;      // NondetInt/NondetBool: stable read-site id
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

// If/While keep their bodies as flat statement lists; the parser wraps
// non-braced branch statements, so the printer always emits braces.
enum class StmtKind { Block, If, While, Assign, Decl, Return, CallStmt, AssertFail, Label };

struct Stmt {
  StmtKind kind;
  SourceLoc loc;

  ExprPtr expr;  // If/While condition, Assign rhs, Decl initializer, Return value, CallStmt call
  std::string name;  // Assign target, Decl name, Label name
  Type decl_type = Type::Int;
  std::vector<StmtPtr> body;       // Block, If-then, While body
  std::vector<StmtPtr> else_body;  // If only
  int loop_id = -1;                // While: stable id assigned by the parser
  int goal_id = -1;                // Label: GOAL_<n> index, -1 for other labels
};

struct Param {
  std::string name;
  Type type = Type::Int;
};

struct FunctionDecl {
  std::string name;
  Type return_type = Type::Int;
  std::vector<Param> params;
  std::vector<StmtPtr> body;
  SourceLoc loc;
};

struct Program {
  std::vector<FunctionDecl> functions;

  const FunctionDecl* find(const std::string& name) const;
  const FunctionDecl& main_function() const;
};

ExprPtr clone(const Expr& e);
StmtPtr clone(const Stmt& s);
Program clone(const Program& p);

// The intrinsic error location; a call statement to it parses as AssertFail.
inline constexpr const char* kReachErrorName = "reach_error";

}  // namespace htg::minic
