#include "minic/parser.hpp"

#include <sstream>

#include "minic/typecheck.hpp"

namespace htg::minic {

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    Program p;
    while (!at(Tok::End)) p.functions.push_back(function());
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }

  const Token& eat(Tok k, const char* what) {
    if (!at(k))
      throw Diag(DiagKind::SyntaxError, cur().loc,
                 std::string("expected ") + what + ", got '" + describe(cur()) + "'");
    return toks_[pos_++];
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "<end of input>" : t.text;
  }

  Type type_specifier() {
    if (at(Tok::KwInt)) { ++pos_; return Type::Int; }
    if (at(Tok::KwBool)) { ++pos_; return Type::Bool; }
    if (at(Tok::KwVoid)) { ++pos_; return Type::Void; }
    throw Diag(DiagKind::SyntaxError, cur().loc,
               "expected type specifier (int, bool, void), got '" + describe(cur()) + "'");
  }

  void reject_pointer_declarator() {
    if (at(Tok::Star))
      throw Diag(DiagKind::UnsupportedFeature, cur().loc, "pointers are outside the subset");
  }

  FunctionDecl function() {
    FunctionDecl f;
    f.loc = cur().loc;
    f.return_type = type_specifier();
    reject_pointer_declarator();
    f.name = eat(Tok::Ident, "function name").text;
    if (at(Tok::Semi) || at(Tok::Assign))
      throw Diag(DiagKind::UnsupportedFeature, cur().loc, "global variables are outside the subset");
    eat(Tok::LParen, "'('");
    if (!at(Tok::RParen)) {
      if (at(Tok::KwVoid) && toks_[pos_ + 1].kind == Tok::RParen) {
        ++pos_;  // f(void)
      } else {
        for (;;) {
          Param param;
          param.type = type_specifier();
          if (param.type == Type::Void)
            throw Diag(DiagKind::SyntaxError, cur().loc, "void parameter");
          reject_pointer_declarator();
          param.name = eat(Tok::Ident, "parameter name").text;
          f.params.push_back(std::move(param));
          if (!at(Tok::Comma)) break;
          ++pos_;
        }
      }
    }
    eat(Tok::RParen, "')'");
    eat(Tok::LBrace, "'{'");
    f.body = stmt_list_until_rbrace();
    eat(Tok::RBrace, "'}'");
    return f;
  }

  std::vector<StmtPtr> stmt_list_until_rbrace() {
    std::vector<StmtPtr> out;
    while (!at(Tok::RBrace)) {
      if (at(Tok::End))
        throw Diag(DiagKind::SyntaxError, cur().loc, "unexpected end of input, expected '}'");
      if (at(Tok::Semi)) { ++pos_; continue; }  // stray empty statement
      out.push_back(statement());
    }
    return out;
  }

  // A branch/loop body: either a braced list or a single statement wrapped
  // into a one-element list, so downstream passes see a uniform shape.
  std::vector<StmtPtr> branch_body() {
    std::vector<StmtPtr> out;
    if (at(Tok::LBrace)) {
      ++pos_;
      out = stmt_list_until_rbrace();
      eat(Tok::RBrace, "'}'");
    } else {
      out.push_back(statement());
    }
    return out;
  }

  StmtPtr statement() {
    SourceLoc loc = cur().loc;
    if (at(Tok::LBrace)) {
      auto s = make_stmt(StmtKind::Block, loc);
      ++pos_;
      s->body = stmt_list_until_rbrace();
      eat(Tok::RBrace, "'}'");
      return s;
    }
    if (at(Tok::KwIf)) return if_stmt(loc);
    if (at(Tok::KwWhile)) return while_stmt(loc);
    if (at(Tok::KwReturn)) {
      ++pos_;
      auto s = make_stmt(StmtKind::Return, loc);
      if (!at(Tok::Semi)) s->expr = expression();
      eat(Tok::Semi, "';'");
      return s;
    }
    if (at(Tok::KwInt) || at(Tok::KwBool)) {
      auto s = make_stmt(StmtKind::Decl, loc);
      s->decl_type = type_specifier();
      reject_pointer_declarator();
      s->name = eat(Tok::Ident, "variable name").text;
      if (at(Tok::Assign)) {
        ++pos_;
        s->expr = expression();
      }
      if (at(Tok::Comma))
        throw Diag(DiagKind::UnsupportedFeature, cur().loc,
                   "multiple declarators are outside the subset");
      eat(Tok::Semi, "';'");
      return s;
    }
    if (at(Tok::Ident)) {
      // label / assignment / call statement
      if (toks_[pos_ + 1].kind == Tok::Colon) {
        auto s = make_stmt(StmtKind::Label, loc);
        s->name = eat(Tok::Ident, "label").text;
        ++pos_;  // ':'
        eat(Tok::Semi, "';'");
        s->goal_id = goal_id_of_label(s->name);
        return s;
      }
      if (toks_[pos_ + 1].kind == Tok::Assign) {
        auto s = make_stmt(StmtKind::Assign, loc);
        s->name = eat(Tok::Ident, "variable").text;
        ++pos_;  // '='
        s->expr = expression();
        eat(Tok::Semi, "';'");
        return s;
      }
      if (toks_[pos_ + 1].kind == Tok::LParen) {
        ExprPtr call = expression();
        eat(Tok::Semi, "';'");
        if (call->kind == ExprKind::Call && call->name == kReachErrorName) {
          auto s = make_stmt(StmtKind::AssertFail, loc);
          return s;
        }
        auto s = make_stmt(StmtKind::CallStmt, loc);
        s->expr = std::move(call);
        return s;
      }
      throw Diag(DiagKind::SyntaxError, cur().loc,
                 "expected statement, got '" + describe(cur()) + "'");
    }
    throw Diag(DiagKind::SyntaxError, loc,
               "expected statement, got '" + describe(cur()) + "'");
  }

  static int goal_id_of_label(const std::string& name) {
    if (name.rfind("GOAL_", 0) != 0) return -1;
    int id = 0;
    for (std::size_t i = 5; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
      id = id * 10 + (name[i] - '0');
    }
    return name.size() > 5 ? id : -1;
  }

  StmtPtr if_stmt(SourceLoc loc) {
    ++pos_;
    auto s = make_stmt(StmtKind::If, loc);
    eat(Tok::LParen, "'('");
    s->expr = expression();
    eat(Tok::RParen, "')'");
    s->body = branch_body();
    if (at(Tok::KwElse)) {
      ++pos_;
      s->else_body = branch_body();
    }
    return s;
  }

  StmtPtr while_stmt(SourceLoc loc) {
    ++pos_;
    auto s = make_stmt(StmtKind::While, loc);
    s->loop_id = next_loop_id_++;
    eat(Tok::LParen, "'('");
    s->expr = expression();
    eat(Tok::RParen, "')'");
    s->body = branch_body();
    return s;
  }

  static StmtPtr make_stmt(StmtKind k, SourceLoc loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = k;
    s->loc = loc;
    return s;
  }

  static ExprPtr make_expr(ExprKind k, SourceLoc loc) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->loc = loc;
    return e;
  }

  ExprPtr expression() { return or_expr(); }

  ExprPtr or_expr() {
    ExprPtr e = and_expr();
    while (at(Tok::OrOr)) {
      SourceLoc loc = cur().loc;
      ++pos_;
      auto b = make_expr(ExprKind::Binary, loc);
      b->bin = BinOp::Or;
      b->lhs = std::move(e);
      b->rhs = and_expr();
      e = std::move(b);
    }
    return e;
  }

  ExprPtr and_expr() {
    ExprPtr e = equality();
    while (at(Tok::AndAnd)) {
      SourceLoc loc = cur().loc;
      ++pos_;
      auto b = make_expr(ExprKind::Binary, loc);
      b->bin = BinOp::And;
      b->lhs = std::move(e);
      b->rhs = equality();
      e = std::move(b);
    }
    return e;
  }

  ExprPtr equality() {
    ExprPtr e = relational();
    while (at(Tok::Eq) || at(Tok::Ne)) {
      BinOp op = at(Tok::Eq) ? BinOp::Eq : BinOp::Ne;
      SourceLoc loc = cur().loc;
      ++pos_;
      auto b = make_expr(ExprKind::Binary, loc);
      b->bin = op;
      b->lhs = std::move(e);
      b->rhs = relational();
      e = std::move(b);
    }
    return e;
  }

  ExprPtr relational() {
    ExprPtr e = additive();
    for (;;) {
      BinOp op;
      if (at(Tok::Lt)) op = BinOp::Lt;
      else if (at(Tok::Le)) op = BinOp::Le;
      else if (at(Tok::Gt)) op = BinOp::Gt;
      else if (at(Tok::Ge)) op = BinOp::Ge;
      else break;
      SourceLoc loc = cur().loc;
      ++pos_;
      auto b = make_expr(ExprKind::Binary, loc);
      b->bin = op;
      b->lhs = std::move(e);
      b->rhs = additive();
      e = std::move(b);
    }
    return e;
  }

  ExprPtr additive() {
    ExprPtr e = multiplicative();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      BinOp op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
      SourceLoc loc = cur().loc;
      ++pos_;
      auto b = make_expr(ExprKind::Binary, loc);
      b->bin = op;
      b->lhs = std::move(e);
      b->rhs = multiplicative();
      e = std::move(b);
    }
    return e;
  }

  ExprPtr multiplicative() {
    ExprPtr e = unary();
    for (;;) {
      BinOp op;
      if (at(Tok::Star)) op = BinOp::Mul;
      else if (at(Tok::Slash)) op = BinOp::Div;
      else if (at(Tok::Percent)) op = BinOp::Mod;
      else break;
      SourceLoc loc = cur().loc;
      ++pos_;
      auto b = make_expr(ExprKind::Binary, loc);
      b->bin = op;
      b->lhs = std::move(e);
      b->rhs = unary();
      e = std::move(b);
    }
    return e;
  }

  ExprPtr unary() {
    SourceLoc loc = cur().loc;
    if (at(Tok::Not)) {
      ++pos_;
      auto e = make_expr(ExprKind::Unary, loc);
      e->un = UnOp::Not;
      e->lhs = unary();
      return e;
    }
    if (at(Tok::Minus)) {
      ++pos_;
      auto e = make_expr(ExprKind::Unary, loc);
      e->un = UnOp::Neg;
      e->lhs = unary();
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    SourceLoc loc = cur().loc;
    if (at(Tok::IntLit)) {
      auto e = make_expr(ExprKind::IntLit, loc);
      e->int_value = eat(Tok::IntLit, "integer").value;
      return e;
    }
    if (at(Tok::KwTrue) || at(Tok::KwFalse)) {
      auto e = make_expr(ExprKind::BoolLit, loc);
      e->int_value = at(Tok::KwTrue) ? 1 : 0;
      ++pos_;
      return e;
    }
    if (at(Tok::LParen)) {
      ++pos_;
      ExprPtr e = expression();
      eat(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Ident)) {
      std::string name = eat(Tok::Ident, "identifier").text;
      if (at(Tok::LParen)) return call_expr(std::move(name), loc);
      auto e = make_expr(ExprKind::Var, loc);
      e->name = std::move(name);
      return e;
    }
    throw Diag(DiagKind::SyntaxError, loc,
               "expected expression, got '" + describe(cur()) + "'");
  }

  ExprPtr call_expr(std::string name, SourceLoc loc) {
    eat(Tok::LParen, "'('");
    std::vector<ExprPtr> args;
    if (!at(Tok::RParen)) {
      for (;;) {
        args.push_back(expression());
        if (!at(Tok::Comma)) break;
        ++pos_;
      }
    }
    eat(Tok::RParen, "')'");

    if (name == "__VERIFIER_nondet_int" || name == "__VERIFIER_nondet_bool") {
      if (!args.empty())
        throw Diag(DiagKind::SyntaxError, loc, name + " takes no arguments");
      auto e = make_expr(name == "__VERIFIER_nondet_int" ? ExprKind::NondetInt
                                                         : ExprKind::NondetBool,
                         loc);
      return e;
    }
    if (name.rfind("__VERIFIER_", 0) == 0)
      throw Diag(DiagKind::UnsupportedFeature, loc, name + " is outside the subset");

    auto e = make_expr(ExprKind::Call, loc);
    e->name = std::move(name);
    e->args = std::move(args);
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int next_loop_id_ = 0;
};

}  // namespace

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  os << loc.line << ":" << loc.column << ": "
     << (kind == DiagKind::SyntaxError ? "syntax error" : "unsupported feature") << ": "
     << message;
  return os.str();
}

ParseResult parse(const std::string& source) {
  ParseResult r;
  try {
    Program p = Parser(lex(source)).run();
    type_check(p);
    r.program = std::move(p);
  } catch (const Diag& d) {
    r.error = Diagnostic{d.kind, d.loc, d.what()};
  }
  return r;
}

Program parse_or_throw(const std::string& source) {
  ParseResult r = parse(source);
  if (!r.ok()) throw Diag(r.error->kind, r.error->loc, r.error->message);
  return std::move(*r.program);
}

}  // namespace htg::minic
