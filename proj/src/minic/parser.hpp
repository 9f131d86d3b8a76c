#pragma once

#include <optional>
#include <string>

#include "minic/ast.hpp"
#include "minic/lexer.hpp"

namespace htg::minic {

struct Diagnostic {
  DiagKind kind = DiagKind::SyntaxError;
  SourceLoc loc;
  std::string message;

  std::string to_string() const;
};

struct ParseResult {
  std::optional<Program> program;
  std::optional<Diagnostic> error;

  bool ok() const { return program.has_value(); }
};

// Lex + parse + type-check. Never throws: every failure comes back as a
// positioned Diagnostic. The returned AST satisfies the MiniC invariants
// (exactly one main, all callees declared, expressions well-typed).
ParseResult parse(const std::string& source);

// Test/tool convenience; throws Diag on failure.
Program parse_or_throw(const std::string& source);

}  // namespace htg::minic
