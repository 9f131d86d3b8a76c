#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "minic/ast.hpp"

namespace htg::minic {

enum class DiagKind { SyntaxError, UnsupportedFeature };

// Positioned diagnostic. parse() converts this into a ParseResult; it never
// escapes the frontend as an unhandled exception.
struct Diag : std::runtime_error {
  Diag(DiagKind kind, SourceLoc loc, const std::string& message)
      : std::runtime_error(message), kind(kind), loc(loc) {}
  DiagKind kind;
  SourceLoc loc;
};

enum class Tok {
  End,
  Ident,
  IntLit,
  KwInt, KwBool, KwVoid, KwIf, KwElse, KwWhile, KwReturn, KwTrue, KwFalse,
  LParen, RParen, LBrace, RBrace,
  Semi, Comma, Colon,
  Assign,
  Plus, Minus, Star, Slash, Percent,
  Eq, Ne, Lt, Le, Gt, Ge,
  AndAnd, OrOr, Not,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;  // IntLit
  SourceLoc loc;
};

// Tokenizes MiniC source. Preprocessor lines (leading '#') and comments are
// skipped; constructs outside the subset (pointers, arrays, floats, strings,
// compound assignment, ...) raise UnsupportedFeature with their position.
std::vector<Token> lex(const std::string& source);

}  // namespace htg::minic
