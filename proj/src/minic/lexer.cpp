#include "minic/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace htg::minic {

namespace {

const std::unordered_map<std::string, Tok> kKeywords = {
    {"int", Tok::KwInt},     {"bool", Tok::KwBool},   {"void", Tok::KwVoid},
    {"if", Tok::KwIf},       {"else", Tok::KwElse},   {"while", Tok::KwWhile},
    {"return", Tok::KwReturn}, {"true", Tok::KwTrue}, {"false", Tok::KwFalse},
};

// Keywords we recognize only to produce a precise UnsupportedFeature message.
const std::unordered_map<std::string, const char*> kRejectedKeywords = {
    {"for", "for loops"},       {"switch", "switch statements"},
    {"do", "do-while loops"},   {"struct", "structs"},
    {"float", "floating point"}, {"double", "floating point"},
    {"char", "char type"},      {"unsigned", "unsigned types"},
    {"long", "long type"},      {"short", "short type"},
    {"break", "break"},         {"continue", "continue"},
    {"goto", "goto"},           {"static", "storage classes"},
    {"const", "qualifiers"},    {"sizeof", "sizeof"},
    {"enum", "enums"},          {"union", "unions"},
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t = next();
      bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) break;
    }
    return out;
  }

 private:
  SourceLoc here() const { return {line_, col_}; }

  char peek(int ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_trivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#' && col_at_line_start()) {
        while (peek() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '/') {
        while (peek() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceLoc start = here();
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (!peek()) throw Diag(DiagKind::SyntaxError, start, "unterminated comment");
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  bool col_at_line_start() const {
    // '#' only introduces a preprocessor line when nothing but whitespace
    // precedes it on the line.
    std::size_t i = pos_;
    while (i > 0) {
      char c = src_[i - 1];
      if (c == '\n') return true;
      if (c != ' ' && c != '\t') return false;
      --i;
    }
    return true;
  }

  Token next() {
    SourceLoc loc = here();
    char c = peek();
    if (!c) return {Tok::End, "", 0, loc};

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident(loc);
    if (std::isdigit(static_cast<unsigned char>(c))) return number(loc);

    advance();
    switch (c) {
      case '(': return {Tok::LParen, "(", 0, loc};
      case ')': return {Tok::RParen, ")", 0, loc};
      case '{': return {Tok::LBrace, "{", 0, loc};
      case '}': return {Tok::RBrace, "}", 0, loc};
      case ';': return {Tok::Semi, ";", 0, loc};
      case ',': return {Tok::Comma, ",", 0, loc};
      case ':': return {Tok::Colon, ":", 0, loc};
      case '+':
        if (peek() == '+' || peek() == '=')
          throw Diag(DiagKind::UnsupportedFeature, loc, "compound/increment operators are outside the subset");
        return {Tok::Plus, "+", 0, loc};
      case '-':
        if (peek() == '-' || peek() == '=')
          throw Diag(DiagKind::UnsupportedFeature, loc, "compound/decrement operators are outside the subset");
        if (peek() == '>')
          throw Diag(DiagKind::UnsupportedFeature, loc, "pointers are outside the subset");
        return {Tok::Minus, "-", 0, loc};
      case '*':
        if (peek() == '=')
          throw Diag(DiagKind::UnsupportedFeature, loc, "compound operators are outside the subset");
        return {Tok::Star, "*", 0, loc};
      case '/':
        if (peek() == '=')
          throw Diag(DiagKind::UnsupportedFeature, loc, "compound operators are outside the subset");
        return {Tok::Slash, "/", 0, loc};
      case '%': return {Tok::Percent, "%", 0, loc};
      case '=':
        if (peek() == '=') {
          advance();
          return {Tok::Eq, "==", 0, loc};
        }
        return {Tok::Assign, "=", 0, loc};
      case '!':
        if (peek() == '=') {
          advance();
          return {Tok::Ne, "!=", 0, loc};
        }
        return {Tok::Not, "!", 0, loc};
      case '<':
        if (peek() == '=') {
          advance();
          return {Tok::Le, "<=", 0, loc};
        }
        if (peek() == '<')
          throw Diag(DiagKind::UnsupportedFeature, loc, "shift operators are outside the subset");
        return {Tok::Lt, "<", 0, loc};
      case '>':
        if (peek() == '=') {
          advance();
          return {Tok::Ge, ">=", 0, loc};
        }
        if (peek() == '>')
          throw Diag(DiagKind::UnsupportedFeature, loc, "shift operators are outside the subset");
        return {Tok::Gt, ">", 0, loc};
      case '&':
        if (peek() == '&') {
          advance();
          return {Tok::AndAnd, "&&", 0, loc};
        }
        throw Diag(DiagKind::UnsupportedFeature, loc, "address-of / bitwise ops are outside the subset");
      case '|':
        if (peek() == '|') {
          advance();
          return {Tok::OrOr, "||", 0, loc};
        }
        throw Diag(DiagKind::UnsupportedFeature, loc, "bitwise ops are outside the subset");
      case '[':
      case ']':
        throw Diag(DiagKind::UnsupportedFeature, loc, "arrays are outside the subset");
      case '"':
        throw Diag(DiagKind::UnsupportedFeature, loc, "string literals are outside the subset");
      case '\'':
        throw Diag(DiagKind::UnsupportedFeature, loc, "char literals are outside the subset");
      case '.':
        throw Diag(DiagKind::UnsupportedFeature, loc, "member access / floats are outside the subset");
      default:
        throw Diag(DiagKind::SyntaxError, loc,
                   std::string("unexpected character '") + c + "'");
    }
  }

  Token ident(SourceLoc loc) {
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += advance();
    if (auto it = kKeywords.find(s); it != kKeywords.end()) return {it->second, s, 0, loc};
    if (auto it = kRejectedKeywords.find(s); it != kRejectedKeywords.end())
      throw Diag(DiagKind::UnsupportedFeature, loc,
                 std::string(it->second) + " are outside the subset");
    return {Tok::Ident, s, 0, loc};
  }

  Token number(SourceLoc loc) {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += advance();
    if (peek() == '.' || peek() == 'e' || peek() == 'E' || peek() == 'f')
      throw Diag(DiagKind::UnsupportedFeature, loc, "floating point is outside the subset");
    if (peek() == 'x' || peek() == 'X')
      throw Diag(DiagKind::SyntaxError, loc, "hex literals are not accepted");
    std::int64_t v = 0;
    for (char d : s) {
      v = v * 10 + (d - '0');
      if (v > (std::int64_t(1) << 40))
        throw Diag(DiagKind::SyntaxError, loc, "integer literal too large");
    }
    return {Tok::IntLit, s, v, loc};
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> lex(const std::string& source) { return Lexer(source).run(); }

}  // namespace htg::minic
