#include "gts/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace gts {

namespace {

enum class Tok : std::uint8_t {
  Int, Ident, KwFun, KwRef, KwDyn, KwInt,
  LParen, RParen, LBrace, RBrace, Less, Greater,
  Plus, Bang, Colon, ColonEq, Arrow, End
};

struct Token {
  Tok kind;
  std::string text;   // identifier spelling / integer digits
  std::int64_t value = 0;
  Span span;
};

const char* tok_desc(Tok t) {
  switch (t) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::KwFun: return "'fun'";
    case Tok::KwRef: return "'ref'";
    case Tok::KwDyn: return "'dyn'";
    case Tok::KwInt: return "'int'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::Plus: return "'+'";
    case Tok::Bang: return "'!'";
    case Tok::Colon: return "':'";
    case Tok::ColonEq: return "':='";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> lex() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Span sp{line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", 0, sp});
        return out;
      }
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && pos_ + 1 < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        out.push_back(lex_int(sp));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back(lex_word(sp));
      } else {
        out.push_back(lex_punct(sp));
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  Token lex_int(Span sp) {
    std::string digits;
    if (src_[pos_] == '-') {
      digits += '-';
      advance();
    }
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      digits += src_[pos_];
      advance();
    }
    std::int64_t v = 0;
    try {
      v = std::stoll(digits);
    } catch (const std::out_of_range&) {
      throw parse_error(sp, "integer literal out of range: " + digits);
    }
    return {Tok::Int, digits, v, sp};
  }

  Token lex_word(Span sp) {
    std::string w;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      w += src_[pos_];
      advance();
    }
    if (w == "fun") return {Tok::KwFun, w, 0, sp};
    if (w == "ref") return {Tok::KwRef, w, 0, sp};
    if (w == "dyn") return {Tok::KwDyn, w, 0, sp};
    if (w == "int") return {Tok::KwInt, w, 0, sp};
    return {Tok::Ident, w, 0, sp};
  }

  Token lex_punct(Span sp) {
    char c = src_[pos_];
    advance();
    switch (c) {
      case '(': return {Tok::LParen, "(", 0, sp};
      case ')': return {Tok::RParen, ")", 0, sp};
      case '{': return {Tok::LBrace, "{", 0, sp};
      case '}': return {Tok::RBrace, "}", 0, sp};
      case '<': return {Tok::Less, "<", 0, sp};
      case '>': return {Tok::Greater, ">", 0, sp};
      case '+': return {Tok::Plus, "+", 0, sp};
      case '!': return {Tok::Bang, "!", 0, sp};
      case ':':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          return {Tok::ColonEq, ":=", 0, sp};
        }
        return {Tok::Colon, ":", 0, sp};
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          advance();
          return {Tok::Arrow, "->", 0, sp};
        }
        throw parse_error(sp, "stray '-'; expected '->' or a negative integer");
      default:
        throw parse_error(sp, std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SurfaceExprPtr program() {
    SurfaceExprPtr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

  SurfaceTypePtr type_only() {
    SurfaceTypePtr t = type();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& get() { return toks_[idx_++]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool accept(Tok t) {
    if (!at(t)) return false;
    ++idx_;
    return true;
  }
  const Token& expect(Tok t, const char* what) {
    if (!at(t))
      throw parse_error(peek().span, std::string("unexpected ") +
                                         tok_desc(peek().kind) + ", expected " + what);
    return get();
  }

  // type := atomty ("->" type)?
  SurfaceTypePtr type() {
    SurfaceTypePtr lhs = atom_type();
    if (accept(Tok::Arrow)) return ut_fun(std::move(lhs), type());
    return lhs;
  }

  SurfaceTypePtr atom_type() {
    if (accept(Tok::KwDyn)) return ut_dyn();
    if (accept(Tok::KwInt)) return ut_int();
    if (accept(Tok::KwRef)) return ut_ref(atom_type());
    if (accept(Tok::LParen)) {
      SurfaceTypePtr t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    throw parse_error(peek().span,
                      std::string("unexpected ") + tok_desc(peek().kind) +
                          ", expected 'dyn', 'int', 'ref', or '('");
  }

  SurfaceExprPtr expr() { return assign(); }

  // assign := add (":=" assign)?
  SurfaceExprPtr assign() {
    SurfaceExprPtr lhs = add();
    if (at(Tok::ColonEq)) {
      Span sp = get().span;
      return s_assign(std::move(lhs), assign(), sp);
    }
    return lhs;
  }

  // add := app ("+" app)*
  SurfaceExprPtr add() {
    SurfaceExprPtr lhs = app();
    while (at(Tok::Plus)) {
      Span sp = get().span;
      lhs = s_add(std::move(lhs), app(), sp);
    }
    return lhs;
  }

  static bool starts_atom(Tok t) {
    return t == Tok::Int || t == Tok::Ident || t == Tok::Bang ||
           t == Tok::KwRef || t == Tok::KwFun || t == Tok::LParen;
  }

  // app := atom+
  SurfaceExprPtr app() {
    SurfaceExprPtr lhs = atom();
    while (starts_atom(peek().kind)) {
      Span sp = peek().span;
      lhs = s_app(std::move(lhs), atom(), sp);
    }
    return lhs;
  }

  SurfaceExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        const Token& tok = get();
        return s_int(tok.value, tok.span);
      }
      case Tok::Ident: {
        const Token& tok = get();
        return s_var(tok.text, tok.span);
      }
      case Tok::Bang: {
        Span sp = get().span;
        return s_deref(atom(), sp);
      }
      case Tok::KwRef: {
        Span sp = get().span;
        expect(Tok::Less, "'<'");
        SurfaceTypePtr ty = type();
        expect(Tok::Greater, "'>'");
        return s_ref(std::move(ty), atom(), sp);
      }
      case Tok::KwFun: {
        Span sp = get().span;
        expect(Tok::LParen, "'('");
        std::string param = expect(Tok::Ident, "identifier").text;
        expect(Tok::Colon, "':'");
        SurfaceTypePtr pty = type();
        expect(Tok::RParen, "')'");
        expect(Tok::Arrow, "'->'");
        SurfaceTypePtr rty = type();
        expect(Tok::LBrace, "'{'");
        SurfaceExprPtr body = expr();
        expect(Tok::RBrace, "'}'");
        return s_lam(std::move(param), std::move(pty), std::move(rty),
                     std::move(body), sp);
      }
      case Tok::LParen: {
        get();
        SurfaceExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw parse_error(t.span, std::string("unexpected ") + tok_desc(t.kind) +
                                      ", expected integer, identifier, '!', "
                                      "'ref', 'fun', or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace

SurfaceExprPtr parse_program(std::string_view source) {
  Parser p(Lexer(source).lex());
  return p.program();
}

SurfaceTypePtr parse_type(std::string_view source) {
  Parser p(Lexer(source).lex());
  return p.type_only();
}

}  // namespace gts
