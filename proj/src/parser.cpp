#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "gcmonad/ast.hpp"

namespace gcmonad::lang {

namespace {

enum class Tok {
  Ident,     // lower-case identifier or keyword
  Symbol,    // capitalized identifier
  Int,
  Slash,
  ChoiceOpen,   // <|
  ChoiceClose,  // |>
  AltOp,        // [~]
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Semi,
  Arrow,  // <-
  EqEq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident:
      return "identifier";
    case Tok::Symbol:
      return "symbol";
    case Tok::Int:
      return "integer";
    case Tok::Slash:
      return "'/'";
    case Tok::ChoiceOpen:
      return "'<|'";
    case Tok::ChoiceClose:
      return "'|>'";
    case Tok::AltOp:
      return "'[~]'";
    case Tok::LBracket:
      return "'['";
    case Tok::RBracket:
      return "']'";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::Comma:
      return "','";
    case Tok::Semi:
      return "';'";
    case Tok::Arrow:
      return "'<-'";
    case Tok::EqEq:
      return "'=='";
    case Tok::End:
      return "end of input";
  }
  return "?";
}

[[noreturn]] void syntax(Pos pos, const std::string& msg) { throw SourceError(SourceError::Kind::Syntax, pos, msg); }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Pos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  auto push = [&](Tok t, std::size_t n) {
    out.push_back({t, std::string(src.substr(i, n)), pos});
    advance(n);
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (starts("<|")) {
      push(Tok::ChoiceOpen, 2);
    } else if (starts("|>")) {
      push(Tok::ChoiceClose, 2);
    } else if (starts("<-")) {
      push(Tok::Arrow, 2);
    } else if (starts("[~]")) {
      push(Tok::AltOp, 3);
    } else if (starts("==")) {
      push(Tok::EqEq, 2);
    } else if (c == '[') {
      push(Tok::LBracket, 1);
    } else if (c == ']') {
      push(Tok::RBracket, 1);
    } else if (c == '(') {
      push(Tok::LParen, 1);
    } else if (c == ')') {
      push(Tok::RParen, 1);
    } else if (c == ',') {
      push(Tok::Comma, 1);
    } else if (c == ';') {
      push(Tok::Semi, 1);
    } else if (c == '/') {
      push(Tok::Slash, 1);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t n = 1;
      while (i + n < src.size() && std::isdigit(static_cast<unsigned char>(src[i + n]))) ++n;
      push(Tok::Int, n);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 1;
      while (i + n < src.size() && (std::isalnum(static_cast<unsigned char>(src[i + n])) || src[i + n] == '_' ||
                                    src[i + n] == '\'')) {
        ++n;
      }
      push(std::isupper(static_cast<unsigned char>(c)) ? Tok::Symbol : Tok::Ident, n);
    } else {
      syntax(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "ret" || s == "do" || s == "uniform" || s == "arbitrary" || s == "true" || s == "false";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr program() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) unexpected("end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  bool keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  [[noreturn]] void unexpected(const char* wanted) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    syntax(t.pos, std::string("expected ") + wanted + ", found " + got);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) unexpected(describe(kind));
    return take();
  }

  static ExprPtr make(Pos pos, auto node) { return std::make_shared<const Expr>(Expr{std::move(node), pos}); }

  ExprPtr expr() {
    ExprPtr lhs = choice_expr();
    while (peek().kind == Tok::AltOp) {
      const Pos pos = take().pos;
      ExprPtr rhs = choice_expr();
      lhs = make(pos, Alt{lhs, rhs});
    }
    return lhs;
  }

  ExprPtr choice_expr() {
    ExprPtr lhs = primary();
    while (peek().kind == Tok::ChoiceOpen) {
      const Pos pos = take().pos;
      Prob p = probability();
      expect(Tok::ChoiceClose);
      ExprPtr rhs = primary();
      lhs = make(pos, Choice{std::move(p), lhs, rhs});
    }
    return lhs;
  }

  Prob probability() {
    const Token& num = expect(Tok::Int);
    std::string text = num.text;
    if (peek().kind == Tok::Slash) {
      take();
      text += "/" + expect(Tok::Int).text;
    }
    Rat r;
    try {
      r = Rat::parse(text);
    } catch (const ProbError& e) {
      syntax(num.pos, e.what());
    }
    if (r.sign() < 0 || r > Rat(1)) syntax(num.pos, "probability out of range [0,1]: " + r.str());
    return Prob(r);
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (keyword("ret")) {
      take();
      return make(t.pos, Ret{value()});
    }
    if (keyword("do")) {
      take();
      const Token& name = expect(Tok::Ident);
      if (is_keyword(name.text)) syntax(name.pos, "'" + name.text + "' is a keyword");
      expect(Tok::Arrow);
      ExprPtr bound = expr();
      expect(Tok::Semi);
      scope_.push_back(name.text);
      ExprPtr body = expr();
      scope_.pop_back();
      return make(t.pos, Bind{name.text, bound, body});
    }
    if (keyword("uniform") || keyword("arbitrary")) {
      const bool is_uniform = keyword("uniform");
      take();
      Value def = value();
      std::vector<Value> values = value_list();
      if (is_uniform) return make(t.pos, Uniform{std::move(def), std::move(values)});
      return make(t.pos, Arbitrary{std::move(def), std::move(values)});
    }
    if (t.kind == Tok::LParen) {
      take();
      ExprPtr e = expr();
      expect(Tok::RParen);
      return e;
    }
    unexpected("a computation (ret, do, uniform, arbitrary or '(')");
  }

  std::vector<Value> value_list() {
    expect(Tok::LBracket);
    std::vector<Value> out;
    if (peek().kind != Tok::RBracket) {
      out.push_back(value());
      while (peek().kind == Tok::Comma) {
        take();
        out.push_back(value());
      }
    }
    expect(Tok::RBracket);
    return out;
  }

  Value value() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        take();
        try {
          return Value{Literal{Outcome::integer(std::stoll(t.text))}, t.pos};
        } catch (const std::out_of_range&) {
          syntax(t.pos, "integer literal out of range: " + t.text);
        }
      }
      case Tok::Symbol:
        take();
        return Value{Literal{Outcome::symbol(t.text)}, t.pos};
      case Tok::Ident: {
        take();
        if (t.text == "true" || t.text == "false") return Value{Literal{Outcome::boolean(t.text == "true")}, t.pos};
        if (is_keyword(t.text)) syntax(t.pos, "expected a value, found keyword '" + t.text + "'");
        if (std::find(scope_.begin(), scope_.end(), t.text) == scope_.end()) {
          throw SourceError(SourceError::Kind::UnboundVariable, t.pos, "unbound variable '" + t.text + "'");
        }
        return Value{VarRef{t.text}, t.pos};
      }
      case Tok::LParen: {
        take();
        Value lhs = value();
        expect(Tok::EqEq);
        Value rhs = value();
        expect(Tok::RParen);
        return Value{EqTest{std::make_shared<const Value>(std::move(lhs)), std::make_shared<const Value>(std::move(rhs))},
                     t.pos};
      }
      default:
        unexpected("a value");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(lex(text)).program(); }

}  // namespace gcmonad::lang
