#include "germ/parser.hpp"

#include <cctype>
#include <optional>

#include "germ/errors.hpp"

namespace germ {

namespace {

enum class Tok { ident, number, plus, minus, star, caret, slash, lparen, rparen, semi, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::slash: return "'/'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::semi: return "';'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token tok{Tok::end, {}, line, col};
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      tok.kind = Tok::ident;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Tok::number;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else {
      switch (c) {
        case '+': tok.kind = Tok::plus; break;
        case '-': tok.kind = Tok::minus; break;
        case '*': tok.kind = Tok::star; break;
        case '^': tok.kind = Tok::caret; break;
        case '/': tok.kind = Tok::slash; break;
        case '(': tok.kind = Tok::lparen; break;
        case ')': tok.kind = Tok::rparen; break;
        case ';': tok.kind = Tok::semi; break;
        case ',': tok.kind = Tok::comma; break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") +
                                          static_cast<char>(c) + "'");
      }
      tok.text = std::string(1, static_cast<char>(c));
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  out.push_back({Tok::end, {}, line, col});
  return out;
}

bool is_keyword(const std::string& s) { return s == "vars" || s == "assume"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  IdealFile file() {
    IdealFile out;
    expect_keyword("vars");
    std::vector<std::string> names;
    do {
      const Token& t = expect(Tok::ident);
      if (is_keyword(t.text)) fail(t, "'" + t.text + "' is reserved");
      for (const auto& n : names)
        if (n == t.text) fail(t, "duplicate variable '" + t.text + "'");
      names.push_back(t.text);
    } while (accept(Tok::comma));
    expect(Tok::semi);
    vars_ = VarList(std::move(names));
    out.variables = vars_;

    while (peek().kind != Tok::end) {
      if (peek().kind == Tok::ident && peek().text == "assume") {
        next();
        const Token& what = expect(Tok::ident);
        if (what.text != "pure_dimensional")
          fail(what, "unknown directive 'assume " + what.text + "'");
        expect(Tok::semi);
        out.assume_pure_dimensional = true;
        continue;
      }
      const Token& start = peek();
      Polynomial g = expr();
      expect(Tok::semi);
      if (g.is_zero()) fail(start, "generator is the zero polynomial");
      out.generators.push_back(std::move(g));
    }
    if (out.generators.empty()) fail(peek(), "empty generator list");
    return out;
  }

  Polynomial single(const VarList& vars) {
    vars_ = vars;
    Polynomial p = expr();
    if (peek().kind == Tok::semi) next();
    if (peek().kind != Tok::end) fail(peek(), std::string("unexpected ") + describe(peek().kind));
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k) {
    if (peek().kind != k)
      fail(peek(), std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    return next();
  }
  void expect_keyword(const char* kw) {
    const Token& t = peek();
    if (t.kind != Tok::ident || t.text != kw) fail(t, std::string("expected '") + kw + "'");
    next();
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = next().kind == Tok::minus;
      Polynomial rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept(Tok::star)) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept(Tok::caret)) {
      const Token& e = expect(Tok::number);
      if (e.text.size() > 6) fail(e, "exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return b;
  }

  Polynomial base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::ident: {
        next();
        std::size_t idx = vars_.index_of(t.text);
        if (idx == vars_.size()) fail(t, "unknown identifier '" + t.text + "'");
        return Polynomial::variable(vars_, idx);
      }
      case Tok::number: {
        next();
        Integer num(t.text);
        Rational value(num);
        if (accept(Tok::slash)) {
          const Token& den = expect(Tok::number);
          Integer d(den.text);
          if (d == 0) fail(den, "zero denominator");
          value = Rational(num, d);
          value.canonicalize();
        }
        return Polynomial::constant(vars_, value);
      }
      case Tok::lparen: {
        next();
        Polynomial inner = expr();
        expect(Tok::rparen);
        return inner;
      }
      case Tok::minus:
        next();
        return -factor();
      default:
        fail(t, std::string("expected an operand, found ") + describe(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarList vars_;
};

}  // namespace

IdealFile parse_ideal(std::string_view text) { return Parser(text).file(); }

Polynomial parse_polynomial(std::string_view text, const VarList& vars) {
  return Parser(text).single(vars);
}

std::string print_ideal(const IdealFile& ideal) {
  std::string out = "vars ";
  for (std::size_t i = 0; i < ideal.variables.size(); ++i) {
    if (i != 0) out += ", ";
    out += ideal.variables[i];
  }
  out += ";\n";
  for (const auto& g : ideal.generators) out += g.to_string() + ";\n";
  if (ideal.assume_pure_dimensional) out += "assume pure_dimensional;\n";
  return out;
}

}  // namespace germ
