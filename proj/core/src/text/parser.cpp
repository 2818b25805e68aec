#include "weylgb/text/parser.hpp"

#include <cctype>
#include <vector>

#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

enum class Tok { Number, Symbol, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
  // Symbol tokens: letter and index (0 when the symbol takes none).
  char letter = 0;
  std::size_t index = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw SyntaxError(i, "expected a denominator");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::Number, start, s.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      const std::string word = s.substr(start, i - start);
      Token t{Tok::Symbol, start, word};
      if (word == "h" || word == "a" || word == "b") {
        t.letter = word[0];
      } else if ((word[0] == 'x' || word[0] == 'y' || word[0] == 'd' || word[0] == 'c') && word.size() > 1 &&
                 word.find_first_not_of("0123456789", 1) == std::string::npos && word[1] != '0') {
        t.letter = word[0];
        t.index = std::stoul(word.substr(1));
      } else {
        throw UnknownSymbol(start, word);
      }
      out.push_back(t);
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw UnknownSymbol(start, std::string(1, ch));
    }
    out.push_back({k, start, std::string(1, ch)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, WeylContextPtr ctx) : toks_(std::move(toks)), ctx_(std::move(ctx)) {}

  WeylElement run() {
    WeylElement e = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().offset, "expected an operator or end of input");
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  WeylElement expr() {
    WeylElement acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      WeylElement rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  WeylElement term() {
    WeylElement acc = unary();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * unary();
    }
    return acc;
  }

  WeylElement unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    return power();
  }

  WeylElement power() {
    WeylElement base = atom();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& t = peek();
    if (t.kind != Tok::Number || t.text.find('/') != std::string::npos)
      throw SyntaxError(t.offset, "expected a non-negative integer exponent");
    next();
    if (t.text.size() > 6) throw SyntaxError(t.offset, "exponent too large");
    if (peek().kind == Tok::Caret) throw SyntaxError(peek().offset, "chained exponents need parentheses");
    return base.pow(static_cast<unsigned>(std::stoul(t.text)));
  }

  WeylElement atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        const auto slash = t.text.find('/');
        if (slash != std::string::npos && t.text.find_first_not_of('0', slash + 1) == std::string::npos)
          throw SyntaxError(t.offset + slash + 1, "zero denominator");
        return WeylElement(ctx_, ParamScalar(Rational::parse(t.text)));
      }
      case Tok::Symbol: next(); return symbol(t);
      case Tok::LParen: {
        next();
        WeylElement e = expr();
        if (peek().kind != Tok::RParen) throw SyntaxError(peek().offset, "expected ')'");
        next();
        return e;
      }
      case Tok::End: throw SyntaxError(t.offset, "unexpected end of input");
      default: throw SyntaxError(t.offset, "unexpected '" + t.text + "'");
    }
  }

  WeylElement symbol(const Token& t) {
    const std::size_t n = ctx_->nvars();
    switch (t.letter) {
      case 'a': return WeylElement(ctx_, ParamScalar::a());
      case 'b': return WeylElement(ctx_, ParamScalar::b());
      case 'c': return WeylElement(ctx_, ParamScalar::c(t.index));
      case 'h':
        if (!ctx_->homogenized()) throw UnknownSymbol(t.offset, t.text);
        return WeylElement::h(ctx_);
      default: break;
    }
    if (t.index > n) throw UnknownSymbol(t.offset, t.text);
    if (t.letter == 'd') return WeylElement::d(ctx_, t.index - 1);
    if (ctx_->coord(t.index - 1) != t.text) throw UnknownSymbol(t.offset, t.text);
    return WeylElement::x(ctx_, t.index - 1);
  }

  std::vector<Token> toks_;
  WeylContextPtr ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement parse_operator(const std::string& text, const ParseOptions& options) {
  std::vector<Token> toks = tokenize(text);
  std::size_t n = 0;
  bool has_h = false;
  std::optional<char> letter;
  for (const Token& t : toks) {
    if (t.kind != Tok::Symbol) continue;
    if (t.letter == 'h') has_h = true;
    if (t.letter == 'x' || t.letter == 'y') {
      if (letter && *letter != t.letter) throw UnknownSymbol(t.offset, t.text);
      letter = t.letter;
    }
    if (t.letter == 'x' || t.letter == 'y' || t.letter == 'd') n = std::max(n, t.index);
  }
  const std::string coord = options.coord ? *options.coord : std::string(1, letter.value_or('x'));
  const bool homogenized = options.homogenized.value_or(has_h);
  const std::size_t nvars = options.nvars.value_or(std::max<std::size_t>(n, 1));
  return Parser(std::move(toks), WeylContext::make(nvars, homogenized, coord)).run();
}

WeylElement parse_operator(const std::string& text, const WeylContextPtr& ctx) {
  return Parser(tokenize(text), ctx).run();
}

}  // namespace weylgb
