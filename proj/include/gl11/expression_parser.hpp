#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gl11/scalar.hpp"

namespace gl11 {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent parser for sums of products with integer powers:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ['^' int | '^' '(' int ')']
///   atom   := number | identifier | '(' expr ')'
///
/// `Policy` supplies the value type and the meaning of numbers, identifiers,
/// division and powers, so the same grammar serves scalars and algebra
/// elements. An identifier handler may consume further tokens (for example a
/// parenthesised argument list).
template <class Policy>
class ExprParser {
 public:
  using Value = typename Policy::Value;

  ExprParser(std::string_view text, Policy& policy)
      : text_(text), tokens_(tokenize(text)), policy_(policy) {}

  Value parse_all() {
    Value v = parse_expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

  Value parse_expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Value acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + parse_term();
      else if (accept('-')) acc = acc - parse_term();
      else return acc;
    }
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(char c) {
    if (peek().kind == Token::Kind::Symbol && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(peek().pos) +
                     " in \"" + std::string(text_) + "\"");
  }

  int parse_int() {
    bool neg = accept('-');
    if (peek().kind != Token::Kind::Number) fail("expected integer exponent");
    int v = std::stoi(next().text);
    return neg ? -v : v;
  }

 private:
  Value parse_term() {
    Value acc = parse_unary();
    for (;;) {
      if (accept('*')) acc = acc * parse_unary();
      else if (accept('/')) acc = policy_.divide(acc, parse_unary());
      else return acc;
    }
  }

  Value parse_unary() {
    if (accept('-')) return -parse_unary();
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_atom();
    if (!accept('^')) return base;
    int e;
    if (accept('(')) {
      e = parse_int();
      expect(')');
    } else {
      e = parse_int();
    }
    return policy_.power(base, e);
  }

  Value parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Number: {
        Rational n(next().text);
        return policy_.number(n);
      }
      case Token::Kind::Ident: {
        std::string name = next().text;
        return policy_.identifier(name, *this);
      }
      case Token::Kind::Symbol:
        if (accept('(')) {
          Value v = parse_expr();
          expect(')');
          return v;
        }
        fail("unexpected '" + t.text + "'");
      case Token::Kind::End:
        fail("unexpected end of input");
    }
    fail("unreachable");
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Policy& policy_;
};

}  // namespace gl11
