#pragma once

#include "staircase/numeric.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace staircase {

/// Thrown for malformed expression text; the message carries the offset.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Recursive-descent parser for  + - * / ^  with integer literals,
/// identifiers ([A-Za-z_][A-Za-z0-9_]*) and parentheses. `Value` needs ring
/// operations and pow(Value, unsigned); '/' is accepted only when Value has
/// operator/.
template <typename Value>
class ExpressionParser {
 public:
  using Resolver = std::function<Value(std::string_view)>;
  using Literal = std::function<Value(const BigInt&)>;

  ExpressionParser(Resolver variable, Literal literal)
      : variable_(std::move(variable)), literal_(std::move(literal)) {}

  Value parse(std::string_view text) {
    text_ = text;
    pos_ = 0;
    Value v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  Value expression() {
    Value acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        if constexpr (requires(Value a, Value b) { a / b; }) {
          ++pos_;
          acc = acc / unary();
        } else {
          fail("division is not supported here");
        }
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    skip_space();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Value primary() {
    skip_space();
    if (accept('(')) {
      Value v = expression();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return literal_(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return variable_(text_.substr(start, pos_ - start));
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + what);
  }

  Resolver variable_;
  Literal literal_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace staircase
