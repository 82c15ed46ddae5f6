#pragma once

// Recursive-descent parser for rational expressions over a caller-chosen
// value type. Grammar (whitespace is ignored):
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { ("*" | "/" | <implicit>) unary } ;
//   unary   = "-" unary | "+" unary | power ;
//   power   = primary [ "^" [ "-" ] integer ] ;
//   primary = integer | symbol | "(" expr ")" ;
//   symbol  = letter { letter | digit | "_" } [ "[" integer { "," integer } "]" ] ;
//
// Implicit multiplication applies when a factor is directly followed by a
// symbol or "(", so "3+2z-7z^2" parses as written.

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare {

/// A symbol occurrence: name plus optional bracketed integer indices.
struct SymbolRef {
  std::string name;
  std::vector<int> indices;
  bool indexed = false;

  std::string to_string() const {
    if (!indexed) return name;
    std::string s = name + "[";
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s + "]";
  }
};

namespace detail {

template <class Value, class Resolve, class Power>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Resolve& resolve, Power& power)
      : text_(text), resolve_(resolve), power_(power) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer() {
    const bool neg = accept('-');
    const Integer z = integer();
    if (!z.fits_sint_p()) fail("integer too large");
    const int v = static_cast<int>(z.get_si());
    return neg ? -v : v;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = v / unary();
      } else if (starts_factor()) {
        v = v * unary();
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (accept('^')) return power_(base, small_integer());
    return base;
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Value(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      SymbolRef sym;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        sym.name += text_[pos_++];
      if (accept('[')) {
        sym.indexed = true;
        sym.indices.push_back(small_integer());
        while (accept(',')) sym.indices.push_back(small_integer());
        expect(']');
      }
      return resolve_(sym);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Resolve& resolve_;
  Power& power_;
};

}  // namespace detail

/// Parses `text` into a Value. `resolve(const SymbolRef&) -> Value` maps
/// symbols; `power(const Value&, int) -> Value` implements "^". Value must be
/// constructible from Integer and support unary/binary + - * /.
template <class Value, class Resolve, class Power>
Value parse_expression(std::string_view text, Resolve&& resolve, Power&& power) {
  detail::ExpressionParser<Value, std::remove_reference_t<Resolve>, std::remove_reference_t<Power>> p(text, resolve,
                                                                                                       power);
  return p.parse();
}

}  // namespace poincare
