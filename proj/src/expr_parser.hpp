#pragma once

// Small recursive-descent parser shared by the scalar and rational-function
// text forms. Grammar:
//   expr    := [+|-] term {(+|-) term}
//   term    := factor {(*|/) factor}
//   factor  := primary [^ integer]
//   primary := integer | identifier | ( expr )

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wres/gauss.hpp"

namespace wres::detail {

template <class V>
class ExprParser {
 public:
  using Resolver = std::function<V(std::string_view)>;
  using Divider = std::function<V(const V&, const V&)>;

  ExprParser(std::string_view text, Resolver resolve, Divider divide)
      : text_(text), resolve_(std::move(resolve)), divide_(std::move(divide)) {}

  V parse() {
    V v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V acc;
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  V term() {
    V acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        acc = divide_(acc, factor());
      } else {
        return acc;
      }
    }
  }

  V factor() {
    V base = primary();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      V out = V(GaussRational(1));
      for (int k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  V primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational q(std::string(text_.substr(start, pos_ - start)));
      return V(GaussRational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view id = text_.substr(start, pos_ - start);
      if (id == "i") return V(GaussRational::i());
      return resolve_(id);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Resolver resolve_;
  Divider divide_;
};

}  // namespace wres::detail
