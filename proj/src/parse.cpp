#include <cctype>
#include <string>

#include "rootpoly/errors.hpp"
#include "rootpoly/scalar.hpp"

// Recursive-descent parser for the canonical scalar grammar emitted by
// Scalar::to_string. Accepted forms include "2g/(1+g)" style implicit
// products only via '*', half exponents as q^(1/2), and negative exponents
// as q^(-1) or q^-1.

namespace rp {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input at '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar v = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  Scalar factor() {
    if (eat('-')) return -factor();
    Scalar base = primary();
    if (eat('^')) {
      auto [num, den] = exponent();
      if (den == 1) return scalar_pow(base, num);
      if (den == 2) return scalar_pow(base.sqrt(), num);
      throw ParseError("exponent denominator must be 1 or 2");
    }
    return base;
  }

  std::pair<long, long> exponent() {
    if (eat('(')) {
      long n = integer();
      long d = 1;
      if (eat('/')) d = integer();
      if (!eat(')')) throw ParseError("expected ')' in exponent");
      return {n, d};
    }
    return {integer(), 1};
  }

  long integer() {
    skip_ws();
    bool neg = eat('-');
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  Scalar primary() {
    skip_ws();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) throw ParseError("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(rat_from_string(s_.substr(start, pos_ - start)));
    }
    if (pos_ < s_.size() &&
        (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Scalar::variable(s_.substr(start, pos_ - start));
    }
    throw ParseError("unexpected character at '" + s_.substr(pos_) + "'");
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  return Parser(text).parse();
}

}  // namespace rp
