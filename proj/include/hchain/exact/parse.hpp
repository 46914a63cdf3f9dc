#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hchain/exact/poly.hpp"

namespace hchain::exact {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Recursive-descent reader for infix expressions such as
//   "1/2*(p1^2 + p2^2) + kappa*(x1^2 + 4*x2^2) + kappa1*x1^-2"
// Products are formed in the written order, so the same grammar builds
// operators when instantiated with a noncommutative product. Division is
// restricted to single-term divisors.
template <class Product>
class Parser {
 public:
  using P = BasicPoly<Product>;
  Parser(std::string_view src, VarTablePtr vars) : s_(src), vars_(std::move(vars)) {}

  P parse() {
    P r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P expr() {
    P r = termp();
    for (;;) {
      if (eat('+'))
        r += termp();
      else if (eat('-'))
        r -= termp();
      else
        return r;
    }
  }
  P termp() {
    P r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        P d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r * d.monomial_inverse("divisor");
      } else {
        return r;
      }
    }
  }
  P unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  P power() {
    P base = atom();
    if (eat('^')) {
      int sign = 1;
      bool paren = eat('(');
      if (eat('-')) sign = -1;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start))) * sign;
      if (paren && !eat(')')) fail("expected ')'");
      if (e >= 0) return base.pow(static_cast<unsigned>(e));
      return base.monomial_inverse("base of negative power").pow(static_cast<unsigned>(-e));
    }
    return base;
  }
  P atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Scalar v(std::string(s_.substr(start, pos_ - start).empty() ? "0" : s_.substr(start, pos_ - start)));
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        std::size_t fs = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string frac(s_.substr(fs, pos_ - fs));
        if (!frac.empty()) {
          mpz_class num(frac), den = 1;
          for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
          v += Scalar(num, den);
          v.canonicalize();
        }
      }
      return P::constant(vars_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (vars_->find(name) < 0) fail("unknown symbol '" + name + "'");
      return P::symbol(vars_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  VarTablePtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class Product = CommutativeProduct>
BasicPoly<Product> parse(std::string_view src, const VarTablePtr& vars) {
  return detail::Parser<Product>(src, vars).parse();
}

}  // namespace hchain::exact
