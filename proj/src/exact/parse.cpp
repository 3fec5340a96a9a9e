#include "segre/exact/parse.hpp"

#include <cctype>

namespace segre::exact {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, Field f) : s_(text), vars_(vars), f_(f) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc = signed_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += signed_term();
      } else if (peek('-')) {
        ++pos_;
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial signed_term() {
    bool negate = false;
    while (peek('-') || peek('+')) {
      if (s_[pos_] == '-') negate = !negate;
      ++pos_;
    }
    Polynomial t = term();
    return negate ? -t : t;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (peek('*')) {
      ++pos_;
      acc = acc * power();
    }
    skip();
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
      fail("implicit multiplication is not allowed");
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer literal");
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
      if (peek('^')) fail("chained exponents are not allowed");
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_.size(), f_.from_rational(number()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(vars_.size(), i, f_);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  mpq_class number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    mpz_class num(std::string(s_.substr(start, pos_ - start)));
    mpz_class den = 1;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) fail("expected a denominator");
      den = mpz_class(std::string(s_.substr(ds, pos_ - ds)));
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  Field f_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables, Field f) {
  return Parser(text, variables, f).run();
}

mpq_class parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
  auto digits = [&]() {
    const std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) throw ParseError("expected digits", i);
    return mpz_class(std::string(text.substr(s, i - s)));
  };
  mpz_class num = digits(), den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits();
    if (den == 0) throw ParseError("zero denominator", i);
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters in rational literal", i);
  mpq_class q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace segre::exact
