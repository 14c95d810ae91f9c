// Recursive-descent parser for coframe-function source text.
//
//   expr     := ["-"] term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := atom ("^" NAT)?
//   atom     := RATIONAL | "sqrt2" | IDENT | "(" expr ")" | "exp" "(" expr ")"
//   RATIONAL := NAT ("/" NAT)?
//
// x1..x7 are the coordinates; any other identifier must be supplied an
// exact value through the parameter map (there is no division operator, so
// reciprocal quantities enter as precomputed parameter values).  The body
// of exp(...) must be a polynomial with zero constant term.
#pragma once

#include <holv/expr.hpp>

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")") {}
};

class Parser {
 public:
  using Params = std::map<std::string, KScalar>;

  static Expr parse(std::string_view src, const Params& params) {
    Parser p(src, params);
    Expr e = p.parse_expr();
    p.skip_ws();
    if (p.pos_ != src.size()) throw ParseError("trailing input", p.pos_);
    return e;
  }

 private:
  Parser(std::string_view src, const Params& params)
      : src_(src), params_(params) {}

  std::string_view src_;
  const Params& params_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  Expr parse_expr() {
    bool neg = accept('-');
    Expr acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += parse_term();
      else if (accept('-'))
        acc -= parse_term();
      else
        return acc;
    }
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    while (peek() == '*') {
      ++pos_;
      acc *= parse_factor();
    }
    return acc;
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    if (accept('^')) {
      long n = parse_nat();
      return pow(base, static_cast<int>(n));
    }
    return base;
  }

  long parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("expected a natural number", pos_);
    return std::stol(std::string(src_.substr(start, pos_ - start)));
  }

  Expr parse_atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = parse_nat();
      if (accept('/')) {
        long den = parse_nat();
        if (den == 0) throw ParseError("zero denominator", pos_);
        return Expr(KScalar::of_fraction(num, den));
      }
      return Expr(KScalar(num));
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = parse_ident();
      if (id == "sqrt2") return Expr(KScalar::sqrt2());
      if (id == "exp") {
        expect('(');
        Expr body = parse_expr();
        expect(')');
        if (!body.is_polynomial())
          throw ParseError("nested exponential", pos_);
        return Expr::exponential_term(Polynomial(KScalar(1)),
                                      body.as_polynomial());
      }
      if (id.size() == 2 && id[0] == 'x' && id[1] >= '1' && id[1] <= '7')
        return Expr::variable(id[1] - '1');
      auto it = params_.find(id);
      if (it == params_.end())
        throw ParseError("unknown identifier '" + id + "'", pos_);
      return Expr(it->second);
    }
    throw ParseError("unexpected character", pos_);
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }
};

inline Expr parse_expr(std::string_view src, const Parser::Params& params = {}) {
  return Parser::parse(src, params);
}

}  // namespace holv
