#include "splinedim/parser.hpp"

#include <cctype>
#include <string>

#include "splinedim/errors.hpp"

namespace splinedim {

namespace {

class Parser {
 public:
  Parser(std::string_view src, VarsPtr vars) : src_(src), vars_(std::move(vars)) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) {
      if (peek() == '/') throw ParseError("division is not supported", pos_);
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(' ||
          std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = accept('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_space();
    if (!at_end() && peek() == '/') throw ParseError("division is not supported", pos_);
    return acc;
  }

  Integer natural(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  int exponent() {
    skip_space();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("exponent must be a non-negative integer", start);
    Integer e = natural("exponent");
    if (!at_end() && (peek() == '.' || peek() == '/'))
      throw ParseError("exponent must be a non-negative integer", start);
    if (e > 10000) throw ParseError("exponent too large", start);
    return static_cast<int>(e.get_si());
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      if (accept('^')) inner = pow(inner, exponent());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = natural("integer");
      if (!at_end() && peek() == '.') throw ParseError("decimal coefficients are not supported", pos_);
      Rational value(num);
      skip_space();
      if (!at_end() && peek() == '/') {
        const std::size_t slash = pos_;
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("division is not supported", slash);
        Integer den = natural("denominator");
        if (den == 0) throw ParseError("zero denominator", slash + 1);
        value = Rational(num, den);
        value.canonicalize();
      }
      return Polynomial::constant(value, vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      const std::size_t index = vars_->index_of(name);
      if (index == vars_->size()) throw ParseError("unknown variable '" + name + "'", start);
      int e = 1;
      if (accept('^')) e = exponent();
      return Polynomial::monomial(Monomial::variable(index, e), 1, vars_);
    }
    if (c == '-') throw ParseError("unary minus is only allowed at the start of an expression", pos_);
    if (c == '/') throw ParseError("division is not supported", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view src_;
  VarsPtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view source, VarsPtr vars) { return Parser(source, std::move(vars)).run(); }

}  // namespace splinedim
