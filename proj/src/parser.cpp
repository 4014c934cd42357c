#include "futaki/parser.hpp"

#include <cctype>
#include <string>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc(num_vars_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        Polynomial divisor = factor();
        const auto info = homogeneous_degree(divisor);
        if (info.kind == Homogeneity::zero) throw ParseError(at, "division by zero");
        if (info.kind != Homogeneity::homogeneous || info.degree != 0) {
          throw ParseError(at, "division by a non-constant");
        }
        acc = (Rational(1) / divisor.terms().begin()->second) * acc;
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    const std::string e = digits();
    if (e.empty()) fail("expected exponent");
    if (e.size() > 4) fail("exponent too large");
    const int power = std::stoi(e);
    Polynomial r = Polynomial::constant(num_vars_, 1);
    for (int i = 0; i < power; ++i) r = r * base;
    return r;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(num_vars_, Rational(BigInt(digits(), 10)));
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      const std::string idx = digits();
      if (idx.empty()) throw ParseError(at, "expected variable index after 'x'");
      if (idx.size() > 6 || std::stoul(idx) >= num_vars_) {
        throw ParseError(at, "variable x" + idx + " out of range (num_vars = " +
                                 std::to_string(num_vars_) + ")");
      }
      return Polynomial::variable(num_vars_, std::stoul(idx));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
  return Parser(text, num_vars).parse();
}

}  // namespace futaki
