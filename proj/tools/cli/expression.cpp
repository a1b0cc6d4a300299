#include "cli/expression.hpp"

#include <cctype>

namespace ctsum::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_digit(std::size_t at) const {
    return at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at]));
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        const std::size_t at = ++pos_;
        const RationalFunction d = factor();
        if (d.is_zero()) throw ParseError(at, "zero denominator");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction b = base();
    if (!peek('^')) return b;
    ++pos_;
    skip_space();
    if (!peek_digit(pos_)) fail("expected an unsigned exponent");
    const std::size_t start = pos_;
    while (peek_digit(pos_)) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) throw ParseError(start, "exponent too large");
    const int e = std::stoi(digits);
    RationalFunction out(1);
    for (int i = 0; i < e; ++i) out *= b;
    return out;
  }

  RationalFunction base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'j') {
      ++pos_;
      return RationalFunction(Polynomial::identity());
    }
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && peek_digit(pos_ + 1))) {
      const std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (peek_digit(pos_)) ++pos_;
      return RationalFunction(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("expected 'j', an integer or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("position " + std::to_string(position) + ": " + message), position_(position) {}

RationalFunction parse_ratfun(std::string_view text) { return Parser(text).parse(); }

}  // namespace ctsum::cli
