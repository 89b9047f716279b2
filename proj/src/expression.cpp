#include "rigidity/expression.hpp"

#include <cctype>
#include <string>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& spec)
      : text_(text), spec_(spec) {}

  RingElement run() {
    RingElement value = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return value;
  }

 private:
  RingElement expr() {
    RingElement value = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  RingElement term() {
    RingElement value = factor();
    while (true) {
      skip_space();
      if (!accept('*')) return value;
      value = value * factor();
    }
  }

  RingElement factor() {
    skip_space();
    if (accept('-')) return -factor();
    return power();
  }

  RingElement power() {
    RingElement value = atom();
    while (true) {
      skip_space();
      if (!accept('^')) return value;
      skip_space();
      if (pos_ == text_.size() || !std::isdigit(byte_at(pos_))) {
        fail("expected a nonnegative integer exponent after '^'");
      }
      const long long exponent = integer_literal();
      if (exponent > kMaxExponent) {
        fail("exponent exceeds " + std::to_string(kMaxExponent));
      }
      value = pow(value, static_cast<int>(exponent));
    }
  }

  RingElement atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(byte_at(pos_))) {
      // Collect the full literal; cpp_int handles any length.
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(byte_at(pos_))) ++pos_;
      return Int(std::string(text_.substr(start, pos_ - start))) *
             RingElement::one(spec_);
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ == text_.size() || !std::isdigit(byte_at(pos_))) {
        fail("expected a generator index after 'x'");
      }
      const long long index = integer_literal();
      if (index < 1 || index > spec_.dim()) {
        fail("generator x" + std::to_string(index) + " is outside x1..x" +
             std::to_string(spec_.dim()));
      }
      return RingElement::generator(spec_, static_cast<int>(index) - 1);
    }
    if (accept('(')) {
      RingElement value = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  // Digits only; the caller has already checked the first character.
  long long integer_literal() {
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(byte_at(pos_))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent * 1000LL) fail("integer literal too large");
      ++pos_;
    }
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(byte_at(pos_))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned char byte_at(std::size_t i) const {
    return static_cast<unsigned char>(text_[i]);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  const RingSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_expression(std::string_view text, const RingSpec& spec) {
  return Parser(text, spec).run();
}

}  // namespace rigidity
