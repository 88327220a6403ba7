#include "cliffcat/text.h"

#include <cctype>

namespace cliffcat {

void Scanner::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Scanner::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::consume(char c) {
  if (peek() == c) {
    ++pos_;
    return true;
  }
  return false;
}

void Scanner::expect(char c) {
  if (!consume(c)) fail(std::string("expected '") + c + "'");
}

bool Scanner::consume_word(std::string_view word) {
  skip_space();
  if (text_.substr(pos_, word.size()) == word) {
    pos_ += word.size();
    return true;
  }
  return false;
}

Integer Scanner::integer() {
  skip_space();
  std::size_t start = pos_;
  std::string digits;
  if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
    if (text_[pos_] == '-') digits.push_back('-');
    ++pos_;
  }
  std::size_t first_digit = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    digits.push_back(text_[pos_++]);
  }
  if (pos_ == first_digit) {
    pos_ = start;
    fail("expected an integer");
  }
  return Integer(digits);
}

HalfInt Scanner::half_int() {
  skip_space();
  std::size_t start = pos_;
  Integer p = integer();
  if (pos_ >= text_.size() || text_[pos_] != '/') {
    pos_ = start;
    fail("expected a half-integer p/2");
  }
  ++pos_;
  if (pos_ >= text_.size() || text_[pos_] != '2' ||
      (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
    pos_ = start;
    fail("half-integer denominator must be 2");
  }
  ++pos_;
  if (p % 2 == 0) {
    pos_ = start;
    fail("half-integer numerator must be odd");
  }
  if (p > Integer(1) << 60 || p < -(Integer(1) << 60)) {
    pos_ = start;
    fail("half-integer out of range");
  }
  return HalfInt::from_doubled(p.convert_to<std::int64_t>());
}

std::string format_integer(const Integer& c) { return c.str(); }

}  // namespace cliffcat
