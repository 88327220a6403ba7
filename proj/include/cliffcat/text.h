#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cliffcat/halfint.h"

namespace cliffcat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Cursor over a text form, with positioned errors.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  char peek();
  bool consume(char c);
  void expect(char c);
  bool consume_word(std::string_view word);

  /// [+-]digits
  Integer integer();
  /// [+-]digits/2 with odd numerator
  HalfInt half_int();

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_integer(const Integer& c);

}  // namespace cliffcat
