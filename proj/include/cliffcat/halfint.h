#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliffcat {

using Integer = boost::multiprecision::cpp_int;

/// An element of 1/2 + Z, stored as its (odd) double.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static HalfInt from_doubled(std::int64_t doubled) {
    if (doubled % 2 == 0) {
      throw std::invalid_argument("half-integer requires an odd numerator, got " +
                                  std::to_string(doubled) + "/2");
    }
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }

  /// Parses "p/2" with p odd (optionally signed).
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool positive() const { return doubled_ > 0; }
  constexpr bool negative() const { return doubled_ < 0; }

  HalfInt operator-() const { return from_doubled(-doubled_); }
  /// Shift by an integer amount.
  HalfInt shifted(std::int64_t k) const { return from_doubled(doubled_ + 2 * k); }
  HalfInt abs() const { return from_doubled(doubled_ < 0 ? -doubled_ : doubled_); }

  /// For a > 0: the number of positive half-integers strictly below a, i.e. a - 1/2.
  constexpr std::int64_t floor_count() const { return (doubled_ - 1) / 2; }

  std::string str() const { return std::to_string(doubled_) + "/2"; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t doubled_ = 1;
};

inline HalfInt half(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }

/// Parity sign (-1)^k.
constexpr int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace cliffcat
