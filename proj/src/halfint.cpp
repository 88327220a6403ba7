#include "cliffcat/halfint.h"

#include <charconv>

namespace cliffcat {

HalfInt HalfInt::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos || text.substr(slash + 1) != "2") {
    throw std::invalid_argument("expected a half-integer of the form p/2, got '" +
                                std::string(text) + "'");
  }
  auto num = text.substr(0, slash);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  std::int64_t p = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
  if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty()) {
    throw std::invalid_argument("bad numerator in '" + std::string(text) + "'");
  }
  return from_doubled(p);
}

}  // namespace cliffcat
