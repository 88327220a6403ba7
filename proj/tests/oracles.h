#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cliffcat/fock.h"

namespace oracle {

// A semi-infinite wedge written out explicitly down to a fixed depth:
// doubled indices in the order they appear in v_{i1} ^ v_{i2} ^ ...
constexpr std::int64_t depth = -61;

struct Wedge {
  std::vector<std::int64_t> factors;
};

inline Wedge expand(const cliffcat::WedgeMonomial& m) {
  Wedge w;
  for (auto it = m.particles.rbegin(); it != m.particles.rend(); ++it) w.factors.push_back(it->doubled());
  for (std::int64_t d = -1; d >= depth; d -= 2) {
    bool hole = std::any_of(m.holes.begin(), m.holes.end(), [&](auto h) { return h.doubled() == d; });
    if (!hole) w.factors.push_back(d);
  }
  return w;
}

inline cliffcat::WedgeMonomial collapse(const Wedge& w) {
  cliffcat::WedgeMonomial m;
  for (std::int64_t d : w.factors) {
    if (d > 0) m.particles.push_back(cliffcat::half(d));
  }
  std::sort(m.particles.begin(), m.particles.end());
  for (std::int64_t d = depth; d <= -1; d += 2) {
    if (std::find(w.factors.begin(), w.factors.end(), d) == w.factors.end()) m.holes.push_back(cliffcat::half(d));
  }
  return m;
}

// v_a: put the factor in front, then bubble it into place one
// transposition at a time.
inline std::optional<std::pair<int, cliffcat::WedgeMonomial>> wedge_v(std::int64_t a, const cliffcat::WedgeMonomial& m) {
  Wedge w = expand(m);
  if (std::find(w.factors.begin(), w.factors.end(), a) != w.factors.end()) return std::nullopt;
  w.factors.insert(w.factors.begin(), a);
  int sign = 1;
  for (std::size_t i = 0; i + 1 < w.factors.size() && w.factors[i] < w.factors[i + 1]; ++i) {
    std::swap(w.factors[i], w.factors[i + 1]);
    sign = -sign;
  }
  return std::make_pair(sign, collapse(w));
}

// w_a: contraction, (-1)^(j-1) for the j-th factor.
inline std::optional<std::pair<int, cliffcat::WedgeMonomial>> wedge_w(std::int64_t a, const cliffcat::WedgeMonomial& m) {
  Wedge w = expand(m);
  auto it = std::find(w.factors.begin(), w.factors.end(), a);
  if (it == w.factors.end()) return std::nullopt;
  int sign = (it - w.factors.begin()) % 2 == 0 ? 1 : -1;
  w.factors.erase(it);
  return std::make_pair(sign, collapse(w));
}

inline cliffcat::FockVector apply(bool is_v, std::int64_t a, const cliffcat::FockVector& x) {
  cliffcat::FockVector out;
  for (const auto& [m, c] : x.terms()) {
    auto r = is_v ? wedge_v(a, m) : wedge_w(a, m);
    if (r) out.add(r->second, c * r->first);
  }
  return out;
}

}  // namespace oracle
