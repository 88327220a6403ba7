#pragma once

// Clifford algebra Cl(V + W) on generators v_a, w_a (a in 1/2 + Z) with
//   v_a v_b + v_b v_a = 0,  w_a w_b + w_b w_a = 0,  v_a w_b + w_b v_a = delta_ab.
// Elements are kept in normal form: every v left of every w, each block
// strictly descending.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cliffcat/fock.h"

namespace cliffcat {

struct CliffordWord {
  std::vector<HalfInt> vs;  // strictly descending
  std::vector<HalfInt> ws;  // strictly descending

  bool is_identity() const { return vs.empty() && ws.empty(); }
  friend auto operator<=>(const CliffordWord&, const CliffordWord&) = default;
};

class CliffordElement {
 public:
  using Terms = std::map<CliffordWord, Integer>;

  CliffordElement() = default;
  /// Scalar multiple of the identity word.
  static CliffordElement scalar(const Integer& c);
  /// The element c * word. The word must already be in normal form.
  CliffordElement(CliffordWord word, Integer c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const CliffordWord& w, const Integer& c);
  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(const Integer& c);

  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) { return x += y; }
  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) { return x -= y; }
  friend CliffordElement operator*(const Integer& c, CliffordElement x) { return x *= c; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  Terms terms_;
};

CliffordElement gen_v(HalfInt a);
CliffordElement gen_w(HalfInt a);

CliffordElement multiply(const CliffordElement& x, const CliffordElement& y);
CliffordElement commutator(const CliffordElement& x, const CliffordElement& y);

/// Words act right to left: the w's (rightmost first), then the v's.
FockVector act(const CliffordElement& x, const FockVector& f);

/// v_a w_b, a matrix unit of gl(infinity).
CliffordElement gl_unit(HalfInt a, HalfInt b);

/// v_a w_b + v_{-a} w_{-b}, a generator of gl(infinity/2). Requires a, b > 0.
CliffordElement glhalf_gen(HalfInt a, HalfInt b);

/// t_a = glhalf_gen(a, a).
CliffordElement t_element(HalfInt a);

// Text form: "v[3/2,1/2] w[-1/2]" for words; elements are signed sums such
// as "2*v[1/2] w[1/2] - 1". The identity word prints as "1".
std::string format_word(const CliffordWord& w);
std::string format_clifford(const CliffordElement& x);
CliffordElement parse_clifford(std::string_view text);

}  // namespace cliffcat
