#pragma once

// Fock space of semi-infinite forms.
//
// A basis wedge v_{i1} ^ v_{i2} ^ ... (i1 > i2 > ..., eventually consecutive)
// is stored by its difference from the vacuum v_{-1/2} ^ v_{-3/2} ^ ...:
// the positive indices present (particles) and the negative indices absent
// (holes). Both lists are kept ascending.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffcat/halfint.h"

namespace cliffcat {

struct WedgeMonomial {
  std::vector<HalfInt> particles;  // ascending, all > 0
  std::vector<HalfInt> holes;      // ascending, all < 0

  /// #particles - #holes.
  std::int64_t charge() const {
    return static_cast<std::int64_t>(particles.size()) - static_cast<std::int64_t>(holes.size());
  }

  /// Whether v_a occurs in the wedge.
  bool contains(HalfInt a) const;

  /// Throws std::invalid_argument unless the invariants hold.
  void validate() const;

  friend auto operator<=>(const WedgeMonomial&, const WedgeMonomial&) = default;
};

/// Signed basis image: nullopt means zero.
using SignedMonomial = std::optional<std::pair<int, WedgeMonomial>>;

class FockVector {
 public:
  using Terms = std::map<WedgeMonomial, Integer>;

  FockVector() = default;
  explicit FockVector(WedgeMonomial m, Integer coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m (0 when absent).
  Integer coeff(const WedgeMonomial& m) const;

  void add(const WedgeMonomial& m, const Integer& c);
  void add(WedgeMonomial&& m, const Integer& c);
  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const Integer& c);

  friend FockVector operator+(FockVector x, const FockVector& y) { return x += y; }
  friend FockVector operator-(FockVector x, const FockVector& y) { return x -= y; }
  friend FockVector operator*(const Integer& c, FockVector x) { return x *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

WedgeMonomial vacuum_monomial();
FockVector vacuum();

/// #{s in S(m) : s > a}, where S(m) is the index set of the wedge.
std::int64_t above_count(const WedgeMonomial& m, HalfInt a);

/// v_a acting on a single wedge (wedge at the front, then reorder).
SignedMonomial apply_v(HalfInt a, const WedgeMonomial& m);
/// w_a acting on a single wedge (contraction with the dual basis).
SignedMonomial apply_w(HalfInt a, const WedgeMonomial& m);

FockVector apply_v(HalfInt a, const FockVector& x);
FockVector apply_w(HalfInt a, const FockVector& x);

Integer inner(const FockVector& x, const FockVector& y);

FockVector linear_combine(const std::vector<std::pair<Integer, FockVector>>& pairs);

/// Builds the wedge by applying w_h (h in holes, ascending) then v_p
/// (p in particles, ascending) to the vacuum. Equals +-m.
FockVector monomial_from_vacuum(const WedgeMonomial& m);

// Text form: w[3/2,1/2 | -1/2,-5/2], both sides descending; vacuum is w[|].
std::string format_monomial(const WedgeMonomial& m);
std::string format_fock(const FockVector& x);
WedgeMonomial parse_monomial(std::string_view text);
FockVector parse_fock(std::string_view text);

}  // namespace cliffcat
