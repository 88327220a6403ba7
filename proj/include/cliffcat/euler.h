#pragma once

// Grothendieck-group side: Euler classes E(lambda) of SOSP(2m+1, 2n) for
// dominant weights lambda, the induction/restriction shadows gamma^a and
// eta_b, and the map f into the Fock space.
//
// Sign conventions. gamma^a and eta_b are normalized so that f carries
// E(lambda) to its wedge monomial with coefficient +1 and
//   f . gamma^a = v_a . f (a > 0),   f . gamma^a = w_a . f (a < 0),
//   f . eta_b   = w_b . f (b > 0),   f . eta_b   = v_b . f (b < 0).
// On the epsilon side this is the Weyl-normalized sign (-1)^{#{a_j > a}}.
// On the delta side the sign also counts the occupied negative indices above
// -c (c the inserted or removed entry). The purely Weyl-normalized operators
// (sort signature of the inserted weight times sgn(a)^m) are available as
// gamma_weyl / eta_weyl. The two families are conjugate under the diagonal
// sign wedge_sign().

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffcat/fock.h"

namespace cliffcat {

struct DominantWeight {
  std::vector<HalfInt> a;  // epsilon coefficients, strictly ascending, positive
  std::vector<HalfInt> b;  // delta coefficients, strictly ascending, positive

  std::size_t m() const { return a.size(); }
  std::size_t n() const { return b.size(); }

  void validate() const;

  /// Orders by (m, n) first, then lexicographically.
  friend bool operator<(const DominantWeight& x, const DominantWeight& y);
  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

/// An arbitrary weight in Lambda_{m,n}; a[i] is the coefficient of epsilon_{i+1}.
struct RawWeight {
  std::vector<HalfInt> a;
  std::vector<HalfInt> b;

  friend bool operator==(const RawWeight&, const RawWeight&) = default;
};

/// sign * E(weight); nullopt when E vanishes.
using SignedWeight = std::optional<std::pair<int, DominantWeight>>;

class KVector {
 public:
  using Terms = std::map<DominantWeight, Integer>;

  KVector() = default;
  explicit KVector(DominantWeight w, Integer c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(const DominantWeight& w) const;

  void add(const DominantWeight& w, const Integer& c);
  void add(DominantWeight&& w, const Integer& c);
  KVector& operator+=(const KVector& other);
  KVector& operator-=(const KVector& other);
  KVector& operator*=(const Integer& c);

  friend KVector operator+(KVector x, const KVector& y) { return x += y; }
  friend KVector operator-(KVector x, const KVector& y) { return x -= y; }
  friend KVector operator*(const Integer& c, KVector x) { return x *= c; }
  friend bool operator==(const KVector&, const KVector&) = default;

 private:
  Terms terms_;
};

/// Weyl normalization: E(w(lambda)) = sign(w) E(lambda), and E = 0 when
/// lambda is fixed by an odd element of the Weyl group of B_m x C_n.
SignedWeight normalize(const RawWeight& rw);

/// The raw weight whose positions list the dominant entries in order.
RawWeight to_raw(const DominantWeight& w);

// Basis-level operators.
SignedWeight gamma(HalfInt a, const DominantWeight& w);
SignedWeight eta(HalfInt b, const DominantWeight& w);
SignedWeight gamma_weyl(HalfInt a, const DominantWeight& w);
SignedWeight eta_weyl(HalfInt b, const DominantWeight& w);
SignedWeight gamma_via_normalize(HalfInt a, const DominantWeight& w);

/// (-1)^{sum(b_j - 1/2) + n(n-1)/2}: the diagonal change of basis relating the
/// Weyl-normalized operators to the wedge-normalized ones.
int wedge_sign(const DominantWeight& w);

KVector gamma(HalfInt a, const KVector& x);
KVector eta(HalfInt b, const KVector& x);
KVector gamma_weyl(HalfInt a, const KVector& x);
KVector eta_weyl(HalfInt b, const KVector& x);
KVector gamma_via_normalize(HalfInt a, const KVector& x);

WedgeMonomial f_map(const DominantWeight& w);
DominantWeight f_inverse(const WedgeMonomial& m);
FockVector f_map(const KVector& x);
KVector f_inverse(const FockVector& v);

Integer k_inner(const KVector& x, const KVector& y);

/// Dominant weights of grade (m, n) with all entries <= bound, in canonical order.
std::vector<DominantWeight> dominant_weights(std::size_t m, std::size_t n, HalfInt bound);
/// All grades (m, n) with m, n <= grade_max.
std::vector<DominantWeight> truncation(std::size_t grade_max, HalfInt bound);

enum class KOperator { gamma, eta };

struct SparseMatrix {
  std::vector<DominantWeight> rows;
  std::vector<DominantWeight> cols;
  std::map<std::pair<std::size_t, std::size_t>, Integer> entries;

  SparseMatrix transpose() const;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// rows x cols product; requires lhs.cols == rhs.rows.
SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs);

/// Matrix of gamma(a) / eta(a) from grade (m, n) restricted to entries <= bound.
/// Throws std::out_of_range when |a| > bound.
SparseMatrix operator_matrix(KOperator op, HalfInt a, std::size_t m, std::size_t n, HalfInt bound);

// Text forms. Weights print as (a_m,...,a_1|b_1,...,b_n).
std::string format_weight(const DominantWeight& w);
std::string format_kvector(const KVector& x);
/// Dominant mode: epsilon side strictly descending, delta side strictly ascending.
DominantWeight parse_dominant_weight(std::string_view text);
/// Raw mode: any half-integers; read in display order (epsilon side reversed).
RawWeight parse_raw_weight(std::string_view text);
/// "+1*(5/2,3/2|) -2*(|1/2)" or "0".
KVector parse_kvector(std::string_view text);

}  // namespace cliffcat
