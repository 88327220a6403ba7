#pragma once

// Exact characters for SOSP(2m+1, 2n). Exponents of e^{eps_i}, e^{delta_j}
// are stored doubled so that half-integral weights stay integral.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffcat/euler.h"

namespace cliffcat {

/// Doubled exponents, epsilon block (m entries) then delta block (n entries).
using ExponentVector = std::vector<std::int64_t>;

/// Graded lexicographic order on doubled exponents, epsilon block first.
struct GradedLex {
  bool operator()(const ExponentVector& x, const ExponentVector& y) const;
};

class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, Integer, GradedLex>;

  LaurentPoly(std::size_t m, std::size_t n) : m_(m), n_(n) {}
  static LaurentPoly constant(std::size_t m, std::size_t n, const Integer& c);
  static LaurentPoly monomial(std::size_t m, std::size_t n, ExponentVector e, const Integer& c = 1);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const ExponentVector& e) const;

  void add(const ExponentVector& e, const Integer& c);
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.terms_ == y.terms_;
  }

  /// Value at the identity of the torus (all exponentials = 1): the dimension.
  Integer evaluate_at_identity() const;

 private:
  void check_shape(const LaurentPoly& other) const;

  std::size_t m_;
  std::size_t n_;
  Terms terms_;
};

/// A signed permutation on each block: entry i goes to position perm[i] with
/// sign signs[i].
struct SignedPermPair {
  std::vector<std::size_t> eps_perm;
  std::vector<int> eps_signs;
  std::vector<std::size_t> delta_perm;
  std::vector<int> delta_signs;
};

/// All 2^m m! 2^n n! elements of the Weyl group of SO(2m+1) x SP(2n).
std::vector<SignedPermPair> weyl_elements(std::size_t m, std::size_t n);
/// Determinant on the reflection representation.
int weyl_sign(const SignedPermPair& w);
/// w applied to a weight / to the exponents of a polynomial.
RawWeight apply_weyl(const SignedPermPair& w, const RawWeight& lambda);
LaurentPoly apply_weyl(const SignedPermPair& w, const LaurentPoly& p);

/// sum_w sign(w) e^{w(lambda)}. The sum may be split across `workers`
/// threads; the result does not depend on the split.
LaurentPoly alternating_sum(const RawWeight& lambda, unsigned workers = 1);
/// Same, for a weight given by doubled coordinates (m epsilon entries, n delta entries).
LaurentPoly alternating_sum(std::size_t m, std::size_t n, const ExponentVector& doubled,
                            unsigned workers = 1);

struct Denominators {
  LaurentPoly d0;  // prod over even positive roots of (e^{a/2} - e^{-a/2})
  LaurentPoly d1;  // prod over odd positive roots of (e^{a/2} + e^{-a/2})
};

/// Positive roots as integer coefficient vectors (m + n entries).
struct RootData {
  std::vector<std::vector<std::int64_t>> even;
  std::vector<std::vector<std::int64_t>> odd;
};

RootData positive_roots(std::size_t m, std::size_t n);
Denominators denominators(std::size_t m, std::size_t n);

class NonDivisible : public std::runtime_error {
 public:
  NonDivisible() : std::runtime_error("Laurent polynomial division leaves a remainder") {}
};

/// Exact quotient; throws NonDivisible if den does not divide num.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Ch E(lambda) = D1 * sum_w sign(w) e^{w(lambda)} / D0.
LaurentPoly euler_character(const DominantWeight& lambda);

/// rho_B = 1/2 sum(even positive roots) - 1/2 sum(odd positive roots).
RawWeight rho(std::size_t m, std::size_t n);
/// rho_0 = 1/2 sum(even positive roots), doubled. Its delta entries are
/// integral, so it is not a RawWeight.
ExponentVector rho_even_doubled(std::size_t m, std::size_t n);

/// sum_{k+l=p} (-1)^k e_k h_l over the 2n variables e^{+-delta_j}.
LaurentPoly koszul_check(std::size_t n, std::size_t p);

/// "e^{d1} + 1 + e^{-d1}", terms in descending graded-lex order.
std::string format_character(const LaurentPoly& p);

}  // namespace cliffcat
