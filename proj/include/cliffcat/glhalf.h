#pragma once

// gl(infinity/2) inside Cl(V + W): t-weights of wedge monomials, block
// comparison, the Chevalley generators, and the translation operators they
// induce on the Grothendieck group through f.

#include <map>

#include "cliffcat/clifford.h"
#include "cliffcat/euler.h"

namespace cliffcat {

/// A t-weight stored as its offset from the vacuum weight omega:
/// offsets[a] = beta(t_a) - 1, zero offsets omitted.
struct TWeight {
  std::map<HalfInt, std::int64_t> offsets;

  /// beta_a added with multiplicity k.
  TWeight& shift(HalfInt a, std::int64_t k);
  friend bool operator==(const TWeight&, const TWeight&) = default;
};

TWeight t_weight(const DominantWeight& lambda);

/// Eigenvalue of t_a on a wedge: |{a, -a} intersect S(m)|.
std::int64_t t_eigenvalue(HalfInt a, const WedgeMonomial& m);

bool same_block(const DominantWeight& lambda, const DominantWeight& mu);

/// lower: E_{a+1,a} (particle a -> a+1); raise: E_{a,a+1}.
enum class Direction { raise, lower };

CliffordElement chevalley_element(Direction dir, HalfInt a);
FockVector chevalley_apply(Direction dir, HalfInt a, const FockVector& x);

/// f^{-1} . E . f.
KVector translate_via_fock(Direction dir, HalfInt a, const KVector& x);
/// Entry moves a <-> a+1 on the epsilon and delta sides, each with coefficient +1.
KVector translate_direct(Direction dir, HalfInt a, const KVector& x);
/// Both computations; throws std::logic_error if they disagree.
KVector translation_on_k(Direction dir, HalfInt a, const KVector& x);

}  // namespace cliffcat
