#include "cliffcat/glhalf.h"

#include <algorithm>
#include <stdexcept>

namespace cliffcat {

namespace {

void require_positive(HalfInt a) {
  if (!a.positive()) throw std::invalid_argument("gl(inf/2) index must be positive, got " + a.str());
}

bool contains(const std::vector<HalfInt>& xs, HalfInt c) {
  return std::binary_search(xs.begin(), xs.end(), c);
}

std::vector<HalfInt> replaced(std::vector<HalfInt> xs, HalfInt from, HalfInt to) {
  xs.erase(std::lower_bound(xs.begin(), xs.end(), from));
  xs.insert(std::lower_bound(xs.begin(), xs.end(), to), to);
  return xs;
}

}  // namespace

TWeight& TWeight::shift(HalfInt a, std::int64_t k) {
  auto& slot = offsets[a];
  slot += k;
  if (slot == 0) offsets.erase(a);
  return *this;
}

TWeight t_weight(const DominantWeight& lambda) {
  TWeight beta;
  for (HalfInt a : lambda.a) beta.shift(a, 1);
  for (HalfInt b : lambda.b) beta.shift(b, -1);
  return beta;
}

std::int64_t t_eigenvalue(HalfInt a, const WedgeMonomial& m) {
  require_positive(a);
  return (m.contains(a) ? 1 : 0) + (m.contains(-a) ? 1 : 0);
}

bool same_block(const DominantWeight& lambda, const DominantWeight& mu) {
  return t_weight(lambda) == t_weight(mu);
}

CliffordElement chevalley_element(Direction dir, HalfInt a) {
  require_positive(a);
  HalfInt next = a.shifted(1);
  return dir == Direction::lower ? glhalf_gen(next, a) : glhalf_gen(a, next);
}

FockVector chevalley_apply(Direction dir, HalfInt a, const FockVector& x) {
  return act(chevalley_element(dir, a), x);
}

KVector translate_via_fock(Direction dir, HalfInt a, const KVector& x) {
  return f_inverse(chevalley_apply(dir, a, f_map(x)));
}

KVector translate_direct(Direction dir, HalfInt a, const KVector& x) {
  require_positive(a);
  HalfInt next = a.shifted(1);
  // lower moves an epsilon entry up (a -> a+1) and a delta entry down (a+1 -> a).
  HalfInt eps_from = dir == Direction::lower ? a : next;
  HalfInt eps_to = dir == Direction::lower ? next : a;
  KVector out;
  for (const auto& [w, c] : x.terms()) {
    if (contains(w.a, eps_from) && !contains(w.a, eps_to)) {
      out.add(DominantWeight{replaced(w.a, eps_from, eps_to), w.b}, c);
    }
    if (contains(w.b, eps_to) && !contains(w.b, eps_from)) {
      out.add(DominantWeight{w.a, replaced(w.b, eps_to, eps_from)}, c);
    }
  }
  return out;
}

KVector translation_on_k(Direction dir, HalfInt a, const KVector& x) {
  KVector via_fock = translate_via_fock(dir, a, x);
  if (!(via_fock == translate_direct(dir, a, x))) {
    throw std::logic_error("translation operator: Fock and combinatorial routes disagree");
  }
  return via_fock;
}

}  // namespace cliffcat
