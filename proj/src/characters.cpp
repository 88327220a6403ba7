#include "cliffcat/characters.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

namespace cliffcat {

bool GradedLex::operator()(const ExponentVector& x, const ExponentVector& y) const {
  std::int64_t dx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
  std::int64_t dy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
  if (dx != dy) return dx < dy;
  return x < y;
}

LaurentPoly LaurentPoly::constant(std::size_t m, std::size_t n, const Integer& c) {
  return monomial(m, n, ExponentVector(m + n, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t m, std::size_t n, ExponentVector e, const Integer& c) {
  if (e.size() != m + n) throw std::invalid_argument("exponent vector has the wrong length");
  LaurentPoly p(m, n);
  p.add(e, c);
  return p;
}

Integer LaurentPoly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add(const ExponentVector& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_shape(const LaurentPoly& other) const {
  if (m_ != other.m_ || n_ != other.n_) {
    throw std::invalid_argument("Laurent polynomials live in different ambient ranks");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_shape(other);
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_shape(other);
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  x.check_shape(y);
  LaurentPoly out(x.m_, x.n_);
  ExponentVector e(x.m_ + x.n_);
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ex[k] + ey[k];
      out.add(e, cx * cy);
    }
  }
  return out;
}

Integer LaurentPoly::evaluate_at_identity() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

namespace {

struct BlockElement {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  int sign;
};

// Signed permutations of one block, with their determinants.
std::vector<BlockElement> block_elements(std::size_t k) {
  std::vector<BlockElement> out;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    int perm_sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (perm[i] > perm[j]) perm_sign = -perm_sign;
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      BlockElement el{perm, std::vector<int>(k, 1), perm_sign};
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::uint64_t{1} << i)) {
          el.signs[i] = -1;
          el.sign = -el.sign;
        }
      }
      out.push_back(std::move(el));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int block_sign(const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) s = -s;
    }
    s *= signs[i];
  }
  return s;
}

template <typename T>
std::vector<T> apply_block(const std::vector<std::size_t>& perm, const std::vector<int>& signs,
                           const std::vector<T>& x) {
  std::vector<T> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[perm[i]] = signs[i] < 0 ? -x[i] : x[i];
  return out;
}

// The images of one block of a weight under all signed permutations.
std::vector<std::pair<int, ExponentVector>> block_orbit(const ExponentVector& x) {
  std::vector<std::pair<int, ExponentVector>> out;
  for (const auto& el : block_elements(x.size())) {
    out.emplace_back(el.sign, apply_block(el.perm, el.signs, x));
  }
  return out;
}

}  // namespace

std::vector<SignedPermPair> weyl_elements(std::size_t m, std::size_t n) {
  auto eps = block_elements(m);
  auto del = block_elements(n);
  std::vector<SignedPermPair> out;
  out.reserve(eps.size() * del.size());
  for (const auto& e : eps) {
    for (const auto& d : del) out.push_back(SignedPermPair{e.perm, e.signs, d.perm, d.signs});
  }
  return out;
}

int weyl_sign(const SignedPermPair& w) {
  return block_sign(w.eps_perm, w.eps_signs) * block_sign(w.delta_perm, w.delta_signs);
}

RawWeight apply_weyl(const SignedPermPair& w, const RawWeight& lambda) {
  if (lambda.a.size() != w.eps_perm.size() || lambda.b.size() != w.delta_perm.size()) {
    throw std::invalid_argument("Weyl element and weight have different ranks");
  }
  return RawWeight{apply_block(w.eps_perm, w.eps_signs, lambda.a),
                   apply_block(w.delta_perm, w.delta_signs, lambda.b)};
}

LaurentPoly apply_weyl(const SignedPermPair& w, const LaurentPoly& p) {
  std::size_t m = p.m();
  if (m != w.eps_perm.size() || p.n() != w.delta_perm.size()) {
    throw std::invalid_argument("Weyl element and polynomial have different ranks");
  }
  LaurentPoly out(p.m(), p.n());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector eps(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m));
    ExponentVector del(e.begin() + static_cast<std::ptrdiff_t>(m), e.end());
    ExponentVector image = apply_block(w.eps_perm, w.eps_signs, eps);
    ExponentVector dimage = apply_block(w.delta_perm, w.delta_signs, del);
    image.insert(image.end(), dimage.begin(), dimage.end());
    out.add(image, c);
  }
  return out;
}

LaurentPoly alternating_sum(std::size_t m, std::size_t n, const ExponentVector& doubled,
                            unsigned workers) {
  if (doubled.size() != m + n) throw std::invalid_argument("weight has the wrong length");
  ExponentVector eps(doubled.begin(), doubled.begin() + static_cast<std::ptrdiff_t>(m));
  ExponentVector del(doubled.begin() + static_cast<std::ptrdiff_t>(m), doubled.end());
  auto eps_orbit = block_orbit(eps);
  auto del_orbit = block_orbit(del);

  // W is a product of the two block groups, so each term is a pair of block images.
  auto accumulate_range = [&](std::size_t begin, std::size_t end, LaurentPoly& acc) {
    ExponentVector e(m + n);
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [se, ve] = eps_orbit[i];
      std::copy(ve.begin(), ve.end(), e.begin());
      for (const auto& [sd, vd] : del_orbit) {
        std::copy(vd.begin(), vd.end(), e.begin() + static_cast<std::ptrdiff_t>(m));
        acc.add(e, se * sd);
      }
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(eps_orbit.size())));
  if (workers == 1) {
    LaurentPoly out(m, n);
    accumulate_range(0, eps_orbit.size(), out);
    return out;
  }
  std::vector<LaurentPoly> partial(workers, LaurentPoly(m, n));
  std::vector<std::thread> threads;
  std::size_t chunk = (eps_orbit.size() + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    std::size_t begin = std::min(eps_orbit.size(), t * chunk);
    std::size_t end = std::min(eps_orbit.size(), begin + chunk);
    threads.emplace_back(accumulate_range, begin, end, std::ref(partial[t]));
  }
  for (auto& th : threads) th.join();
  LaurentPoly out(m, n);
  for (const auto& p : partial) out += p;
  return out;
}

LaurentPoly alternating_sum(const RawWeight& lambda, unsigned workers) {
  ExponentVector doubled;
  for (HalfInt x : lambda.a) doubled.push_back(x.doubled());
  for (HalfInt x : lambda.b) doubled.push_back(x.doubled());
  return alternating_sum(lambda.a.size(), lambda.b.size(), doubled, workers);
}

RootData positive_roots(std::size_t m, std::size_t n) {
  RootData r;
  auto unit = [m, n](std::size_t k) {
    std::vector<std::int64_t> v(m + n, 0);
    v[k] = 1;
    return v;
  };
  auto combine = [](std::vector<std::int64_t> x, const std::vector<std::int64_t>& y, int s) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += s * y[k];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) r.even.push_back(unit(i));
  for (std::size_t j = 0; j < n; ++j) r.even.push_back(combine(unit(m + j), unit(m + j), 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      r.even.push_back(combine(unit(i), unit(j), 1));
      r.even.push_back(combine(unit(i), unit(j), -1));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      r.even.push_back(combine(unit(m + i), unit(m + j), 1));
      r.even.push_back(combine(unit(m + i), unit(m + j), -1));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    r.odd.push_back(unit(m + j));
    for (std::size_t i = 0; i < m; ++i) {
      r.odd.push_back(combine(unit(m + j), unit(i), 1));
      r.odd.push_back(combine(unit(m + j), unit(i), -1));
    }
  }
  return r;
}

Denominators denominators(std::size_t m, std::size_t n) {
  RootData roots = positive_roots(m, n);
  // e^{alpha/2} has doubled exponent vector alpha.
  auto factor = [m, n](const std::vector<std::int64_t>& alpha, int s) {
    ExponentVector neg(alpha.size());
    std::transform(alpha.begin(), alpha.end(), neg.begin(), std::negate<>());
    return LaurentPoly::monomial(m, n, alpha) + LaurentPoly::monomial(m, n, neg, s);
  };
  Denominators d{LaurentPoly::constant(m, n, 1), LaurentPoly::constant(m, n, 1)};
  for (const auto& alpha : roots.even) d.d0 = d.d0 * factor(alpha, -1);
  for (const auto& alpha : roots.odd) d.d1 = d.d1 * factor(alpha, 1);
  return d;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (num.m() != den.m() || num.n() != den.n()) {
    throw std::invalid_argument("Laurent polynomials live in different ambient ranks");
  }
  LaurentPoly quotient(num.m(), num.n());
  if (num.is_zero()) return quotient;

  auto diff = [](const ExponentVector& x, const ExponentVector& y) {
    ExponentVector d(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) d[k] = x[k] - y[k];
    return d;
  };
  const auto& [den_lead, den_lc] = *den.terms().rbegin();
  // In an exact division trail(num) = trail(q) * trail(den), so every
  // quotient exponent is at least this.
  ExponentVector lowest = diff(num.terms().begin()->first, den.terms().begin()->first);
  GradedLex less;

  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const auto& [lead, lc] = *rem.terms().rbegin();
    ExponentVector t = diff(lead, den_lead);
    if (less(t, lowest)) throw NonDivisible();
    if (lc % den_lc != 0) throw NonDivisible();
    Integer c = lc / den_lc;
    quotient.add(t, c);
    ExponentVector e(t.size());
    for (const auto& [de, dc] : den.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = t[k] + de[k];
      rem.add(e, -c * dc);
    }
  }
  return quotient;
}

LaurentPoly euler_character(const DominantWeight& lambda) {
  lambda.validate();
  Denominators d = denominators(lambda.m(), lambda.n());
  LaurentPoly numerator = d.d1 * alternating_sum(to_raw(lambda));
  return exact_div(numerator, d.d0);
}

namespace {

ExponentVector half_sum_doubled(std::size_t m, std::size_t n, bool include_odd) {
  RootData roots = positive_roots(m, n);
  // 2 * (1/2 sum even - 1/2 sum odd)
  ExponentVector out(m + n, 0);
  for (const auto& a : roots.even) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[k];
  }
  if (include_odd) {
    for (const auto& a : roots.odd) {
      for (std::size_t k = 0; k < out.size(); ++k) out[k] -= a[k];
    }
  }
  return out;
}

}  // namespace

RawWeight rho(std::size_t m, std::size_t n) {
  ExponentVector d = half_sum_doubled(m, n, true);
  RawWeight r;
  for (std::size_t i = 0; i < m; ++i) r.a.push_back(HalfInt::from_doubled(d[i]));
  for (std::size_t j = 0; j < n; ++j) r.b.push_back(HalfInt::from_doubled(d[m + j]));
  return r;
}

ExponentVector rho_even_doubled(std::size_t m, std::size_t n) { return half_sum_doubled(m, n, false); }

namespace {

// Sum over size-k index multisets (repeats allowed or not) of the product
// of the chosen variables.
void symmetric_sum(const std::vector<ExponentVector>& vars, std::size_t k, bool repeats,
                   std::size_t start, ExponentVector& acc, LaurentPoly& out) {
  if (k == 0) {
    out.add(acc, 1);
    return;
  }
  for (std::size_t i = start; i < vars.size(); ++i) {
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += vars[i][t];
    symmetric_sum(vars, k - 1, repeats, repeats ? i : i + 1, acc, out);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] -= vars[i][t];
  }
}

}  // namespace

LaurentPoly koszul_check(std::size_t n, std::size_t p) {
  if (n == 0) throw std::invalid_argument("koszul_check requires n >= 1");
  std::vector<ExponentVector> vars;
  for (std::size_t j = 0; j < n; ++j) {
    ExponentVector x(n, 0);
    x[j] = 2;
    vars.push_back(x);
    x[j] = -2;
    vars.push_back(x);
  }
  LaurentPoly total(0, n);
  for (std::size_t k = 0; k <= p; ++k) {
    LaurentPoly ek(0, n), hl(0, n);
    ExponentVector acc(n, 0);
    symmetric_sum(vars, k, false, 0, acc, ek);
    symmetric_sum(vars, p - k, true, 0, acc, hl);
    LaurentPoly term = ek * hl;
    if (k % 2 == 1) term *= -1;
    total += term;
  }
  return total;
}

namespace {

std::string exponent_term(std::int64_t doubled, const std::string& var) {
  std::int64_t mag = doubled < 0 ? -doubled : doubled;
  std::string coeff;
  if (mag % 2 == 1) {
    coeff = std::to_string(mag) + "/2 ";
  } else if (mag != 2) {
    coeff = std::to_string(mag / 2) + " ";
  }
  return coeff + var;
}

}  // namespace

std::string format_character(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    if (constant) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    std::string inner;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      std::string var = k < p.m() ? "e" + std::to_string(k + 1) : "d" + std::to_string(k - p.m() + 1);
      std::string body = exponent_term(e[k], var);
      if (inner.empty()) {
        inner = (e[k] < 0 ? "-" : "") + body;
      } else {
        inner += (e[k] < 0 ? " - " : " + ") + body;
      }
    }
    out << "e^{" << inner << "}";
  }
  return out.str();
}

}  // namespace cliffcat
