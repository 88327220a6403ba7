#include "cliffcat/euler.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cliffcat/text.h"

namespace cliffcat {

namespace {

bool strictly_ascending_positive(const std::vector<HalfInt>& xs) {
  if (!xs.empty() && !xs.front().positive()) return false;
  return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
}

std::int64_t count_below(const std::vector<HalfInt>& xs, HalfInt c) {
  return std::lower_bound(xs.begin(), xs.end(), c) - xs.begin();
}

std::int64_t count_above(const std::vector<HalfInt>& xs, HalfInt c) {
  return xs.end() - std::upper_bound(xs.begin(), xs.end(), c);
}

bool contains(const std::vector<HalfInt>& xs, HalfInt c) {
  return std::binary_search(xs.begin(), xs.end(), c);
}

std::vector<HalfInt> inserted(std::vector<HalfInt> xs, HalfInt c) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), c), c);
  return xs;
}

std::vector<HalfInt> erased(std::vector<HalfInt> xs, HalfInt c) {
  xs.erase(std::lower_bound(xs.begin(), xs.end(), c));
  return xs;
}

// Flips signs, sorts ascending; returns the accumulated sign or 0 on a repeat.
int normalize_block(std::vector<HalfInt>& xs) {
  int sign = 1;
  for (HalfInt& x : xs) {
    if (x.negative()) {
      x = -x;
      sign = -sign;
    }
  }
  // Insertion sort counting transpositions; blocks are tiny.
  for (std::size_t i = 1; i < xs.size(); ++i) {
    for (std::size_t j = i; j > 0 && xs[j] < xs[j - 1]; --j) {
      std::swap(xs[j], xs[j - 1]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return 0;
  return sign;
}

// Filled negative indices strictly between -c and 0, plus the particles:
// the number of wedge factors in front of position -c.
std::int64_t wedge_prefix(const DominantWeight& w, HalfInt c) {
  return static_cast<std::int64_t>(w.m()) + c.floor_count() - count_below(w.b, c);
}

template <typename BasisOp>
KVector extend_linearly(const KVector& x, BasisOp op) {
  KVector out;
  for (const auto& [w, c] : x.terms()) {
    if (auto r = op(w)) out.add(std::move(r->second), r->first * c);
  }
  return out;
}

}  // namespace

void DominantWeight::validate() const {
  if (!strictly_ascending_positive(a) || !strictly_ascending_positive(b)) {
    throw std::invalid_argument("dominant weight entries must be positive and strictly increasing");
  }
}

bool operator<(const DominantWeight& x, const DominantWeight& y) {
  if (x.m() != y.m()) return x.m() < y.m();
  if (x.n() != y.n()) return x.n() < y.n();
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

KVector::KVector(DominantWeight w, Integer c) {
  if (c != 0) terms_.emplace(std::move(w), std::move(c));
}

Integer KVector::coeff(const DominantWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void KVector::add(const DominantWeight& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void KVector::add(DominantWeight&& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KVector& KVector::operator+=(const KVector& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

KVector& KVector::operator-=(const KVector& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

KVector& KVector::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

SignedWeight normalize(const RawWeight& rw) {
  DominantWeight w{rw.a, rw.b};
  int sa = normalize_block(w.a);
  int sb = normalize_block(w.b);
  if (sa == 0 || sb == 0) return std::nullopt;
  return std::make_pair(sa * sb, std::move(w));
}

RawWeight to_raw(const DominantWeight& w) { return RawWeight{w.a, w.b}; }

SignedWeight gamma(HalfInt a, const DominantWeight& w) {
  if (a.positive()) {
    if (contains(w.a, a)) return std::nullopt;
    return std::make_pair(parity_sign(count_above(w.a, a)), DominantWeight{inserted(w.a, a), w.b});
  }
  HalfInt c = -a;
  if (contains(w.b, c)) return std::nullopt;
  return std::make_pair(parity_sign(wedge_prefix(w, c)), DominantWeight{w.a, inserted(w.b, c)});
}

SignedWeight eta(HalfInt b, const DominantWeight& w) {
  if (b.positive()) {
    if (!contains(w.a, b)) return std::nullopt;
    return std::make_pair(parity_sign(count_above(w.a, b)), DominantWeight{erased(w.a, b), w.b});
  }
  HalfInt c = -b;
  if (!contains(w.b, c)) return std::nullopt;
  return std::make_pair(parity_sign(wedge_prefix(w, c)), DominantWeight{w.a, erased(w.b, c)});
}

SignedWeight gamma_weyl(HalfInt a, const DominantWeight& w) {
  if (a.positive()) return gamma(a, w);
  HalfInt c = -a;
  if (contains(w.b, c)) return std::nullopt;
  // (-1)^{n-i} with i = #{b_j < c}, times the prefactor sgn(a)^m.
  auto n = static_cast<std::int64_t>(w.n());
  int sign = parity_sign(static_cast<std::int64_t>(w.m()) + n - count_below(w.b, c));
  return std::make_pair(sign, DominantWeight{w.a, inserted(w.b, c)});
}

SignedWeight eta_weyl(HalfInt b, const DominantWeight& w) {
  if (b.positive()) return eta(b, w);
  HalfInt c = -b;
  if (!contains(w.b, c)) return std::nullopt;
  // c = b_i (1-based): (-1)^{n-i}, times sgn(b)^m.
  auto n = static_cast<std::int64_t>(w.n());
  std::int64_t i = count_below(w.b, c) + 1;
  int sign = parity_sign(static_cast<std::int64_t>(w.m()) + n - i);
  return std::make_pair(sign, DominantWeight{w.a, erased(w.b, c)});
}

int wedge_sign(const DominantWeight& w) {
  std::int64_t e = 0;
  for (HalfInt x : w.b) e += x.floor_count();
  auto n = static_cast<std::int64_t>(w.n());
  e += n * (n - 1) / 2;
  return parity_sign(e);
}

SignedWeight gamma_via_normalize(HalfInt a, const DominantWeight& w) {
  RawWeight raw = to_raw(w);
  if (a.positive()) {
    raw.a.push_back(a);
    return normalize(raw);
  }
  raw.b.push_back(-a);
  auto r = normalize(raw);
  if (!r) return r;
  int prefactor = parity_sign(static_cast<std::int64_t>(w.m()));
  r->first *= prefactor * wedge_sign(w) * wedge_sign(r->second);
  return r;
}

KVector gamma(HalfInt a, const KVector& x) {
  return extend_linearly(x, [a](const DominantWeight& w) { return gamma(a, w); });
}
KVector eta(HalfInt b, const KVector& x) {
  return extend_linearly(x, [b](const DominantWeight& w) { return eta(b, w); });
}
KVector gamma_weyl(HalfInt a, const KVector& x) {
  return extend_linearly(x, [a](const DominantWeight& w) { return gamma_weyl(a, w); });
}
KVector eta_weyl(HalfInt b, const KVector& x) {
  return extend_linearly(x, [b](const DominantWeight& w) { return eta_weyl(b, w); });
}
KVector gamma_via_normalize(HalfInt a, const KVector& x) {
  return extend_linearly(x, [a](const DominantWeight& w) { return gamma_via_normalize(a, w); });
}

WedgeMonomial f_map(const DominantWeight& w) {
  WedgeMonomial m;
  m.particles = w.a;
  m.holes.reserve(w.n());
  for (auto it = w.b.rbegin(); it != w.b.rend(); ++it) m.holes.push_back(-*it);
  return m;
}

DominantWeight f_inverse(const WedgeMonomial& m) {
  DominantWeight w;
  w.a = m.particles;
  w.b.reserve(m.holes.size());
  for (auto it = m.holes.rbegin(); it != m.holes.rend(); ++it) w.b.push_back(-*it);
  return w;
}

FockVector f_map(const KVector& x) {
  FockVector out;
  for (const auto& [w, c] : x.terms()) out.add(f_map(w), c);
  return out;
}

KVector f_inverse(const FockVector& v) {
  KVector out;
  for (const auto& [m, c] : v.terms()) out.add(f_inverse(m), c);
  return out;
}

Integer k_inner(const KVector& x, const KVector& y) {
  Integer sum = 0;
  for (const auto& [w, c] : x.terms()) {
    auto it = y.terms().find(w);
    if (it != y.terms().end()) sum += c * it->second;
  }
  return sum;
}

namespace {

// Strictly ascending k-subsets of {1/2, ..., bound} in lexicographic order.
std::vector<std::vector<HalfInt>> subsets(std::size_t k, HalfInt bound) {
  std::vector<std::vector<HalfInt>> out;
  if (!bound.positive()) return k == 0 ? std::vector<std::vector<HalfInt>>{{}} : out;
  std::vector<HalfInt> pool;
  for (std::int64_t d = 1; d <= bound.doubled(); d += 2) pool.push_back(HalfInt::from_doubled(d));
  if (k > pool.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<HalfInt> s;
    s.reserve(k);
    for (auto i : idx) s.push_back(pool[i]);
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<DominantWeight> dominant_weights(std::size_t m, std::size_t n, HalfInt bound) {
  std::vector<DominantWeight> out;
  auto as = subsets(m, bound);
  auto bs = subsets(n, bound);
  out.reserve(as.size() * bs.size());
  for (const auto& a : as) {
    for (const auto& b : bs) out.push_back(DominantWeight{a, b});
  }
  return out;
}

std::vector<DominantWeight> truncation(std::size_t grade_max, HalfInt bound) {
  std::vector<DominantWeight> out;
  for (std::size_t m = 0; m <= grade_max; ++m) {
    for (std::size_t n = 0; n <= grade_max; ++n) {
      auto g = dominant_weights(m, n, bound);
      out.insert(out.end(), g.begin(), g.end());
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t;
  t.rows = cols;
  t.cols = rows;
  for (const auto& [rc, v] : entries) t.entries.emplace(std::make_pair(rc.second, rc.first), v);
  return t;
}

SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.cols != rhs.rows) throw std::invalid_argument("matrix shapes do not match");
  SparseMatrix out;
  out.rows = lhs.rows;
  out.cols = rhs.cols;
  for (const auto& [lrc, lv] : lhs.entries) {
    for (const auto& [rrc, rv] : rhs.entries) {
      if (lrc.second != rrc.first) continue;
      auto key = std::make_pair(lrc.first, rrc.second);
      Integer& slot = out.entries[key];
      slot += lv * rv;
      if (slot == 0) out.entries.erase(key);
    }
  }
  return out;
}

SparseMatrix operator_matrix(KOperator op, HalfInt a, std::size_t m, std::size_t n, HalfInt bound) {
  if (a.abs() > bound) {
    throw std::out_of_range("operator index " + a.str() + " exceeds truncation bound " + bound.str());
  }
  bool grows = op == KOperator::gamma;
  bool eps_side = a.positive();
  std::int64_t tm = static_cast<std::int64_t>(m);
  std::int64_t tn = static_cast<std::int64_t>(n);
  (eps_side ? tm : tn) += grows ? 1 : -1;

  SparseMatrix out;
  out.cols = dominant_weights(m, n, bound);
  if (tm >= 0 && tn >= 0) {
    out.rows = dominant_weights(static_cast<std::size_t>(tm), static_cast<std::size_t>(tn), bound);
  }
  for (std::size_t j = 0; j < out.cols.size(); ++j) {
    SignedWeight r = grows ? gamma(a, out.cols[j]) : eta(a, out.cols[j]);
    if (!r) continue;
    auto it = std::lower_bound(out.rows.begin(), out.rows.end(), r->second);
    if (it == out.rows.end() || !(*it == r->second)) {
      throw std::logic_error("operator image left the truncation");
    }
    out.entries.emplace(std::make_pair(static_cast<std::size_t>(it - out.rows.begin()), j), r->first);
  }
  return out;
}

std::string format_weight(const DominantWeight& w) {
  std::string out = "(";
  for (auto it = w.a.rbegin(); it != w.a.rend(); ++it) {
    if (it != w.a.rbegin()) out += ",";
    out += it->str();
  }
  out += "|";
  for (std::size_t i = 0; i < w.b.size(); ++i) {
    if (i) out += ",";
    out += w.b[i].str();
  }
  return out + ")";
}

std::string format_kvector(const KVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " ";
    out += (c < 0 ? "" : "+") + c.str() + "*" + format_weight(w);
  }
  return out;
}

namespace {

std::vector<HalfInt> read_list(Scanner& in, char stop) {
  std::vector<HalfInt> xs;
  if (in.peek() == stop) return xs;
  do {
    xs.push_back(in.half_int());
  } while (in.consume(','));
  return xs;
}

struct DisplayWeight {
  std::vector<HalfInt> eps;  // display order a_m, ..., a_1
  std::vector<HalfInt> del;  // display order b_1, ..., b_n
  std::size_t eps_at = 0;
  std::size_t del_at = 0;
};

DisplayWeight read_display(Scanner& in) {
  DisplayWeight d;
  in.expect('(');
  d.eps_at = in.position();
  d.eps = read_list(in, '|');
  in.expect('|');
  d.del_at = in.position();
  d.del = read_list(in, ')');
  in.expect(')');
  return d;
}

DominantWeight to_dominant(const DisplayWeight& d) {
  DominantWeight w;
  w.a.assign(d.eps.rbegin(), d.eps.rend());
  w.b = d.del;
  for (HalfInt x : w.a) {
    if (!x.positive()) throw ParseError(d.eps_at, "dominant entries must be positive (use --raw)");
  }
  for (HalfInt x : w.b) {
    if (!x.positive()) throw ParseError(d.del_at, "dominant entries must be positive (use --raw)");
  }
  if (std::adjacent_find(w.a.begin(), w.a.end(), std::greater_equal<>()) != w.a.end()) {
    throw ParseError(d.eps_at, "epsilon entries must be strictly descending (use --raw)");
  }
  if (std::adjacent_find(w.b.begin(), w.b.end(), std::greater_equal<>()) != w.b.end()) {
    throw ParseError(d.del_at, "delta entries must be strictly ascending (use --raw)");
  }
  return w;
}

}  // namespace

DominantWeight parse_dominant_weight(std::string_view text) {
  Scanner in(text);
  DisplayWeight d = read_display(in);
  if (!in.at_end()) in.fail("trailing characters");
  return to_dominant(d);
}

RawWeight parse_raw_weight(std::string_view text) {
  Scanner in(text);
  DisplayWeight d = read_display(in);
  if (!in.at_end()) in.fail("trailing characters");
  RawWeight rw;
  rw.a.assign(d.eps.rbegin(), d.eps.rend());
  rw.b = d.del;
  return rw;
}

KVector parse_kvector(std::string_view text) {
  Scanner in(text);
  KVector out;
  if (in.peek() == '0') {
    in.consume('0');
    if (!in.at_end()) in.fail("trailing characters");
    return out;
  }
  bool any = false;
  while (!in.at_end()) {
    Integer c = 1;
    if (in.peek() != '(') {
      c = in.integer();
      in.expect('*');
    }
    out.add(to_dominant(read_display(in)), c);
    any = true;
  }
  if (!any) in.fail("empty vector");
  return out;
}

}  // namespace cliffcat
