#include "cliffcat/fock.h"

#include <algorithm>
#include <sstream>

#include "cliffcat/text.h"

namespace cliffcat {

namespace {

bool strictly_ascending(const std::vector<HalfInt>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
}

void insert_sorted(std::vector<HalfInt>& xs, HalfInt a) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), a), a);
}

void erase_sorted(std::vector<HalfInt>& xs, HalfInt a) {
  xs.erase(std::lower_bound(xs.begin(), xs.end(), a));
}

}  // namespace

bool WedgeMonomial::contains(HalfInt a) const {
  if (a.positive()) return std::binary_search(particles.begin(), particles.end(), a);
  return !std::binary_search(holes.begin(), holes.end(), a);
}

void WedgeMonomial::validate() const {
  if (!strictly_ascending(particles) || !strictly_ascending(holes)) {
    throw std::invalid_argument("wedge monomial lists must be strictly ascending");
  }
  if (!particles.empty() && !particles.front().positive()) {
    throw std::invalid_argument("particles must be positive");
  }
  if (!holes.empty() && !holes.back().negative()) {
    throw std::invalid_argument("holes must be negative");
  }
}

FockVector::FockVector(WedgeMonomial m, Integer coeff) {
  if (coeff != 0) terms_.emplace(std::move(m), std::move(coeff));
}

Integer FockVector::coeff(const WedgeMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void FockVector::add(const WedgeMonomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void FockVector::add(WedgeMonomial&& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

WedgeMonomial vacuum_monomial() { return {}; }

FockVector vacuum() { return FockVector(vacuum_monomial()); }

std::int64_t above_count(const WedgeMonomial& m, HalfInt a) {
  auto above = [a](const std::vector<HalfInt>& xs) {
    return static_cast<std::int64_t>(xs.end() - std::upper_bound(xs.begin(), xs.end(), a));
  };
  if (a.positive()) return above(m.particles);
  // Every negative half-integer in (a, 0) is in the vacuum tail; holes remove some.
  std::int64_t sea = (-a).floor_count();
  return static_cast<std::int64_t>(m.particles.size()) + sea - above(m.holes);
}

SignedMonomial apply_v(HalfInt a, const WedgeMonomial& m) {
  if (m.contains(a)) return std::nullopt;
  int sign = parity_sign(above_count(m, a));
  WedgeMonomial out = m;
  if (a.positive()) {
    insert_sorted(out.particles, a);
  } else {
    erase_sorted(out.holes, a);
  }
  return std::make_pair(sign, std::move(out));
}

SignedMonomial apply_w(HalfInt a, const WedgeMonomial& m) {
  if (!m.contains(a)) return std::nullopt;
  int sign = parity_sign(above_count(m, a));
  WedgeMonomial out = m;
  if (a.positive()) {
    erase_sorted(out.particles, a);
  } else {
    insert_sorted(out.holes, a);
  }
  return std::make_pair(sign, std::move(out));
}

namespace {

template <typename BasisOp>
FockVector extend_linearly(const FockVector& x, BasisOp op) {
  FockVector out;
  for (const auto& [m, c] : x.terms()) {
    if (auto r = op(m)) out.add(std::move(r->second), r->first * c);
  }
  return out;
}

}  // namespace

FockVector apply_v(HalfInt a, const FockVector& x) {
  return extend_linearly(x, [a](const WedgeMonomial& m) { return apply_v(a, m); });
}

FockVector apply_w(HalfInt a, const FockVector& x) {
  return extend_linearly(x, [a](const WedgeMonomial& m) { return apply_w(a, m); });
}

Integer inner(const FockVector& x, const FockVector& y) {
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  Integer sum = 0;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

FockVector linear_combine(const std::vector<std::pair<Integer, FockVector>>& pairs) {
  FockVector out;
  for (const auto& [c, x] : pairs) {
    for (const auto& [m, d] : x.terms()) out.add(m, c * d);
  }
  return out;
}

FockVector monomial_from_vacuum(const WedgeMonomial& m) {
  m.validate();
  FockVector x = vacuum();
  for (HalfInt h : m.holes) x = apply_w(h, x);
  for (HalfInt p : m.particles) x = apply_v(p, x);
  return x;
}

std::string format_monomial(const WedgeMonomial& m) {
  auto side = [](const std::vector<HalfInt>& xs) {
    std::string s;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
      if (!s.empty()) s += ",";
      s += it->str();
    }
    return s;
  };
  std::string left = side(m.particles);
  std::string right = side(m.holes);
  std::string out = "w[" + left;
  if (!left.empty()) out += " ";
  out += "|";
  if (!right.empty()) out += " " + right;
  return out + "]";
}

namespace {

// Reads a comma-separated descending list up to (not including) `stop`.
std::vector<HalfInt> read_descending(Scanner& in, char stop) {
  std::vector<HalfInt> xs;
  if (in.peek() == stop) return xs;
  do {
    auto at = in.position();
    HalfInt h = in.half_int();
    if (!xs.empty() && !(h < xs.back())) throw ParseError(at, "entries must be strictly descending");
    xs.push_back(h);
  } while (in.consume(','));
  std::reverse(xs.begin(), xs.end());
  return xs;
}

WedgeMonomial read_monomial(Scanner& in) {
  if (!in.consume_word("w")) in.fail("expected 'w['");
  in.expect('[');
  WedgeMonomial m;
  auto at = in.position();
  m.particles = read_descending(in, '|');
  if (!m.particles.empty() && !m.particles.front().positive()) {
    throw ParseError(at, "particles must be positive");
  }
  in.expect('|');
  at = in.position();
  m.holes = read_descending(in, ']');
  if (!m.holes.empty() && !m.holes.back().negative()) throw ParseError(at, "holes must be negative");
  in.expect(']');
  return m;
}

}  // namespace

std::string format_fock(const FockVector& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << "*";
    out << format_monomial(m);
    first = false;
  }
  return out.str();
}

WedgeMonomial parse_monomial(std::string_view text) {
  Scanner in(text);
  WedgeMonomial m = read_monomial(in);
  if (!in.at_end()) in.fail("trailing characters");
  return m;
}

FockVector parse_fock(std::string_view text) {
  Scanner in(text);
  FockVector out;
  if (in.consume_word("0")) {
    if (!in.at_end()) in.fail("trailing characters");
    return out;
  }
  bool first = true;
  while (!in.at_end()) {
    int sign = 1;
    if (in.consume('-')) {
      sign = -1;
    } else if (!in.consume('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    Integer c = 1;
    if (in.peek() != 'w') {
      c = in.integer();
      in.expect('*');
    }
    out.add(read_monomial(in), sign * c);
    first = false;
  }
  if (first) in.fail("empty vector");
  return out;
}

}  // namespace cliffcat
