#include "cliffcat/clifford.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cliffcat/text.h"

namespace cliffcat {

namespace {

struct Letter {
  bool is_v;
  HalfInt index;
};

using LetterWord = std::vector<Letter>;

LetterWord letters_of(const CliffordWord& w) {
  LetterWord out;
  out.reserve(w.vs.size() + w.ws.size());
  for (HalfInt a : w.vs) out.push_back({true, a});
  for (HalfInt a : w.ws) out.push_back({false, a});
  return out;
}

// Rewrites a letter word into normal form, adding c * (normal form) to `out`.
// The worklist holds partially reduced words; each step either swaps an
// out-of-order adjacent pair (with sign) or contracts w_a v_a.
void reduce_into(LetterWord word, Integer c, CliffordElement& out) {
  std::vector<std::pair<LetterWord, Integer>> work;
  work.emplace_back(std::move(word), std::move(c));
  while (!work.empty()) {
    auto [cur, coeff] = std::move(work.back());
    work.pop_back();
    bool reduced = true;
    bool dead = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Letter& l = cur[i];
      Letter& r = cur[i + 1];
      if (l.is_v == r.is_v) {
        if (l.index == r.index) {
          dead = true;
          break;
        }
        if (l.index < r.index) {
          std::swap(l, r);
          coeff = -coeff;
          reduced = false;
          break;
        }
        continue;
      }
      if (l.is_v) continue;  // v before w is already ordered
      // w_b v_a = -v_a w_b + delta_ab
      if (l.index == r.index) {
        LetterWord contracted;
        contracted.reserve(cur.size() - 2);
        contracted.insert(contracted.end(), cur.begin(), cur.begin() + i);
        contracted.insert(contracted.end(), cur.begin() + i + 2, cur.end());
        work.emplace_back(std::move(contracted), coeff);
      }
      std::swap(l, r);
      coeff = -coeff;
      reduced = false;
      break;
    }
    if (dead) continue;
    if (!reduced) {
      work.emplace_back(std::move(cur), std::move(coeff));
      continue;
    }
    CliffordWord w;
    for (const Letter& l : cur) (l.is_v ? w.vs : w.ws).push_back(l.index);
    out.add(w, coeff);
  }
}

bool strictly_descending(const std::vector<HalfInt>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::less_equal<>()) == xs.end();
}

}  // namespace

CliffordElement CliffordElement::scalar(const Integer& c) { return CliffordElement({}, c); }

CliffordElement::CliffordElement(CliffordWord word, Integer c) {
  if (!strictly_descending(word.vs) || !strictly_descending(word.ws)) {
    throw std::invalid_argument("Clifford word is not in normal form");
  }
  if (c != 0) terms_.emplace(std::move(word), std::move(c));
}

void CliffordElement::add(const CliffordWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

CliffordElement gen_v(HalfInt a) { return CliffordElement(CliffordWord{{a}, {}}, 1); }

CliffordElement gen_w(HalfInt a) { return CliffordElement(CliffordWord{{}, {a}}, 1); }

CliffordElement multiply(const CliffordElement& x, const CliffordElement& y) {
  CliffordElement out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      LetterWord word = letters_of(wx);
      LetterWord right = letters_of(wy);
      word.insert(word.end(), right.begin(), right.end());
      reduce_into(std::move(word), cx * cy, out);
    }
  }
  return out;
}

CliffordElement commutator(const CliffordElement& x, const CliffordElement& y) {
  return multiply(x, y) - multiply(y, x);
}

FockVector act(const CliffordElement& x, const FockVector& f) {
  FockVector out;
  for (const auto& [word, c] : x.terms()) {
    for (const auto& [m, d] : f.terms()) {
      SignedMonomial cur = std::make_pair(1, m);
      for (auto it = word.ws.rbegin(); cur && it != word.ws.rend(); ++it) {
        int s = cur->first;
        cur = apply_w(*it, cur->second);
        if (cur) cur->first *= s;
      }
      for (auto it = word.vs.rbegin(); cur && it != word.vs.rend(); ++it) {
        int s = cur->first;
        cur = apply_v(*it, cur->second);
        if (cur) cur->first *= s;
      }
      if (cur) out.add(std::move(cur->second), cur->first * c * d);
    }
  }
  return out;
}

CliffordElement gl_unit(HalfInt a, HalfInt b) { return CliffordElement(CliffordWord{{a}, {b}}, 1); }

CliffordElement glhalf_gen(HalfInt a, HalfInt b) {
  if (!a.positive() || !b.positive()) {
    throw std::invalid_argument("glhalf_gen requires positive indices, got " + a.str() + ", " +
                                b.str());
  }
  return gl_unit(a, b) + gl_unit(-a, -b);
}

CliffordElement t_element(HalfInt a) { return glhalf_gen(a, a); }

std::string format_word(const CliffordWord& w) {
  if (w.is_identity()) return "1";
  auto block = [](char tag, const std::vector<HalfInt>& xs) {
    std::string s(1, tag);
    s += "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += xs[i].str();
    }
    return s + "]";
  };
  std::string out;
  if (!w.vs.empty()) out = block('v', w.vs);
  if (!w.ws.empty()) {
    if (!out.empty()) out += " ";
    out += block('w', w.ws);
  }
  return out;
}

std::string format_clifford(const CliffordElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (w.is_identity()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << format_word(w);
    }
    first = false;
  }
  return out.str();
}

namespace {

std::vector<HalfInt> read_block(Scanner& in) {
  in.expect('[');
  std::vector<HalfInt> xs;
  if (in.consume(']')) return xs;
  do {
    xs.push_back(in.half_int());
  } while (in.consume(','));
  in.expect(']');
  return xs;
}

// A product of blocks v[...] / w[...] in any order, read as the literal
// product of its letters.
CliffordElement read_product(Scanner& in) {
  CliffordElement acc = CliffordElement::scalar(1);
  bool any = false;
  while (in.peek() == 'v' || in.peek() == 'w') {
    bool is_v = in.peek() == 'v';
    in.consume(is_v ? 'v' : 'w');
    for (HalfInt a : read_block(in)) acc = multiply(acc, is_v ? gen_v(a) : gen_w(a));
    any = true;
  }
  if (!any) in.fail("expected a Clifford word");
  return acc;
}

}  // namespace

CliffordElement parse_clifford(std::string_view text) {
  Scanner in(text);
  CliffordElement out;
  bool first = true;
  while (!in.at_end()) {
    int sign = 1;
    if (in.consume('-')) {
      sign = -1;
    } else if (!in.consume('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    char c = in.peek();
    if (c == 'v' || c == 'w') {
      out += sign * read_product(in);
    } else {
      Integer k = in.integer();
      if (in.consume('*')) {
        out += (sign * k) * read_product(in);
      } else {
        out += CliffordElement::scalar(sign * k);
      }
    }
    first = false;
  }
  if (first) in.fail("empty Clifford element");
  return out;
}

}  // namespace cliffcat
