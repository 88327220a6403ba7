#include "cliffcat/verify.h"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "cliffcat/characters.h"
#include "cliffcat/glhalf.h"

namespace cliffcat {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  // Records one case; the descriptions are only built on failure.
  template <typename Describe>
  void check(bool ok, Describe describe) {
    ++report_.cases;
    if (!ok) report_.failures.push_back(describe());
  }

  VerifyReport finish() {
    report_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerifyReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe_indices(HalfInt a, HalfInt b) { return "a=" + a.str() + " b=" + b.str(); }

template <typename T>
T pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

HalfInt pool_bound(const VerifyOptions& opt) { return opt.bound.shifted(2); }

}  // namespace

std::vector<HalfInt> signed_indices(HalfInt bound) {
  std::vector<HalfInt> out;
  for (std::int64_t d = -bound.doubled(); d <= bound.doubled(); d += 2) {
    out.push_back(HalfInt::from_doubled(d));
  }
  return out;
}

std::vector<HalfInt> positive_indices(HalfInt bound) {
  std::vector<HalfInt> out;
  for (std::int64_t d = 1; d <= bound.doubled(); d += 2) out.push_back(HalfInt::from_doubled(d));
  return out;
}

WedgeMonomial random_monomial(std::mt19937_64& rng, HalfInt pool, std::size_t max_each) {
  std::vector<HalfInt> pos = positive_indices(pool);
  std::uniform_int_distribution<std::size_t> count(0, max_each);
  WedgeMonomial m;
  std::size_t np = count(rng);
  std::size_t nh = count(rng);
  while (m.particles.size() < np) {
    HalfInt p = pick(rng, pos);
    if (!std::binary_search(m.particles.begin(), m.particles.end(), p)) {
      m.particles.insert(std::lower_bound(m.particles.begin(), m.particles.end(), p), p);
    }
  }
  while (m.holes.size() < nh) {
    HalfInt h = -pick(rng, pos);
    if (!std::binary_search(m.holes.begin(), m.holes.end(), h)) {
      m.holes.insert(std::lower_bound(m.holes.begin(), m.holes.end(), h), h);
    }
  }
  return m;
}

FockVector random_fock(std::mt19937_64& rng, HalfInt pool, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  FockVector x;
  std::size_t k = terms(rng);
  for (std::size_t i = 0; i < k; ++i) x.add(random_monomial(rng, pool), coeff(rng));
  return x;
}

CliffordElement random_word(std::mt19937_64& rng, HalfInt pool, std::size_t max_letters) {
  std::vector<HalfInt> idx = signed_indices(pool);
  std::uniform_int_distribution<std::size_t> letters(0, max_letters);
  std::bernoulli_distribution is_v(0.5);
  CliffordElement x = CliffordElement::scalar(1);
  std::size_t k = letters(rng);
  for (std::size_t i = 0; i < k; ++i) {
    HalfInt a = pick(rng, idx);
    x = multiply(x, is_v(rng) ? gen_v(a) : gen_w(a));
  }
  return x;
}

KVector random_kvector(std::mt19937_64& rng, std::size_t grade_max, HalfInt bound,
                       std::size_t max_terms) {
  std::vector<DominantWeight> pool = truncation(grade_max, bound);
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  KVector x;
  std::size_t k = terms(rng);
  for (std::size_t i = 0; i < k; ++i) x.add(pick(rng, pool), coeff(rng));
  return x;
}

VerifyReport check_fock_relations(const VerifyOptions& opt) {
  Recorder rec("fock-relations");
  std::mt19937_64 rng(opt.seed);
  std::vector<FockVector> pool;
  for (std::size_t i = 0; i < opt.random_cases; ++i) {
    pool.emplace_back(random_monomial(rng, pool_bound(opt)));
  }
  auto idx = signed_indices(opt.bound);
  for (const auto& x : pool) {
    for (HalfInt a : idx) {
      for (HalfInt b : idx) {
        auto input = [&] { return describe_indices(a, b) + " x=" + format_fock(x); };
        FockVector vv = apply_v(a, apply_v(b, x)) + apply_v(b, apply_v(a, x));
        rec.check(vv.is_zero(), [&] { return VerifyFailure{"vv " + input(), "0", format_fock(vv)}; });
        FockVector ww = apply_w(a, apply_w(b, x)) + apply_w(b, apply_w(a, x));
        rec.check(ww.is_zero(), [&] { return VerifyFailure{"ww " + input(), "0", format_fock(ww)}; });
        FockVector vw = apply_v(a, apply_w(b, x)) + apply_w(b, apply_v(a, x));
        FockVector want = a == b ? x : FockVector{};
        rec.check(vw == want, [&] {
          return VerifyFailure{"vw " + input(), format_fock(want), format_fock(vw)};
        });
      }
    }
  }
  for (HalfInt a : idx) {
    FockVector vac = vacuum();
    if (a.negative()) {
      rec.check(apply_v(a, vac).is_zero(), [&] {
        return VerifyFailure{"v_a|0> a=" + a.str(), "0", format_fock(apply_v(a, vac))};
      });
    } else {
      rec.check(apply_w(a, vac).is_zero(), [&] {
        return VerifyFailure{"w_a|0> a=" + a.str(), "0", format_fock(apply_w(a, vac))};
      });
    }
  }
  return rec.finish();
}

VerifyReport check_clifford_algebra(const VerifyOptions& opt) {
  Recorder rec("clifford-algebra");
  auto idx = signed_indices(opt.bound);
  for (HalfInt a : idx) {
    for (HalfInt b : idx) {
      CliffordElement vv = multiply(gen_v(a), gen_v(b)) + multiply(gen_v(b), gen_v(a));
      rec.check(vv.is_zero(), [&] {
        return VerifyFailure{"vv " + describe_indices(a, b), "0", format_clifford(vv)};
      });
      CliffordElement ww = multiply(gen_w(a), gen_w(b)) + multiply(gen_w(b), gen_w(a));
      rec.check(ww.is_zero(), [&] {
        return VerifyFailure{"ww " + describe_indices(a, b), "0", format_clifford(ww)};
      });
      CliffordElement vw = multiply(gen_v(a), gen_w(b)) + multiply(gen_w(b), gen_v(a));
      CliffordElement want = CliffordElement::scalar(a == b ? 1 : 0);
      rec.check(vw == want, [&] {
        return VerifyFailure{"vw " + describe_indices(a, b), format_clifford(want),
                             format_clifford(vw)};
      });
    }
  }

  std::mt19937_64 rng(opt.seed + 1);
  HalfInt word_pool = HalfInt::from_doubled(9);
  for (std::size_t i = 0; i < 500; ++i) {
    CliffordElement x = random_word(rng, word_pool);
    CliffordElement y = random_word(rng, word_pool);
    CliffordElement z = random_word(rng, word_pool);
    CliffordElement left = multiply(multiply(x, y), z);
    CliffordElement right = multiply(x, multiply(y, z));
    rec.check(left == right, [&] {
      return VerifyFailure{"assoc x=" + format_clifford(x) + " y=" + format_clifford(y) +
                               " z=" + format_clifford(z),
                           format_clifford(right), format_clifford(left)};
    });
    FockVector f = random_fock(rng, pool_bound(opt));
    FockVector lhs = act(multiply(x, y), f);
    FockVector rhs = act(x, act(y, f));
    rec.check(lhs == rhs, [&] {
      return VerifyFailure{"act x=" + format_clifford(x) + " y=" + format_clifford(y) +
                               " f=" + format_fock(f),
                           format_fock(rhs), format_fock(lhs)};
    });
  }

  for (std::size_t i = 0; i < opt.random_cases; ++i) {
    WedgeMonomial m = random_monomial(rng, pool_bound(opt));
    for (HalfInt a : positive_indices(opt.bound)) {
      FockVector got = act(t_element(a), FockVector(m));
      FockVector want(m, t_eigenvalue(a, m));
      rec.check(got == want, [&] {
        return VerifyFailure{"t_a a=" + a.str() + " m=" + format_monomial(m), format_fock(want),
                             format_fock(got)};
      });
    }
  }
  return rec.finish();
}

VerifyReport check_k_clifford_relations(const VerifyOptions& opt) {
  Recorder rec("k-clifford-relations");
  auto idx = signed_indices(opt.bound);
  for (const auto& lambda : truncation(opt.grade_max, opt.bound)) {
    KVector x(lambda);
    std::vector<KVector> g, e;
    for (HalfInt a : idx) {
      g.push_back(gamma(a, x));
      e.push_back(eta(a, x));
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) {
        HalfInt a = idx[i], b = idx[j];
        auto input = [&] { return describe_indices(a, b) + " on " + format_weight(lambda); };
        KVector ee = eta(a, e[j]) + eta(b, e[i]);
        rec.check(ee.is_zero(), [&] { return VerifyFailure{"eta eta " + input(), "0", format_kvector(ee)}; });
        KVector gg = gamma(a, g[j]) + gamma(b, g[i]);
        rec.check(gg.is_zero(), [&] {
          return VerifyFailure{"gamma gamma " + input(), "0", format_kvector(gg)};
        });
        KVector ge = gamma(a, e[j]) + eta(b, g[i]);
        KVector want = a == b ? x : KVector{};
        rec.check(ge == want, [&] {
          return VerifyFailure{"gamma eta " + input(), format_kvector(want), format_kvector(ge)};
        });
      }
    }
  }
  return rec.finish();
}

VerifyReport check_intertwining(const VerifyOptions& opt) {
  Recorder rec("intertwining");
  for (const auto& lambda : truncation(opt.grade_max, opt.bound)) {
    KVector x(lambda);
    FockVector fx = f_map(x);
    rec.check(f_inverse(fx) == x, [&] {
      return VerifyFailure{"f round trip " + format_weight(lambda), format_kvector(x),
                           format_kvector(f_inverse(fx))};
    });
    for (HalfInt a : signed_indices(opt.bound)) {
      FockVector lhs = f_map(gamma(a, x));
      FockVector rhs = a.positive() ? apply_v(a, fx) : apply_w(a, fx);
      rec.check(lhs == rhs, [&] {
        return VerifyFailure{"f.gamma a=" + a.str() + " on " + format_weight(lambda),
                             format_fock(rhs), format_fock(lhs)};
      });
      lhs = f_map(eta(a, x));
      rhs = a.positive() ? apply_w(a, fx) : apply_v(a, fx);
      rec.check(lhs == rhs, [&] {
        return VerifyFailure{"f.eta b=" + a.str() + " on " + format_weight(lambda),
                             format_fock(rhs), format_fock(lhs)};
      });
    }
  }
  std::mt19937_64 rng(opt.seed + 2);
  for (std::size_t i = 0; i < opt.random_cases; ++i) {
    KVector x = random_kvector(rng, opt.grade_max, opt.bound);
    KVector y = random_kvector(rng, opt.grade_max, opt.bound);
    Integer k = k_inner(x, y);
    Integer f = inner(f_map(x), f_map(y));
    rec.check(k == f, [&] {
      return VerifyFailure{"k_inner vs inner x=" + format_kvector(x) + " y=" + format_kvector(y),
                           f.str(), k.str()};
    });
  }
  return rec.finish();
}

VerifyReport check_normalize_route(const VerifyOptions& opt) {
  Recorder rec("normalize-route");
  for (const auto& lambda : truncation(opt.grade_max, opt.bound)) {
    KVector x(lambda);
    for (HalfInt a : signed_indices(opt.bound)) {
      KVector direct = gamma(a, x);
      KVector routed = gamma_via_normalize(a, x);
      rec.check(direct == routed, [&] {
        return VerifyFailure{"gamma vs normalize a=" + a.str() + " on " + format_weight(lambda),
                             format_kvector(routed), format_kvector(direct)};
      });
    }
    // normalize fixes dominant weights with sign +1
    auto n = normalize(to_raw(lambda));
    rec.check(n && n->first == 1 && n->second == lambda, [&] {
      return VerifyFailure{"normalize idempotent " + format_weight(lambda), "+1", "changed"};
    });
  }
  return rec.finish();
}

VerifyReport check_adjointness(const VerifyOptions& opt) {
  Recorder rec("adjointness");
  for (std::size_t m = 0; m <= opt.grade_max; ++m) {
    for (std::size_t n = 0; n <= opt.grade_max; ++n) {
      for (HalfInt a : signed_indices(opt.bound)) {
        std::size_t tm = a.positive() ? m + 1 : m;
        std::size_t tn = a.positive() ? n : n + 1;
        SparseMatrix g = operator_matrix(KOperator::gamma, a, m, n, opt.bound);
        SparseMatrix e = operator_matrix(KOperator::eta, a, tm, tn, opt.bound);
        rec.check(g == e.transpose(), [&] {
          return VerifyFailure{"gamma^T = eta a=" + a.str() + " grade (" + std::to_string(m) + "," +
                                   std::to_string(n) + ")",
                               "transpose", "mismatch"};
        });
        SparseMatrix ee = operator_matrix(KOperator::eta, a, m, n, opt.bound);
        if (!ee.rows.empty()) {
          std::size_t sm = a.positive() ? m - 1 : m;
          std::size_t sn = a.positive() ? n : n - 1;
          SparseMatrix ee2 = operator_matrix(KOperator::eta, a, sm, sn, opt.bound);
          if (!ee2.rows.empty()) {
            SparseMatrix sq = ee2 * ee;
            rec.check(sq.entries.empty(), [&] {
              return VerifyFailure{"eta^2 a=" + a.str(), "0", std::to_string(sq.entries.size()) + " entries"};
            });
          }
        }
      }
    }
  }
  std::mt19937_64 rng(opt.seed + 3);
  auto idx = signed_indices(opt.bound);
  for (std::size_t i = 0; i < opt.random_cases; ++i) {
    FockVector x = random_fock(rng, pool_bound(opt));
    FockVector y = random_fock(rng, pool_bound(opt));
    HalfInt a = pick(rng, idx);
    Integer lhs = inner(apply_v(a, x), y);
    Integer rhs = inner(x, apply_w(a, y));
    rec.check(lhs == rhs, [&] {
      return VerifyFailure{"<v x,y> = <x,w y> a=" + a.str(), rhs.str(), lhs.str()};
    });
  }
  return rec.finish();
}

namespace {

// Weyl dimension formula for SO(2m+1) evaluated at a rho-shifted weight:
// prod over positive roots (lambda, alpha) / (rho, alpha).
Integer weyl_dimension_so(const std::vector<HalfInt>& a) {
  std::size_t m = a.size();
  std::vector<std::int64_t> lam, rh;
  for (std::size_t i = 0; i < m; ++i) {
    lam.push_back(a[i].doubled());
    rh.push_back(static_cast<std::int64_t>(2 * i + 1));
  }
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < m; ++i) {
    num *= lam[i];
    den *= rh[i];
    for (std::size_t j = 0; j < i; ++j) {
      num *= (lam[i] + lam[j]) * (lam[i] - lam[j]);
      den *= (rh[i] + rh[j]) * (rh[i] - rh[j]);
    }
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

}  // namespace

VerifyReport check_characters(const VerifyOptions& opt) {
  Recorder rec("characters");
  std::size_t grade = std::min<std::size_t>(opt.grade_max, 2);
  HalfInt bound = std::min(opt.bound, HalfInt::from_doubled(7));

  for (std::size_t m = 0; m <= grade; ++m) {
    for (std::size_t n = 0; n <= grade; ++n) {
      auto group = weyl_elements(m, n);
      Denominators d = denominators(m, n);
      for (const auto& w : group) {
        rec.check(apply_weyl(w, d.d1) == d.d1, [&] {
          return VerifyFailure{"D1 invariant (" + std::to_string(m) + "," + std::to_string(n) + ")",
                               "invariant", "changed"};
        });
        LaurentPoly signed_d0 = d.d0;
        signed_d0 *= weyl_sign(w);
        rec.check(apply_weyl(w, d.d0) == signed_d0, [&] {
          return VerifyFailure{"D0 alternating (" + std::to_string(m) + "," + std::to_string(n) + ")",
                               "sign(w) D0", "other"};
        });
      }
      LaurentPoly alt_rho = alternating_sum(m, n, rho_even_doubled(m, n));
      rec.check(alt_rho == d.d0, [&] {
        return VerifyFailure{"denominator identity (" + std::to_string(m) + "," + std::to_string(n) + ")",
                             format_character(d.d0), format_character(alt_rho)};
      });

      for (const auto& lambda : dominant_weights(m, n, bound)) {
        std::string label = format_weight(lambda);
        LaurentPoly ch(m, n);
        bool divided = true;
        try {
          ch = euler_character(lambda);
        } catch (const NonDivisible&) {
          divided = false;
        }
        rec.check(divided, [&] { return VerifyFailure{"exact_div " + label, "divisible", "remainder"}; });
        if (!divided) continue;
        LaurentPoly alt = alternating_sum(to_raw(lambda));
        for (const auto& w : group) {
          rec.check(apply_weyl(w, ch) == ch, [&] {
            return VerifyFailure{"W-invariance " + label, "invariant", "changed"};
          });
          LaurentPoly lhs = alternating_sum(apply_weyl(w, to_raw(lambda)));
          LaurentPoly rhs = alt;
          rhs *= weyl_sign(w);
          rec.check(lhs == rhs, [&] { return VerifyFailure{"antisymmetry " + label, "sign(w) A", "other"}; });
        }
        if (n == 0) {
          Integer want = weyl_dimension_so(lambda.a);
          Integer got = ch.evaluate_at_identity();
          rec.check(got == want, [&] {
            return VerifyFailure{"Weyl dimension " + label, want.str(), got.str()};
          });
        }
      }
    }
  }
  if (grade >= 1 && bound >= HalfInt::from_doubled(3)) {
    DominantWeight lambda{{}, {HalfInt::from_doubled(3)}};
    LaurentPoly want(0, 1);
    want.add({2}, 1);
    want.add({0}, 1);
    want.add({-2}, 1);
    LaurentPoly got = euler_character(lambda);
    rec.check(got == want, [&] {
      return VerifyFailure{"Ch E((|3/2))", format_character(want), format_character(got)};
    });
  }
  return rec.finish();
}

VerifyReport check_koszul(const VerifyOptions& opt) {
  Recorder rec("koszul");
  for (std::size_t n = 1; n <= std::max<std::size_t>(opt.grade_max, 1); ++n) {
    for (std::size_t p = 0; p <= 6; ++p) {
      LaurentPoly got = koszul_check(n, p);
      LaurentPoly want = LaurentPoly::constant(0, n, p == 0 ? 1 : 0);
      rec.check(got == want, [&] {
        return VerifyFailure{"n=" + std::to_string(n) + " p=" + std::to_string(p),
                             format_character(want), format_character(got)};
      });
    }
  }
  return rec.finish();
}

VerifyReport check_glhalf(const VerifyOptions& opt) {
  Recorder rec("glhalf");
  auto pos = positive_indices(opt.bound);
  for (const auto& lambda : truncation(opt.grade_max, opt.bound)) {
    std::string label = format_weight(lambda);
    WedgeMonomial mono = f_map(lambda);
    TWeight beta = t_weight(lambda);
    for (HalfInt a : pos) {
      auto it = beta.offsets.find(a);
      std::int64_t want = 1 + (it == beta.offsets.end() ? 0 : it->second);
      std::int64_t got = t_eigenvalue(a, mono);
      rec.check(got == want, [&] {
        return VerifyFailure{"t-eigenvalue a=" + a.str() + " " + label, std::to_string(want),
                             std::to_string(got)};
      });
    }
    KVector x(lambda);
    for (HalfInt a : pos) {
      for (Direction dir : {Direction::lower, Direction::raise}) {
        std::string input = std::string(dir == Direction::lower ? "lower" : "raise") +
                            " a=" + a.str() + " " + label;
        KVector via_fock = translate_via_fock(dir, a, x);
        KVector direct = translate_direct(dir, a, x);
        rec.check(via_fock == direct, [&] {
          return VerifyFailure{"translation routes " + input, format_kvector(direct),
                               format_kvector(via_fock)};
        });
        TWeight shifted = beta;
        HalfInt up = dir == Direction::lower ? a.shifted(1) : a;
        HalfInt down = dir == Direction::lower ? a : a.shifted(1);
        shifted.shift(up, 1).shift(down, -1);
        for (const auto& [mu, c] : via_fock.terms()) {
          rec.check(t_weight(mu) == shifted, [&] {
            return VerifyFailure{"block shift " + input, "beta + beta_up - beta_down",
                                 format_weight(mu)};
          });
          rec.check(mu.m() == lambda.m() && mu.n() == lambda.n(), [&] {
            return VerifyFailure{"stability " + input, "same grade", format_weight(mu)};
          });
        }
      }
    }
  }
  std::mt19937_64 rng(opt.seed + 4);
  for (std::size_t i = 0; i < opt.random_cases; ++i) {
    FockVector f = random_fock(rng, pool_bound(opt));
    HalfInt a = pick(rng, pos);
    FockVector lhs = chevalley_apply(Direction::raise, a, chevalley_apply(Direction::lower, a, f)) -
                     chevalley_apply(Direction::lower, a, chevalley_apply(Direction::raise, a, f));
    FockVector rhs = act(t_element(a) - t_element(a.shifted(1)), f);
    rec.check(lhs == rhs, [&] {
      return VerifyFailure{"[raise, lower] a=" + a.str() + " f=" + format_fock(f), format_fock(rhs),
                           format_fock(lhs)};
    });
  }
  return rec.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "intertwine", "adjoint",
                                              "characters", "koszul", "glhalf"};
  return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "all") {
    std::vector<VerifyReport> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "clifford") {
    return {check_fock_relations(opt), check_clifford_algebra(opt), check_k_clifford_relations(opt)};
  }
  if (name == "intertwine") return {check_intertwining(opt), check_normalize_route(opt)};
  if (name == "adjoint") return {check_adjointness(opt)};
  if (name == "characters") return {check_characters(opt)};
  if (name == "koszul") return {check_koszul(opt)};
  if (name == "glhalf") return {check_glhalf(opt)};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string format_report(const VerifyReport& r, std::size_t max_failures) {
  std::ostringstream out;
  out << (r.ok() ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.cases << " cases, "
      << r.failures.size() << " failures, " << r.wall_seconds << " s";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
    const auto& f = r.failures[i];
    out << "\n  " << f.input << ": expected " << f.expected << ", got " << f.got;
  }
  if (r.failures.size() > max_failures) out << "\n  ... " << r.failures.size() - max_failures << " more";
  return out.str();
}

}  // namespace cliffcat
