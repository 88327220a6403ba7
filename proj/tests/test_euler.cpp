#include <doctest.h>

#include <random>

#include "cliffcat/euler.h"
#include "cliffcat/text.h"
#include "cliffcat/verify.h"
#include "oracles.h"

using namespace cliffcat;

namespace {

DominantWeight dw(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  DominantWeight w;
  for (auto d : a) w.a.push_back(half(d));
  for (auto d : b) w.b.push_back(half(d));
  w.validate();
  return w;
}

RawWeight rw(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  RawWeight w;
  for (auto d : a) w.a.push_back(half(d));
  for (auto d : b) w.b.push_back(half(d));
  return w;
}

SignedWeight sw(int sign, DominantWeight w) { return std::make_pair(sign, w); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// gamma / eta pushed through f and the explicit-wedge oracle.
KVector through_wedge(bool creates, HalfInt a, const DominantWeight& w) {
  bool is_v = creates == a.positive();
  FockVector image = oracle::apply(is_v, a.doubled(), FockVector(f_map(w)));
  return f_inverse(image);
}

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(normalize(rw({-1, 5}, {})) == sw(-1, dw({1, 5}, {})));
  CHECK_FALSE(normalize(rw({3, 3}, {})));
  CHECK_FALSE(normalize(rw({3, -3}, {})));
  CHECK(normalize(rw({3, 1}, {})) == sw(-1, dw({1, 3}, {})));
  CHECK(normalize(rw({}, {-1})) == sw(-1, dw({}, {1})));
}

TEST_CASE("gamma examples") {
  CHECK(gamma(half(5), dw({3}, {})) == sw(1, dw({3, 5}, {})));
  CHECK(gamma(half(1), dw({3}, {})) == sw(-1, dw({1, 3}, {})));
  CHECK_FALSE(gamma(half(3), dw({3}, {})));
  CHECK(gamma(half(-3), dw({}, {1})) == sw(1, dw({}, {1, 3})));
  CHECK(gamma_weyl(half(-3), dw({}, {1})) == sw(1, dw({}, {1, 3})));
}

TEST_CASE("eta examples") {
  CHECK(eta(half(3), dw({1, 3}, {})) == sw(1, dw({1}, {})));
  CHECK_FALSE(eta(half(1), dw({3}, {})));
  CHECK(eta_weyl(half(-1), dw({}, {1, 3})) == sw(-1, dw({}, {3})));
  // The wedge-normalized operator differs from the Weyl-normalized one by wedge_sign.
  CHECK(eta(half(-1), dw({}, {1, 3})) == sw(1, dw({}, {3})));
}

TEST_CASE("gamma and eta agree with the wedge oracle") {
  for (const auto& w : truncation(3, half(9))) {
    for (HalfInt a : signed_indices(half(9))) {
      KVector g = gamma(a, KVector(w));
      KVector e = eta(a, KVector(w));
      CHECK(g == through_wedge(true, a, w));
      CHECK(e == through_wedge(false, a, w));
    }
  }
}

TEST_CASE("Weyl-normalized operators are conjugate by wedge_sign") {
  for (const auto& w : truncation(3, half(9))) {
    for (HalfInt a : signed_indices(half(9))) {
      auto check = [&](SignedWeight direct, SignedWeight weyl) {
        REQUIRE(direct.has_value() == weyl.has_value());
        if (!direct) return;
        CHECK(direct->second == weyl->second);
        CHECK(direct->first * wedge_sign(w) * wedge_sign(direct->second) == weyl->first);
      };
      check(gamma(a, w), gamma_weyl(a, w));
      check(eta(a, w), eta_weyl(a, w));
    }
  }
}

TEST_CASE("gamma_via_normalize") {
  CHECK(gamma_via_normalize(half(1), dw({3}, {})) == sw(-1, dw({1, 3}, {})));
  CHECK_FALSE(gamma_via_normalize(half(3), dw({3}, {})));
  for (const auto& w : truncation(3, half(9))) {
    for (HalfInt a : signed_indices(half(9))) CHECK(gamma_via_normalize(a, w) == gamma(a, w));
  }
}

TEST_CASE("f and k_inner") {
  CHECK(f_map(DominantWeight{}) == vacuum_monomial());
  WedgeMonomial m = f_map(dw({3}, {1}));
  CHECK(m.particles == std::vector<HalfInt>{half(3)});
  CHECK(m.holes == std::vector<HalfInt>{half(-1)});
  CHECK(f_map(dw({}, {1, 5})).holes == std::vector<HalfInt>{half(-5), half(-1)});

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    KVector x = random_kvector(rng, 3, half(11));
    KVector y = random_kvector(rng, 3, half(11));
    CHECK(f_inverse(f_map(x)) == x);
    CHECK(k_inner(x, y) == inner(f_map(x), f_map(y)));
  }
  KVector l(dw({3}, {1}));
  CHECK(k_inner(l, l) == 1);
  CHECK(k_inner(l, KVector(dw({3}, {3}))) == 0);
}

TEST_CASE("truncation sizes are binomial counts") {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(dominant_weights(m, n, half(11)).size() == binomial(6, m) * binomial(6, n));
    }
  }
  CHECK(truncation(3, half(11)).size() == 42 * 42);
}

TEST_CASE("operator matrices") {
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (HalfInt a : signed_indices(half(7))) {
        SparseMatrix g = operator_matrix(KOperator::gamma, a, m, n, half(7));
        CHECK(g.cols.size() == binomial(4, m) * binomial(4, n));
        std::size_t tm = a.positive() ? m + 1 : m;
        std::size_t tn = a.positive() ? n : n + 1;
        CHECK(g.rows.size() == binomial(4, tm) * binomial(4, tn));
        CHECK(g == operator_matrix(KOperator::eta, a, tm, tn, half(7)).transpose());
      }
    }
  }
  CHECK_THROWS_AS(operator_matrix(KOperator::gamma, half(9), 1, 1, half(7)), std::out_of_range);
}

TEST_CASE("weight text forms") {
  CHECK(parse_dominant_weight("(3/2|)") == dw({3}, {}));
  CHECK(parse_dominant_weight("(5/2,3/2|1/2)") == dw({3, 5}, {1}));
  CHECK(parse_dominant_weight("(|)") == DominantWeight{});
  CHECK_THROWS_AS(parse_dominant_weight("(1/2,3/2|)"), ParseError);
  CHECK_THROWS_AS(parse_dominant_weight("(1|)"), ParseError);
  CHECK_THROWS_AS(parse_dominant_weight("(|3/2,1/2)"), ParseError);
  CHECK_THROWS_AS(parse_dominant_weight("(3/2|"), ParseError);
  CHECK_FALSE(normalize(parse_raw_weight("(3/2,3/2|)")));
  CHECK(normalize(parse_raw_weight("(1/2,3/2|)")) == sw(-1, dw({1, 3}, {})));
  for (const auto& w : truncation(3, half(11))) CHECK(parse_dominant_weight(format_weight(w)) == w);

  CHECK(format_kvector(KVector(dw({3, 5}, {}))) == "+1*(5/2,3/2|)");
  CHECK(format_kvector(KVector{}) == "0");
  KVector x = KVector(dw({3}, {}), 2) + KVector(dw({}, {1}), -1);
  CHECK(parse_kvector(format_kvector(x)) == x);
}
