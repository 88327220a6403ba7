#include <doctest.h>

#include <algorithm>
#include <random>

#include "cliffcat/glhalf.h"
#include "cliffcat/verify.h"
#include "oracles.h"

using namespace cliffcat;

namespace {

DominantWeight dw(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  DominantWeight w;
  for (auto d : a) w.a.push_back(half(d));
  for (auto d : b) w.b.push_back(half(d));
  return w;
}

TWeight offsets(std::vector<std::pair<std::int64_t, std::int64_t>> xs) {
  TWeight t;
  for (auto [d, k] : xs) t.offsets[half(d)] = k;
  return t;
}

}  // namespace

TEST_CASE("t_weight") {
  CHECK(t_weight(dw({3}, {1})) == offsets({{3, 1}, {1, -1}}));
  CHECK(t_weight(DominantWeight{}).offsets.empty());
  CHECK(t_weight(dw({1}, {1})).offsets.empty());
}

TEST_CASE("t_eigenvalue") {
  for (std::int64_t d = 1; d <= 11; d += 2) CHECK(t_eigenvalue(half(d), vacuum_monomial()) == 1);
  WedgeMonomial m = f_map(dw({3}, {1}));
  CHECK(t_eigenvalue(half(3), m) == 2);
  CHECK(t_eigenvalue(half(1), m) == 0);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    WedgeMonomial mono = random_monomial(rng, half(13));
    oracle::Wedge w = oracle::expand(mono);
    for (std::int64_t d = 1; d <= 13; d += 2) {
      auto n = std::count(w.factors.begin(), w.factors.end(), d) + std::count(w.factors.begin(), w.factors.end(), -d);
      CHECK(t_eigenvalue(half(d), mono) == n);
      CHECK(act(t_element(half(d)), FockVector(mono)) == FockVector(mono, n));
    }
  }
}

TEST_CASE("t_weight matches the eigenvalues") {
  for (const auto& lambda : truncation(3, half(9))) {
    TWeight beta = t_weight(lambda);
    for (std::int64_t d = 1; d <= 13; d += 2) {
      auto it = beta.offsets.find(half(d));
      std::int64_t offset = it == beta.offsets.end() ? 0 : it->second;
      CHECK(t_eigenvalue(half(d), f_map(lambda)) == 1 + offset);
    }
  }
}

TEST_CASE("same_block") {
  CHECK(same_block(dw({1}, {1}), dw({3}, {3})));
  CHECK_FALSE(same_block(dw({1}, {1}), dw({3}, {1})));
  CHECK_FALSE(same_block(dw({1}, {}), dw({3}, {})));
  CHECK(same_block(dw({3}, {1}), dw({3}, {1})));
  CHECK(same_block(dw({1}, {1}), DominantWeight{}));
}

TEST_CASE("chevalley_apply") {
  FockVector f = f_map(KVector(dw({1}, {})));
  CHECK(chevalley_apply(Direction::lower, half(1), f) == f_map(KVector(dw({3}, {}))));
  CHECK(chevalley_apply(Direction::lower, half(1), vacuum()).is_zero());
  CHECK(chevalley_element(Direction::lower, half(1)) == glhalf_gen(half(3), half(1)));
  CHECK(chevalley_element(Direction::raise, half(1)) == glhalf_gen(half(1), half(3)));

  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    WedgeMonomial m = random_monomial(rng, half(13));
    for (std::int64_t d = 1; d <= 11; d += 2) {
      HalfInt a = half(d);
      FockVector x(m);
      FockVector lhs = chevalley_apply(Direction::raise, a, chevalley_apply(Direction::lower, a, x)) -
                       chevalley_apply(Direction::lower, a, chevalley_apply(Direction::raise, a, x));
      CHECK(lhs == FockVector(m, t_eigenvalue(a, m) - t_eigenvalue(a.shifted(1), m)));
    }
  }
}

TEST_CASE("translation on K") {
  CHECK(translation_on_k(Direction::lower, half(1), KVector(dw({1}, {}))) == KVector(dw({3}, {})));
  CHECK(translation_on_k(Direction::lower, half(1), KVector(dw({}, {3}))) == KVector(dw({}, {1})));
  CHECK(translation_on_k(Direction::lower, half(1), KVector(dw({1, 3}, {}))).is_zero());
  CHECK(translation_on_k(Direction::raise, half(1), KVector(dw({3}, {}))) == KVector(dw({1}, {})));

  for (const auto& lambda : truncation(3, half(9))) {
    for (std::int64_t d = 1; d <= 7; d += 2) {
      for (Direction dir : {Direction::lower, Direction::raise}) {
        KVector x(lambda);
        KVector y = translate_via_fock(dir, half(d), x);
        CHECK(y == translate_direct(dir, half(d), x));
        for (const auto& [mu, c] : y.terms()) {
          CHECK(c == 1);
          CHECK(mu.m() == lambda.m());
          CHECK(mu.n() == lambda.n());
        }
      }
    }
  }
}
