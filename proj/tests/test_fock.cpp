#include <doctest.h>

#include <random>

#include "cliffcat/fock.h"
#include "cliffcat/text.h"
#include "cliffcat/verify.h"
#include "oracles.h"

using namespace cliffcat;

namespace {

WedgeMonomial mono(std::vector<std::int64_t> particles, std::vector<std::int64_t> holes) {
  WedgeMonomial m;
  for (auto d : particles) m.particles.push_back(half(d));
  for (auto d : holes) m.holes.push_back(half(d));
  m.validate();
  return m;
}

}  // namespace

TEST_CASE("vacuum") {
  FockVector vac = vacuum();
  CHECK(vac.size() == 1);
  CHECK(vac.coeff(WedgeMonomial{}) == 1);
  CHECK(vacuum_monomial().charge() == 0);
  CHECK(inner(vac, vac) == 1);
}

TEST_CASE("above_count") {
  CHECK(above_count(vacuum_monomial(), half(1)) == 0);
  CHECK(above_count(vacuum_monomial(), half(-5)) == 2);
  CHECK(above_count(mono({3}, {-1}), half(-3)) == 1);
}

TEST_CASE("above_count matches an explicit wedge") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    WedgeMonomial m = random_monomial(rng, half(15));
    oracle::Wedge w = oracle::expand(m);
    for (std::int64_t d = -15; d <= 15; d += 2) {
      auto count = std::count_if(w.factors.begin(), w.factors.end(), [&](auto x) { return x > d; });
      CHECK(above_count(m, half(d)) == count);
    }
  }
}

TEST_CASE("apply_v examples") {
  auto r = apply_v(half(1), vacuum_monomial());
  REQUIRE(r);
  CHECK(r->first == 1);
  CHECK(r->second == mono({1}, {}));

  CHECK_FALSE(apply_v(half(-5), vacuum_monomial()));

  r = apply_v(half(1), mono({3}, {}));
  REQUIRE(r);
  CHECK(r->first == -1);
  CHECK(r->second == mono({1, 3}, {}));
}

TEST_CASE("apply_w examples") {
  auto r = apply_w(half(-1), vacuum_monomial());
  REQUIRE(r);
  CHECK(r->first == 1);
  CHECK(r->second == mono({}, {-1}));

  CHECK_FALSE(apply_w(half(1), vacuum_monomial()));

  r = apply_w(half(-3), mono({}, {-1}));
  REQUIRE(r);
  CHECK(r->first == 1);
  CHECK(r->second == mono({}, {-3, -1}));

  r = apply_w(half(-3), vacuum_monomial());
  REQUIRE(r);
  CHECK(r->first == -1);
  CHECK(r->second == mono({}, {-3}));
}

TEST_CASE("generator action agrees with explicit wedge reordering") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    WedgeMonomial m = random_monomial(rng, half(15));
    for (std::int64_t d = -15; d <= 15; d += 2) {
      CHECK(apply_v(half(d), m) == oracle::wedge_v(d, m));
      CHECK(apply_w(half(d), m) == oracle::wedge_w(d, m));
    }
  }
}

TEST_CASE("vacuum annihilation") {
  for (std::int64_t d = 1; d <= 21; d += 2) {
    CHECK(apply_v(half(-d), vacuum()).is_zero());
    CHECK(apply_w(half(d), vacuum()).is_zero());
  }
}

TEST_CASE("inner product and adjointness") {
  CHECK(inner(apply_v(half(1), vacuum()), apply_v(half(3), vacuum())) == 0);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    FockVector x = random_fock(rng, half(15));
    FockVector y = random_fock(rng, half(15));
    for (std::int64_t d = -15; d <= 15; d += 2) {
      CHECK(inner(apply_v(half(d), x), y) == inner(x, apply_w(half(d), y)));
    }
  }
}

TEST_CASE("linear_combine") {
  FockVector x(mono({1}, {-3}));
  CHECK(linear_combine({{1, x}, {-1, x}}).is_zero());
  FockVector two = linear_combine({{2, vacuum()}});
  CHECK(two.coeff(WedgeMonomial{}) == 2);
  FockVector v = apply_v(half(1), vacuum());
  FockVector sum = linear_combine({{1, v}, {1, v}});
  CHECK(sum.size() == 1);
  CHECK(sum.coeff(mono({1}, {})) == 2);
}

TEST_CASE("monomial_from_vacuum gives the monomial up to sign") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    WedgeMonomial m = random_monomial(rng, half(11));
    FockVector built = monomial_from_vacuum(m);
    REQUIRE(built.size() == 1);
    Integer c = built.coeff(m);
    CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("large coefficients stay exact") {
  FockVector x(vacuum_monomial(), Integer(1) << 200);
  x += x;
  CHECK(x.coeff(WedgeMonomial{}) == (Integer(1) << 201));
}

TEST_CASE("text form round trip") {
  CHECK(format_monomial(vacuum_monomial()) == "w[|]");
  CHECK(format_monomial(mono({1, 3}, {-5, -1})) == "w[3/2,1/2 | -1/2,-5/2]");
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    FockVector x = random_fock(rng, half(11));
    CHECK(parse_fock(format_fock(x)) == x);
  }
  CHECK(format_fock(FockVector{}) == "0");
  CHECK_THROWS_AS(parse_monomial("w[1/2,3/2 |]"), ParseError);
  CHECK_THROWS_AS(parse_monomial("w[1 |]"), ParseError);
}
