#include "doctest.h"
#include "hilbk3/apoly.hpp"
#include "hilbk3/series.hpp"

using namespace hilbk3;

namespace {
struct Lcg {
  uint64_t s;
  explicit Lcg(uint64_t seed) : s(seed) {}
  uint64_t next() { return s = s * 6364136223846793005ull + 1442695040888963407ull; }
  long next_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

Series<Rat> random_unit_series(Lcg& rng) {
  Series<Rat> s;
  s.c[0] = 1;
  for (int i = 1; i <= kZOrder; ++i)
    s.c[i] = rat(rng.next_in(-20, 20), rng.next_in(1, 7));
  return s;
}
}  // namespace

TEST_CASE("series exp/log round trip and power laws") {
  Lcg rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_unit_series(rng);
    const auto t = random_unit_series(rng);
    CHECK(series_exp(series_log(s)) == s);
    CHECK(series_pow(s, rat(1)) == s);
    CHECK(series_log(s * t) == series_log(s) + series_log(t));
    const Rat p = rat(rng.next_in(-5, 5), 3), q = rat(rng.next_in(-5, 5), 2);
    CHECK(series_pow(s, p) * series_pow(s, q) == series_pow(s, p + q));
  }
}

TEST_CASE("cube root recovers a cubed series") {
  Lcg rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_unit_series(rng);
    CHECK(series_pow(s * s * s, rat(1, 3)) == s);
  }
}

TEST_CASE("series preconditions") {
  Series<Rat> s;
  s.c[0] = 2;
  CHECK_THROWS(series_log(s));
  CHECK_THROWS(series_exp(s));
}

TEST_CASE("apoly generators and truncation") {
  const APoly a1 = APoly::gen(1), a4 = APoly::gen(4);
  CHECK((a1 * a1) == apoly_parse("a1^2"));
  // weighted degree 4+4+1 = 9 exceeds the cap and truncates to zero
  CHECK((a4 * a4 * a1).is_zero());
  CHECK((a4 * a4).is_zero() == false);
  CHECK(apoly_parse("a1^2 - 2*a2").coeff(AMono{2, 0, 0, 0, 0, 0, 0, 0}) == 1);
}

TEST_CASE("apoly distributivity on random sparse triples") {
  Lcg rng(23);
  auto random_apoly = [&] {
    APoly p;
    for (int t = 0; t < 4; ++t) {
      AMono m{};
      for (int tries = 0; tries < 3; ++tries) {
        const int i = static_cast<int>(rng.next_in(0, 7));
        if (weighted_degree(m) + i + 1 <= kAWeightCap) ++m[i];
      }
      p.add(m, rat(rng.next_in(-9, 9), rng.next_in(1, 4)));
    }
    return p;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const APoly x = random_apoly(), y = random_apoly(), z = random_apoly();
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("series over apoly coefficients") {
  Series<APoly> s = Series<APoly>::one();
  s.c[1] = APoly::gen(2);
  const auto sq = s * s;
  CHECK(sq.c[1] == apoly_parse("2*a2"));
  CHECK(sq.c[2] == apoly_parse("a2^2"));
  CHECK(series_pow(sq, rat(1, 2)) == s);
}
