#include "doctest.h"
#include "hilbk3/rational.hpp"

#include <cstdint>

using namespace hilbk3;

namespace {

// Deterministic 64-bit LCG for reproducible "random" cases.
struct Lcg {
  uint64_t s;
  explicit Lcg(uint64_t seed) : s(seed) {}
  uint64_t next() { return s = s * 6364136223846793005ull + 1442695040888963407ull; }
  long next_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

// Binary-search integer square root, the independent oracle.
Int isqrt_oracle(const Int& z) {
  Int lo = 0, hi = z + 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (mid * mid <= z)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("rational parse and print round trip") {
  CHECK(to_string(*rat_from_string("22/7")) == "22/7");
  CHECK(*rat_from_string("-6/4") == rat(-3, 2));
  CHECK(to_string(rat(-3, 2)) == "-3/2");
  CHECK(to_string(rat(5)) == "5");
  CHECK(!rat_from_string("1/0").has_value());
  CHECK(!rat_from_string("a").has_value());
  CHECK(!rat_from_string("1.5").has_value());
  CHECK(*rat_from_string("+3") == rat(3));
}

TEST_CASE("powers") {
  CHECK(qpow(rat(-6), 4) == rat(1296));
  CHECK(qpow(rat(2, 3), -2) == rat(9, 4));
  CHECK(ipow(Int(7), 0) == 1);
  CHECK(factorial(4) == 24);
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("perfect square tester agrees with binary-search oracle") {
  Lcg rng(20260810);
  int squares_seen = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    Int z;
    switch (trial % 4) {
      case 0: {  // exact squares
        Int r(rng.next_in(0, 1000000));
        z = r * r;
        break;
      }
      case 1: {  // near-squares
        Int r(rng.next_in(1, 1000000));
        z = r * r + rng.next_in(-2, 2);
        break;
      }
      case 2:
        z = Int(rng.next_in(-1000, 1000000000L));
        break;
      default:
        z = Int(rng.next_in(0, 1000000)) * Int(rng.next_in(0, 1000000));
    }
    Int root;
    const bool fast = is_perfect_square(z, &root);
    if (z < 0) {
      CHECK(!fast);
      continue;
    }
    const Int oracle = isqrt_oracle(z);
    CHECK(isqrt_floor(z) == oracle);
    const bool slow = (oracle * oracle == z);
    CHECK(fast == slow);
    if (fast) {
      CHECK(root == oracle);
      ++squares_seen;
    }
  }
  CHECK(squares_seen > 20000);
}

TEST_CASE("squarefree split") {
  CHECK(squarefree_split(Int(12)) == std::make_pair(Int(2), Int(3)));
  CHECK(squarefree_split(Int(-50)) == std::make_pair(Int(5), Int(-2)));
  CHECK(squarefree_split(Int(1)) == std::make_pair(Int(1), Int(1)));
  Lcg rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    Int x(rng.next_in(1, 10000000));
    if (trial % 2) x = -x;
    const auto [u, v] = squarefree_split(x);
    CHECK(u * u * v == x);
    // v squarefree by trial division
    Int m = abs(v);
    for (Int p = 2; p * p <= m; ++p)
      CHECK(m % (p * p) != 0);
  }
}

TEST_CASE("signed divisors") {
  auto d = signed_divisors(Int(12));
  CHECK(d.size() == 12);  // +-{1,2,3,4,6,12}
}
