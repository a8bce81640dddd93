#include "doctest.h"
#include "hilbk3/matrix.hpp"

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
}  // namespace

TEST_CASE("solve on identity returns rhs") {
  const RatMatrix id = RatMatrix::identity(4);
  const std::vector<Rat> v = {rat(1), rat(-7, 3), rat(0), rat(22)};
  CHECK(solve_unique(id, v) == v);
}

TEST_CASE("solve applied to matrix-vector product is the identity, random sizes up to 30") {
  Lcg rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const size_t n = 2 + trial % 29 + (trial >= 6 ? 15 : 0);
    RatMatrix m(n, n);
    // Random integer matrix; retry until invertible.
    do {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = rat(rng.next_in(-9, 9));
    } while (det(m) == 0);
    std::vector<Rat> x(n);
    for (auto& v : x) v = rat(rng.next_in(-50, 50), rng.next_in(1, 9));
    CHECK(solve_unique(m, m.apply(x)) == x);
  }
}

TEST_CASE("kernel vectors annihilate the matrix") {
  Lcg rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const size_t rows = 3 + trial % 4, cols = rows + 2;
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = rat(rng.next_in(-5, 5));
    const auto basis = kernel_basis(m);
    CHECK(basis.size() == cols - rank(m));
    for (const auto& v : basis) {
      for (const Rat& entry : m.apply(v)) CHECK(entry == 0);
      // canonical scaling: first nonzero entry is 1
      for (const Rat& e : v)
        if (e != 0) {
          CHECK(e == 1);
          break;
        }
    }
  }
}

TEST_CASE("rref ranks and inconsistency detection") {
  RatMatrix m{{rat(1), rat(2)}, {rat(2), rat(4)}};
  CHECK(rank(m) == 1);
  const auto s = solve(m, {rat(1), rat(3)});
  CHECK(!s.consistent);
  const auto s2 = solve(m, {rat(1), rat(2)});
  CHECK(s2.consistent);
  CHECK(s2.kernel.size() == 1);
}

TEST_CASE("determinant and inverse") {
  RatMatrix m{{rat(2), rat(1)}, {rat(7), rat(4)}};
  CHECK(det(m) == 1);
  const RatMatrix inv = inverse(m);
  CHECK(m * inv == RatMatrix::identity(2));
  CHECK(det(RatMatrix::identity(5)) == 1);
}

TEST_CASE("inertia of diagonal and hyperbolic forms") {
  RatMatrix d{{rat(2), rat(0), rat(0)},
              {rat(0), rat(-3), rat(0)},
              {rat(0), rat(0), rat(0)}};
  auto i = inertia(d);
  CHECK(i.positive == 1);
  CHECK(i.negative == 1);
  CHECK(i.zero == 1);
  // Hyperbolic plane: signature (1,1).
  RatMatrix u{{rat(0), rat(1)}, {rat(1), rat(0)}};
  auto iu = inertia(u);
  CHECK(iu.positive == 1);
  CHECK(iu.negative == 1);
}
