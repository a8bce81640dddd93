#include "doctest.h"
#include "hilbk3/k3.hpp"

using namespace hilbk3;

namespace {
const K3Algebra& alg() {
  static K3Algebra a(MiddleLattice::standard());
  return a;
}
}  // namespace

TEST_CASE("lattice sanity") {
  const MiddleLattice& lat = alg().lattice();
  RatMatrix g(kMiddleRank, kMiddleRank);
  for (int i = 0; i < kMiddleRank; ++i)
    for (int j = 0; j < kMiddleRank; ++j) g.at(i, j) = Rat(lat.gram[i][j]);
  CHECK(g * lat.gram_inv == RatMatrix::identity(kMiddleRank));
  const Rat d = det(g);
  CHECK((d == 1 || d == -1));
}

TEST_CASE("product: unit law, duality, top vanishing") {
  CHECK(alg().mul(K3Class::unit(), K3Class::point()) == K3Class::point());
  // e_1 . e_1^dual = [pt], oracle by direct contraction of gram against its
  // inverse.
  for (int j : {1, 5, 9, 22}) {
    const K3Class prod = alg().mul(K3Class::middle(j), alg().dual_middle(j));
    Rat expected(0);
    for (int k = 1; k <= kMiddleRank; ++k)
      expected += Rat(alg().lattice().gram[j - 1][k - 1]) *
                  alg().lattice().gram_inv.at(j - 1, k - 1);
    CHECK(prod == K3Class::point() * expected);
    CHECK(expected == 1);
  }
  CHECK(alg().mul(K3Class::point(), K3Class::point()).is_zero());
  CHECK(alg().mul(K3Class::point(), K3Class::middle(3)).is_zero());
}

TEST_CASE("counit") {
  CHECK(alg().counit(K3Class::point()) == rat(-1));
  CHECK(alg().counit(K3Class::unit()) == 0);
  CHECK(alg().counit(K3Class::middle(7)) == 0);
  CHECK(alg().counit(K3Class::point() * rat(3) - K3Class::unit() * rat(2)) == rat(-3));
}

TEST_CASE("comultiplication closed forms") {
  // Delta[3]([pt]) = [pt] x [pt] x [pt]
  TensorClass p3(3);
  p3.add({kPointIdx, kPointIdx, kPointIdx}, rat(1));
  CHECK(alg().comul_n(K3Class::point(), 3) == p3);
  // Delta[3](e_j): [pt] in two slots, e_j in the third, all signs +1.
  for (int j : {2, 11}) {
    TensorClass expect(3);
    const auto b = static_cast<uint8_t>(j);
    expect.add({b, kPointIdx, kPointIdx}, rat(1));
    expect.add({kPointIdx, b, kPointIdx}, rat(1));
    expect.add({kPointIdx, kPointIdx, b}, rat(1));
    CHECK(alg().comul_n(K3Class::middle(j), 3) == expect);
  }
  // Delta(1) = -sum_j e_j x e_j^dual - [pt] x 1 - 1 x [pt]
  TensorClass d1(2);
  for (int j = 1; j <= kMiddleRank; ++j) {
    const K3Class dual = alg().dual_middle(j);
    for (const auto& [k, v] : dual.terms())
      d1.add({static_cast<uint8_t>(j), static_cast<uint8_t>(k)}, -v);
  }
  d1.add({kPointIdx, kUnitIdx}, rat(-1));
  d1.add({kUnitIdx, kPointIdx}, rat(-1));
  CHECK(alg().comul_n(K3Class::unit(), 2) == d1);
  CHECK(alg().comul_n(K3Class::unit(), 1).c.size() == 1);
  CHECK_THROWS(alg().comul_n(K3Class::unit(), 0));
}

TEST_CASE("euler class") {
  CHECK(alg().euler() == K3Class::point() * rat(-24));
  // m(Delta(1)) recomputed through the public interface
  const TensorClass d = alg().comul_n(K3Class::unit(), 2);
  K3Class m;
  for (const auto& [key, v] : d.c)
    m = m + alg().mul(K3Class::basis(key[0]), K3Class::basis(key[1])) * v;
  CHECK(m == K3Class::point() * rat(-24));
  CHECK(alg().mul(alg().euler(), K3Class::point()).is_zero());
}

TEST_CASE("adjointness on all basis triples") {
  for (int x = 0; x < kK3Dim; ++x) {
    const TensorClass dx = alg().comul_n(K3Class::basis(x), 2);
    for (int y = 0; y < kK3Dim; ++y)
      for (int z = 0; z < kK3Dim; ++z) {
        Rat lhs(0);
        for (const auto& [key, v] : dx.c)
          lhs += v * alg().counit(alg().mul(K3Class::basis(key[0]), K3Class::basis(y))) *
                 alg().counit(alg().mul(K3Class::basis(key[1]), K3Class::basis(z)));
        const Rat rhs = alg().counit(alg().mul(
            alg().mul(K3Class::basis(x), K3Class::basis(y)), K3Class::basis(z)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("Frobenius pairing is nondegenerate") {
  CHECK(det(alg().pairing_matrix()) != 0);
}

TEST_CASE("coassociativity of the 3-fold comultiplication") {
  for (int b = 0; b < kK3Dim; ++b) {
    // (id x Delta) Delta must equal the cached (Delta x id) Delta.
    TensorClass viaRight(3);
    for (const auto& [key, v] : alg().comul_basis(b, 2).c)
      for (const auto& [key2, w] : alg().comul_basis(key[1], 2).c)
        viaRight.add({key[0], key2[0], key2[1]}, v * w);
    CHECK(viaRight == alg().comul_basis(b, 3));
  }
}

TEST_CASE("degrees") {
  CHECK(*K3Class::unit().degree() == -2);
  CHECK(*K3Class::middle(4).degree() == 0);
  CHECK(*K3Class::point().degree() == 2);
  CHECK(!(K3Class::point() + K3Class::unit()).degree().has_value());
}
