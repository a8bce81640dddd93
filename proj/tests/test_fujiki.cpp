#include "doctest.h"
#include "hilbk3/fujiki.hpp"
#include "hilbk3/localization.hpp"

using namespace hilbk3;

namespace {
const UniversalAB& ab() {
  static const UniversalAB t = extract_AB();
  return t;
}
const FujikiTable& table() {
  static const FujikiTable t = fujiki_table(ab().B);
  return t;
}
AlphaTable paper_alpha() {
  // Ring-side inputs fed with their known values; the acceptance pipeline
  // recomputes them from the rings.
  AlphaInputs in;
  in.theta4 = rat(450225);
  in.d2theta3 = rat(-117450);
  in.d4theta2 = rat(84564);
  in.d6theta = rat(-93960);
  in.t3_theta3 = rat(15525);
  in.t3_d2theta2 = rat(-2700);
  in.t3_d4theta = rat(1296);
  in.t3_theta2c2 = rat(20700);
  in.t3_d2thetac2 = rat(-3600);
  return alpha_table(in, table());
}
}  // namespace

TEST_CASE("universal genus expansion anchors") {
  const ChernPoly& phi = genus_expansion();
  CHECK(phi.at({}) == APoly::constant(rat(1)));
  CHECK(phi.at({2}) == apoly_parse("a1^2 - 2*a2"));
  CHECK(phi.at({2, 2}) == apoly_parse("a2^2 - 2*a1*a3 + 2*a4"));
  CHECK(phi.at({4}) == apoly_parse("a1^4 - 4*a1^2*a2 + 2*a2^2 + 4*a1*a3 - 4*a4"));
  for (const auto& [mu, coeff] : phi) {
    int deg = 0;
    for (int i : mu) deg += i;
    CHECK(coeff.is_homogeneous(deg));
  }
}

TEST_CASE("A and B series anchors") {
  // extract_AB asserts the z^1/z^2 closed forms internally; spot-check the
  // headline ones here as well.
  CHECK(ab().A.c[1] == apoly_parse("a2"));
  CHECK(ab().B.c[1] == apoly_parse("a1^2 - 2*a2"));
  CHECK(ab().B.c[2] == apoly_parse("2*a1^4 - 8*a1^2*a2 - 5/4*a1^2 + 31/2*a2^2 "
                                   "- 15*a1*a3 + 5/2*a2 + 15*a4 + 1/48"));
  // Reassembly: A^9 B^3 and A^8 B^4 reproduce the toric series.
  const auto f2 = genus_bott_series(Surface::P2);
  const auto f11 = genus_bott_series(Surface::P1xP1);
  CHECK(series_ipow(ab().A, 9) * series_ipow(ab().B, 3) == f2);
  CHECK(series_ipow(ab().A, 8) * series_ipow(ab().B, 4) == f11);
}

TEST_CASE("the twelve Fujiki constants") {
  const FujikiTable& t = table();
  CHECK(t.gamma_at({2, 2, 2, 2}) == rat(1992240));
  CHECK(t.gamma_at({2, 2, 2}) == rat(59640));
  CHECK(t.gamma_at({2, 2}) == rat(4932));
  CHECK(t.gamma_at({2}) == rat(630));
  CHECK(t.gamma_at({}) == rat(105));
  CHECK(t.gamma_at({2, 2, 4}) == rat(813240));
  CHECK(t.gamma_at({2, 4}) == rat(24360));
  CHECK(t.gamma_at({4}) == rat(2016));
  CHECK(t.gamma_at({2, 6}) == rat(182340));
  CHECK(t.gamma_at({6}) == rat(5460));
  CHECK(t.gamma_at({8}) == rat(25650));
  CHECK(t.gamma_at({4, 4}) == rat(332730));
  CHECK(t.raw_at(4, {}) == rat(136080));  // 105 * (-6)^4
}

TEST_CASE("K3^[3] constants from the z^3 coefficient") {
  const auto ints = hilb_integrals(ab().B, 3);
  // gamma_{S^[3]}(empty) = 15 and gamma_{S^[3]}(2) = 108 with
  // (delta,delta) = -4.
  CHECK(ints.at({3, {}}) == rat(15) * qpow(rat(-4), 3));
  CHECK(ints.at({2, {2}}) == rat(108) * qpow(rat(-4), 2));
}

TEST_CASE("alpha table of Lemma constants") {
  const AlphaTable a = paper_alpha();
  CHECK(a.at(0, 1) == rat(23));
  CHECK(a.at(1, 1) == rat(25, 3));
  CHECK(a.at(2, 1) == rat(27, 5));
  CHECK(a.at(3, 1) == rat(29, 7));
  CHECK(a.at(0, 2) == rat(575, 3));
  CHECK(a.at(1, 2) == rat(45));
  CHECK(a.at(2, 2) == rat(783, 35));
  CHECK(a.at(0, 3) == rat(1035));
  CHECK(a.at(1, 3) == rat(1305, 7));
  CHECK(a.at(0, 4) == rat(30015, 7));
  for (int k = 0; k <= 4; ++k) CHECK(a.at(k, 0) == 1);
}

TEST_CASE("degree-8 intersection matrix, rank and relation") {
  const RatMatrix m = degree8_pairing_matrix(table(), paper_alpha());
  const RatMatrix expect{
      {rat(450225), rat(1035) * 630, rat(575, 3) * 4932, rat(575, 3) * 2016},
      {rat(1035) * 630, rat(575, 3) * 4932, rat(23) * 59640, rat(23) * 24360},
      {rat(575, 3) * 4932, rat(23) * 59640, rat(1992240), rat(813240)},
      {rat(575, 3) * 2016, rat(23) * 24360, rat(813240), rat(332730)}};
  CHECK(m == expect);
  CHECK(rank(m) == 3);
  const auto kern = kernel_basis(m);
  REQUIRE(kern.size() == 1);
  CHECK(kern[0] == std::vector<Rat>{rat(1), rat(-7, 5), rat(31, 60), rat(-1, 15)});
}
