#ifndef HILBK3_FUJIKI_HPP
#define HILBK3_FUJIKI_HPP

#include <map>
#include <utility>
#include <vector>

#include "hilbk3/apoly.hpp"
#include "hilbk3/matrix.hpp"
#include "hilbk3/series.hpp"

namespace hilbk3 {

// Chern monomial as a sorted multiset of indices; complex degree = sum.
using ChernMono = std::vector<int>;

// Formal sum of Chern monomials with APoly coefficients, truncated at
// complex degree kAWeightCap.
using ChernPoly = std::map<ChernMono, APoly>;

// The universal genus prod_i Phi(x_i) expanded in Chern classes via Newton's
// identities, with odd Chern classes set to zero.  Each coefficient is
// weighted-homogeneous of degree equal to the monomial's complex degree.
const ChernPoly& genus_expansion();

struct UniversalAB {
  Series<APoly> A, B;
};

// Splits the toric genus series into the universal factors via
// F_{P2} = A^9 B^3 and F_{P1xP1} = A^8 B^4; the order z^1 and z^2
// coefficients are checked against their closed forms.
UniversalAB extract_AB(const Series<APoly>& f_p2, const Series<APoly>& f_p1xp1);
UniversalAB extract_AB();  // computes the toric series by localization first

// Even partitions of total (parts all even, weakly decreasing).
std::vector<ChernMono> even_partitions(int total);

struct FujikiTable {
  // (k, mu) with 2k + |mu| = 8 -> integral of delta^{2k} c_mu over S^[4]
  std::map<std::pair<int, ChernMono>, Rat> raw;
  // gamma(mu) = raw / (delta,delta)^k with (delta,delta) = -6
  std::map<ChernMono, Rat> gamma;

  const Rat& raw_at(int k, const ChernMono& mu) const;
  const Rat& gamma_at(const ChernMono& mu) const;
};

// Solves the twelve delta-Chern integrals of S^[4] by matching a-monomial
// coefficients in the z^4 coefficient of B(z)^24 (the K3 genus series);
// the system is overdetermined and must be exactly consistent.
FujikiTable fujiki_table(const Series<APoly>& b_series);

// The same extraction at z^n for n < 4 (used as a cross-check of the
// K3^[3] inputs).
std::map<std::pair<int, ChernMono>, Rat> hilb_integrals(const Series<APoly>& b_series,
                                                        int n);

struct AlphaInputs {
  // Lemma-theta products from the n = 4 ring.
  Rat theta4, d2theta3, d4theta2, d6theta;
  // Products from the n = 3 ring (c2 there is 4/3 theta).
  Rat t3_theta3, t3_d2theta2, t3_d4theta, t3_theta2c2, t3_d2thetac2;
};

struct AlphaTable {
  std::map<std::pair<int, int>, Rat> value;  // (k, l) -> alpha(k, l)
  const Rat& at(int k, int l) const;
};

// Assembles the alpha(k,l) table: alpha(k,0) = 1; alpha(0,1) = b_2(X) = 23
// by the trace identity; the rest as ratios of ring integrals to Fujiki
// constants (n = 4 for 2k+2l = 8, n = 3 for the remainder, with the K3^[3]
// constants gamma(empty) = 15 and gamma(2) = 108 as inputs).
AlphaTable alpha_table(const AlphaInputs& in, const FujikiTable& fuj,
                       const Rat& gamma3_empty = Rat(15),
                       const Rat& gamma3_c2 = Rat(108));

// Intersection matrix of (theta^2, theta c2, c2^2, c4) on I^8(X) assembled
// from the Fujiki and alpha tables; its one-dimensional kernel is the
// degree-8 relation.
RatMatrix degree8_pairing_matrix(const FujikiTable& fuj, const AlphaTable& alpha);

}  // namespace hilbk3

#endif
