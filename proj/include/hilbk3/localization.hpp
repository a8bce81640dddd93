#ifndef HILBK3_LOCALIZATION_HPP
#define HILBK3_LOCALIZATION_HPP

#include <vector>

#include "hilbk3/apoly.hpp"
#include "hilbk3/rational.hpp"
#include "hilbk3/series.hpp"

namespace hilbk3 {

// Young tableau as weakly decreasing column heights (trailing zeros
// dropped); the tableau of a partition arranges its parts as column
// heights.
struct YTab {
  std::vector<int> heights;

  int size() const;
  bool operator==(const YTab& o) const { return heights == o.heights; }
};

std::vector<YTab> all_ytabs(int n);  // all partitions of n as tableaux

// Integer linear form c_a * alpha + c_b * beta in the two torus characters.
struct Weight {
  long ca = 0, cb = 0;

  Weight operator+(const Weight& o) const { return {ca + o.ca, cb + o.cb}; }
  bool is_zero() const { return ca == 0 && cb == 0; }
  bool operator==(const Weight& o) const { return ca == o.ca && cb == o.cb; }
};

// A torus chart: the images of (alpha, beta) as linear forms in the global
// characters.  Substitution is linear.
struct Chart {
  Weight alpha, beta;

  Weight substitute(const Weight& w) const {
    return {w.ca * alpha.ca + w.cb * beta.ca, w.ca * alpha.cb + w.cb * beta.cb};
  }
};

// Tangent weights of the Hilbert scheme of n = t.size() points on the
// affine chart at a monomial ideal: one weight per linear factor of the
// Chern polynomial product formula; exactly 2n of them, none zero.
std::vector<Weight> tangent_weights(const YTab& t);

// Restriction of c_1(O^[n]) to the fixed point: sum of i*alpha + j*beta
// over the boxes (i, j).
Weight zform(const YTab& t);

enum class Surface { P2, P1xP1 };

// A torus-fixed point of Hilb^n(surface): a vector partition with the
// chart-substituted tangent weights and z-form.
struct FixedPoint {
  Surface surface = Surface::P2;
  std::vector<YTab> components;  // 3 for P2, 4 for P1xP1
  std::vector<Weight> weights;   // 2n tangent weights
  Weight z;                      // restricted first Chern class of O^[n]
};

std::vector<FixedPoint> fixed_points(Surface s, int n);

// Number of k-vector partitions of n (coefficient extraction from the
// generating function), the oracle for fixed-point counts.
Int vector_partition_count(int components, int n);

// A specialization (alpha, beta) = (a0 s, b0 s) of the torus characters;
// chosen so no form c1 alpha + c2 beta with |ci| <= 8 vanishes.  Every Bott
// sum is evaluated under both and must agree.
struct TorusSpec {
  Rat a0, b0;
  Rat eval(const Weight& w) const { return w.ca * a0 + w.cb * b0; }
};

const TorusSpec& primary_spec();
const TorusSpec& secondary_spec();

// Bott localization sum for integral over Hilb^n(surface) of
//   f^zpow * prod_i c_{mu_i}(T),
// with f = c_1(O^[n]); requires zpow + sum(mu) = 2n.  Computed under both
// specializations, which must agree.
Rat bott_integral(Surface s, int n, int zpow, const std::vector<int>& mu);

// The generating series sum_n z^n integral over Hilb^n of
// exp(f) Phi(Hilb^n) with Phi the universal genus 1 + a_1 x + a_2 x^2 + ...
// Coefficients are polynomials in the a_i; computed by localization with a
// graded parameter and dual-specialization cross-check.
Series<APoly> genus_bott_series(Surface s);

}  // namespace hilbk3

#endif
