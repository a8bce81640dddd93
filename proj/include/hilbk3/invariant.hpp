#ifndef HILBK3_INVARIANT_HPP
#define HILBK3_INVARIANT_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hilbk3/lehn_sorger.hpp"
#include "hilbk3/matrix.hpp"

namespace hilbk3 {

// The monodromy-invariant ring of H*(S^[n]) for n = 3, 4: named bases from
// labelled partitions, the Beauville-Bogomolov class theta, c2 (solved from
// Fujiki data for n = 4, the 4/3 theta multiple for n = 3), and integrals of
// products of delta, theta, c2 and alpha.
class InvariantRing {
 public:
  InvariantRing(const HilbAlgebra& hilb);  // n must be 3 or 4

  int n() const { return hilb_.n(); }
  const HilbAlgebra& hilb() const { return hilb_; }

  bool has(const std::string& name) const { return named_.count(name) > 0; }
  const SymElement& named(const std::string& name) const;
  int coh_degree_of(const std::string& name) const;

  const SymElement& delta() const { return named("delta"); }
  const SymElement& theta() const { return named("theta"); }

  // Coordinates of x over named classes; throws when x is not in their
  // span or they are dependent.  The two solver paths (row reduction and
  // normal equations) are both exact; `via_normal_equations` selects the
  // second for cross-checks.
  std::vector<Rat> express(const SymElement& x,
                           const std::vector<std::string>& basis,
                           bool via_normal_equations = false) const;

  // All ten products of {W,X,Y,Z} expressed over {A..H}, keyed by e.g.
  // "WX" with the two letters in table order.
  std::map<std::string, std::vector<Rat>> degree4_table() const;

  // Pairing matrix integrate(b_i b_j) over A..H.
  RatMatrix gram_AH() const;

  // Integral over S^[n] of a product of named factors ("delta", "theta",
  // "c2", "alpha", or any named class).  Total cohomological degree must be
  // 4n.
  Rat integral(const std::vector<std::string>& factors) const;
  // Convenience: integral of delta^a theta^b c2^c.
  Rat product_value(int delta_pow, int theta_pow, int c2_pow) const;

  // The full product element for a factor multiset (memoized).
  const SymElement& element_for(std::vector<std::string> factors) const;

  // --- c2 for n = 4 ------------------------------------------------------
  // All right-hand sides are Fujiki-side inputs (products of alpha(k,l)
  // constants and gamma(mu) values computed upstream); the ring side
  // supplies the intersection matrices.
  struct Chern2Inputs {
    // integrals of c2 against theta^3, delta^2 theta^2, delta^4 theta,
    // delta^6
    std::array<Rat, 4> linear_rhs;
    // integrals of c2^2 against theta^2, delta^2 theta, delta^4
    std::array<Rat, 3> quad_rhs;
    Rat c2_fourth;  // integral of c2^4
  };
  struct Chern2Result {
    std::vector<Rat> coords;  // over (W, X, Y, Z)
    RatMatrix linear_matrix;  // the rank-2 4x4 system matrix
    std::vector<std::pair<Rat, Rat>> candidates;  // surviving (u,v) pairs
  };
  // Solves for c2 = wW + xX + yY + zZ following the two-stage pipeline
  // (rank-2 linear system, (u,v) kernel parametrization, three quadratic
  // conditions, final filter by the value of c2^4) and installs the result
  // as the named class "c2".
  Chern2Result solve_chern2(const Chern2Inputs& inputs);
  // Installs c2 directly (n = 3 uses 4/3 theta; also used by tests).
  void set_c2(const SymElement& c2);

  // --- alpha for n = 4 ----------------------------------------------------
  // X - 3Y + Z; verifies the nine vanishing degree-12 pairings and the
  // three alpha^2 values (9450, 14148, 21168).  Requires c2.
  const SymElement& alpha_class();

  // Structural checks: homogeneity, S_n-invariance and linear independence
  // of the named classes, degree by degree.  Throws on failure.
  void validate_basis() const;

 private:
  void build_n4();
  void build_n3();
  SymElement make_theta() const;

  const HilbAlgebra& hilb_;
  std::map<std::string, SymElement> named_;
  mutable std::map<std::string, SymElement> product_memo_;
};

}  // namespace hilbk3

#endif
