#ifndef HILBK3_PLANE_HPP
#define HILBK3_PLANE_HPP

#include <array>
#include <vector>

#include "hilbk3/fujiki.hpp"
#include "hilbk3/matrix.hpp"
#include "hilbk3/poly.hpp"

namespace hilbk3 {

// Basis order of the invariant middle cohomology, fixed across the module:
// (lambda^4, lambda^2 theta, lambda^2 c2, theta^2, theta c2, c2^2,
//  alpha theta, alpha c2).
inline constexpr size_t kPlaneBasisSize = 8;

// The three alpha-block pairings (alpha^2 theta^2, alpha^2 theta c2,
// alpha^2 c2^2); produced by the invariant ring, anchored at
// (9450, 14148, 21168).
struct AlphaBlock {
  Rat theta_theta, theta_c2, c2_c2;
};

class PlaneSolver {
 public:
  PlaneSolver(const FujikiTable& fujiki, const AlphaTable& alpha,
              const AlphaBlock& ablock);

  // Intersection matrix on the fixed basis at (lambda,lambda) = x; requires
  // x != 0.
  RatMatrix m_lambda(const Rat& x) const;

  // Restrictions of the basis classes to the Lagrangian plane (each divided
  // by the hyperplane class to the appropriate power): the right-hand side
  // of the plane-class system.
  std::vector<Rat> restriction_rhs(const Rat& x, const Rat& y) const;

  // Coefficients of the plane class over the fixed basis.
  std::vector<Rat> solve_plane(const Rat& x, const Rat& y) const;

  // The printed closed form of the solution, for cross-checks.
  static std::vector<Rat> closed_form_vector(const Rat& x, const Rat& y);

  // The quartic y^2 = q4 x^4 + q3 x^3 + q2 x^2 + q1 x + q0 derived from the
  // self-intersection [P^4]^2 = 5 (coefficients indexed by degree).
  struct Quartic {
    std::array<Rat, 5> coeff;  // q0..q4
    Rat eval_rhs(const Rat& x) const;
    // Residual y^2 - rhs(x); zero iff (x, y) lies on the curve.
    Rat residual(const Rat& x, const Rat& y) const;
  };
  Quartic self_intersection_constraint() const;

  struct FinalClass {
    std::vector<Rat> rho_coeffs;  // over (rho^4, rho^2 theta, rho^2 c2,
                                  // theta^2, theta c2, c2^2, alpha theta,
                                  // alpha c2)
    Rat line_square;              // (l, l)
  };
  // Substitutes the admissible solution (x, y) = (-126, 0), converts
  // lambda = 3 rho; the caller attests that the Diophantine analysis
  // singled that solution out.
  FinalClass final_class(bool diophantine_confirmed) const;

 private:
  const FujikiTable& fujiki_;
  const AlphaTable& alpha_;
  AlphaBlock ablock_;
};

}  // namespace hilbk3

#endif
