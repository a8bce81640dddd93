#ifndef HILBK3_POLY_HPP
#define HILBK3_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hilbk3/rational.hpp"

namespace hilbk3 {

// Dense univariate polynomial over Q.  Coefficient i is the coefficient of
// x^i; the representation is normalized (no trailing zeros, empty = 0).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& a);
  static RatPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;
  RatPoly compose(const RatPoly& inner) const;  // this(inner(x))
  RatPoly pow(unsigned e) const;
  RatPoly monic() const;

  // Quotient and remainder; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divrem(const RatPoly& divisor) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic (or zero)

// Unique interpolating polynomial of degree < points.size() through distinct
// abscissae.
RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Resultant with respect to x (Sylvester determinant).
Rat resultant(const RatPoly& a, const RatPoly& b);

// sqrt in Q if it exists (q must be a square of a rational; returns the
// nonnegative root).
std::optional<Rat> rat_sqrt(const Rat& q);

// All rational roots, each listed once (no multiplicity), via the rational
// root theorem on the cleared integer polynomial.  Intended for desk-scale
// coefficients (divisor enumeration by trial division).
std::vector<Rat> rational_roots(const RatPoly& p);

}  // namespace hilbk3

#endif
