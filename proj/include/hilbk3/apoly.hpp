#ifndef HILBK3_APOLY_HPP
#define HILBK3_APOLY_HPP

#include <array>
#include <map>
#include <string>

#include "hilbk3/rational.hpp"

namespace hilbk3 {

// Weight of the formal genus coefficient a_i is i; every computation in the
// localization pipeline only ever needs weighted degree <= kAWeightCap (the
// n = 4 target has complex dimension 8).
inline constexpr int kAWeightCap = 8;

// Monomial in a_1..a_8: exponent of a_{i+1} at slot i.
using AMono = std::array<uint8_t, 8>;

inline int weighted_degree(const AMono& m) {
  int w = 0;
  for (int i = 0; i < 8; ++i) w += (i + 1) * m[i];
  return w;
}

// Sparse polynomial in a_1..a_8 over Q, truncated to weighted degree
// kAWeightCap.  Terms above the cap are dropped on construction and under
// multiplication; zero coefficients are never stored.
class APoly {
 public:
  APoly() = default;
  static APoly constant(const Rat& c);
  static APoly gen(int i);  // a_i, 1-based

  bool is_zero() const { return t_.empty(); }
  Rat coeff(const AMono& m) const;
  Rat constant_term() const;
  const std::map<AMono, Rat>& terms() const { return t_; }

  APoly& add(const AMono& m, const Rat& c);  // += c * m (with truncation)

  APoly operator+(const APoly& o) const;
  APoly operator-(const APoly& o) const;
  APoly operator*(const APoly& o) const;
  APoly operator*(const Rat& s) const;
  APoly operator-() const;
  APoly& operator+=(const APoly& o);
  bool operator==(const APoly& o) const { return t_ == o.t_; }
  bool operator!=(const APoly& o) const { return t_ != o.t_; }

  // The part of exact weighted degree w.
  APoly weight_part(int w) const;
  bool is_homogeneous(int w) const;

  std::string str() const;  // e.g. "a1^2 - 2*a2"

 private:
  std::map<AMono, Rat> t_;
};

// Convenience parser for tests: sums of terms like "2*a1^2*a3", "-1/48".
APoly apoly_parse(const std::string& s);

template <class C>
struct RingTraits;

template <>
struct RingTraits<APoly> {
  static APoly one() { return APoly::constant(Rat(1)); }
};

}  // namespace hilbk3

#endif
