#ifndef HILBK3_K3_HPP
#define HILBK3_K3_HPP

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbk3/matrix.hpp"
#include "hilbk3/rational.hpp"

namespace hilbk3 {

// Basis of A = H*(S,Q)[2] for a K3 surface S: index 0 is the unit (shifted
// degree -2), 1..22 the middle classes e_j (degree 0), 23 the point class
// (degree +2).
inline constexpr int kK3Dim = 24;
inline constexpr int kUnitIdx = 0;
inline constexpr int kPointIdx = 23;
inline constexpr int kMiddleRank = 22;

inline int basis_degree(int idx) {
  if (idx == kUnitIdx) return -2;
  if (idx == kPointIdx) return 2;
  return 0;
}

// Intersection form on H^2(S,Z): even, unimodular, signature (3,19).
struct MiddleLattice {
  std::vector<std::vector<Int>> gram;  // 22x22 symmetric
  RatMatrix gram_inv;

  // U + U + U + E8(-1) + E8(-1), the K3 lattice.
  static MiddleLattice standard();
  // Validates symmetry, even diagonal, |det| = 1 and signature (3,19).
  static MiddleLattice from_gram(std::vector<std::vector<Int>> g);
};

// Element of A with sparse exact-rational coefficients.
class K3Class {
 public:
  K3Class() = default;
  static K3Class unit();
  static K3Class point();
  static K3Class middle(int j);  // e_j, 1-based j in 1..22
  static K3Class basis(int idx);

  bool is_zero() const { return c_.empty(); }
  Rat coeff(int idx) const;
  const std::map<int, Rat>& terms() const { return c_; }

  K3Class& add(int idx, const Rat& v);
  K3Class operator+(const K3Class& o) const;
  K3Class operator-(const K3Class& o) const;
  K3Class operator*(const Rat& s) const;
  bool operator==(const K3Class& o) const { return c_ == o.c_; }

  // Shifted degree of a homogeneous nonzero element; nullopt when mixed or
  // zero.
  std::optional<int> degree() const;

 private:
  std::map<int, Rat> c_;
};

// Element of A^{tensor r}; keys are r-tuples of basis indices.
struct TensorClass {
  int rank = 0;
  std::map<std::vector<uint8_t>, Rat> c;

  TensorClass() = default;
  explicit TensorClass(int r) : rank(r) {}
  TensorClass& add(const std::vector<uint8_t>& key, const Rat& v);
  bool operator==(const TensorClass& o) const { return rank == o.rank && c == o.c; }
};

// The Frobenius algebra A with its product, counit T = -integral, and n-fold
// comultiplication.  The comultiplication is derived from adjointness
// against T(m(...)) at construction and checked against the closed forms.
class K3Algebra {
 public:
  explicit K3Algebra(MiddleLattice lat);

  const MiddleLattice& lattice() const { return lat_; }

  K3Class mul(const K3Class& x, const K3Class& y) const;
  const K3Class& mul_basis(int i, int j) const { return mulb_[i][j]; }
  Rat counit(const K3Class& x) const;  // T, with T([pt]) = -1
  TensorClass comul_n(const K3Class& x, int r) const;
  const TensorClass& comul_basis(int idx, int r) const;
  K3Class euler() const { return euler_; }  // m(Delta(1)) = -24 [pt]

  K3Class dual_middle(int j) const;  // e_j^dual via the inverse Gram matrix
  RatMatrix pairing_matrix() const;  // 24x24 matrix of T(b_i b_j)

  // Coefficient of [pt] in the product b_i * b_j (used by the fast
  // top-degree pairing in the Lehn-Sorger layer).
  const Rat& point_coeff(int i, int j) const { return pcoef_[i][j]; }

  // Basis products are always rational multiples of basis elements; these
  // expose that single term (index -1 when the product vanishes).
  int mul_basis_index(int i, int j) const { return mulidx_[i][j]; }
  const Rat& mul_basis_coeff(int i, int j) const { return mulcoef_[i][j]; }

 private:
  void build_products();
  void build_comul();

  MiddleLattice lat_;
  std::vector<std::vector<K3Class>> mulb_;
  std::vector<std::vector<Rat>> pcoef_;
  std::vector<std::vector<int>> mulidx_;
  std::vector<std::vector<Rat>> mulcoef_;
  mutable std::deque<std::vector<TensorClass>> delta_;  // [r][basis], lazy in r;
  // deque keeps references into existing levels valid while new levels grow
  K3Class euler_;
};

}  // namespace hilbk3

#endif
