#ifndef HILBK3_MATRIX_HPP
#define HILBK3_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hilbk3/rational.hpp"

namespace hilbk3 {

// Dense matrix of exact rationals.  Everything downstream (Gram matrices,
// coordinate solves, Fujiki extraction, M(lambda)) goes through this type;
// there is no floating point anywhere in the project.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  bool operator==(const RatMatrix& o) const;

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

struct Echelon {
  RatMatrix reduced;            // reduced row echelon form
  std::vector<size_t> pivots;   // pivot column of each pivot row
  size_t rank = 0;
};

// Reduced row echelon form.  The forward pass is fraction-free
// (Bareiss-style) on a denominator-cleared integer copy, which keeps
// intermediate entries polynomially bounded; the back-substitution is
// rational.
Echelon rref(const RatMatrix& m);

size_t rank(const RatMatrix& m);

// Kernel basis, one vector per free column, canonically scaled so the first
// nonzero entry is 1.  With clear_denominators, each vector is instead
// scaled to primitive integer form (first nonzero entry positive).
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m,
                                           bool clear_denominators = false);

struct AffineSolution {
  bool consistent = false;
  std::vector<Rat> particular;             // one solution (free vars = 0)
  std::vector<std::vector<Rat>> kernel;    // homogeneous solutions
  bool unique() const { return consistent && kernel.empty(); }
};

AffineSolution solve(const RatMatrix& m, const std::vector<Rat>& rhs);
// Throws unless the system has exactly one solution.
std::vector<Rat> solve_unique(const RatMatrix& m, const std::vector<Rat>& rhs);

// Determinant by fraction-free elimination on the cleared integer matrix.
Rat det(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws if singular

struct Inertia {
  size_t positive = 0, negative = 0, zero = 0;
};
// Sylvester inertia of a symmetric matrix via exact congruence
// diagonalization.
Inertia inertia(const RatMatrix& sym);

}  // namespace hilbk3

#endif
