#include "hilbk3/matrix.hpp"

#include <stdexcept>

namespace hilbk3 {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
    for (const auto& x : r) a_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix: vector length");
  std::vector<Rat> r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

struct IntEchelon {
  std::vector<std::vector<Int>> m;  // row echelon, fraction-free
  std::vector<size_t> pivots;
  size_t rank = 0;
  int row_swaps = 0;
  Rat scale = 1;  // product of the factors the original rows were multiplied by
};

// Fraction-free (Bareiss) forward elimination on a denominator-cleared copy.
IntEchelon bareiss(const RatMatrix& in) {
  const size_t rows = in.rows(), cols = in.cols();
  IntEchelon e;
  e.m.assign(rows, std::vector<Int>(cols));
  for (size_t i = 0; i < rows; ++i) {
    Int l = 1;
    for (size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              mpq_denref(in.at(i, j).get_mpq_t()));
    e.scale *= Rat(l);
    for (size_t j = 0; j < cols; ++j) {
      Rat v = in.at(i, j) * Rat(l);
      v.canonicalize();
      e.m[i][j] = v.get_num();
    }
  }
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && e.m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(e.m[p], e.m[r]);
      ++e.row_swaps;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Int t = e.m[i][j] * e.m[r][c] - e.m[i][c] * e.m[r][j];
        mpz_divexact(e.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.m[i][c] = 0;
    }
    prev = e.m[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

}  // namespace

Echelon rref(const RatMatrix& m) {
  IntEchelon fe = bareiss(m);
  const size_t rows = m.rows(), cols = m.cols();
  Echelon out;
  out.pivots = fe.pivots;
  out.rank = fe.rank;
  out.reduced = RatMatrix(rows, cols);
  // Rational back-substitution from the fraction-free echelon.
  std::vector<std::vector<Rat>> r(fe.rank, std::vector<Rat>(cols));
  for (size_t i = 0; i < fe.rank; ++i)
    for (size_t j = 0; j < cols; ++j) {
      r[i][j] = Rat(fe.m[i][j], fe.m[i][fe.pivots[i]]);
      r[i][j].canonicalize();
    }
  for (size_t i = fe.rank; i-- > 0;)
    for (size_t k = 0; k < i; ++k) {
      const Rat f = r[k][fe.pivots[i]];
      if (f == 0) continue;
      for (size_t j = fe.pivots[i]; j < cols; ++j) r[k][j] -= f * r[i][j];
    }
  for (size_t i = 0; i < fe.rank; ++i)
    for (size_t j = 0; j < cols; ++j) out.reduced.at(i, j) = r[i][j];
  return out;
}

size_t rank(const RatMatrix& m) { return bareiss(m).rank; }

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m,
                                           bool clear_denominators) {
  const Echelon e = rref(m);
  const size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols);
    v[fc] = 1;
    for (size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced.at(i, fc);
    // Canonical scaling.
    size_t first = 0;
    while (first < cols && v[first] == 0) ++first;
    if (first < cols) {
      if (clear_denominators) {
        Int l = 1;
        for (const Rat& x : v)
          mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(x.get_mpq_t()));
        Int g = 0;
        for (Rat& x : v) {
          x *= Rat(l);
          x.canonicalize();
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpq_numref(x.get_mpq_t()));
        }
        if (g != 0)
          for (Rat& x : v) {
            x /= Rat(g);
            x.canonicalize();
          }
        if (v[first] < 0)
          for (Rat& x : v) x = -x;
      } else {
        const Rat s = v[first];
        for (Rat& x : v) {
          x /= s;
          x.canonicalize();
        }
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineSolution solve(const RatMatrix& m, const std::vector<Rat>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const Echelon e = rref(aug);
  AffineSolution s;
  for (size_t i = 0; i < e.rank; ++i)
    if (e.pivots[i] == m.cols()) return s;  // 0 = 1 row: inconsistent
  s.consistent = true;
  s.particular.assign(m.cols(), Rat(0));
  for (size_t i = 0; i < e.rank; ++i)
    s.particular[e.pivots[i]] = e.reduced.at(i, m.cols());
  s.kernel = kernel_basis(m);
  return s;
}

std::vector<Rat> solve_unique(const RatMatrix& m, const std::vector<Rat>& rhs) {
  AffineSolution s = solve(m, rhs);
  if (!s.consistent) throw std::runtime_error("solve_unique: inconsistent system");
  if (!s.kernel.empty()) throw std::runtime_error("solve_unique: underdetermined system");
  return s.particular;
}

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  if (m.rows() == 0) return 1;
  IntEchelon e = bareiss(m);
  if (e.rank < m.rows()) return 0;
  // In Bareiss echelon the last pivot is the determinant of the integer
  // matrix; undo the row scaling and swap signs.
  Rat d(e.m[m.rows() - 1][m.rows() - 1]);
  d /= e.scale;
  d.canonicalize();
  return (e.row_swaps % 2 == 0) ? d : -d;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const Echelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] >= n)
    throw std::runtime_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
  return inv;
}

Inertia inertia(const RatMatrix& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("inertia: not square");
  const size_t n = sym.rows();
  RatMatrix a = sym;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (a.at(i, j) != a.at(j, i))
        throw std::invalid_argument("inertia: not symmetric");
  Inertia res;
  for (size_t k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t l = k + 1;
      while (l < n && a.at(l, l) == 0) ++l;
      if (l < n) {
        for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(l, j));
        for (size_t i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, l));
      } else {
        // No nonzero diagonal; a.at(k,m) != 0 lets row/col m repair it.
        size_t mcol = n;
        for (size_t j = k + 1; j < n; ++j)
          if (a.at(k, j) != 0) {
            mcol = j;
            break;
          }
        if (mcol == n) {
          ++res.zero;
          continue;
        }
        for (size_t j = 0; j < n; ++j) a.at(k, j) += a.at(mcol, j);
        for (size_t i = 0; i < n; ++i) a.at(i, k) += a.at(i, mcol);
      }
    }
    const Rat piv = a.at(k, k);
    if (piv > 0)
      ++res.positive;
    else
      ++res.negative;
    for (size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      const Rat f = a.at(i, k) / piv;
      for (size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (size_t j = 0; j < n; ++j) a.at(j, i) -= f * a.at(j, k);
    }
  }
  return res;
}

}  // namespace hilbk3
