#include "hilbk3/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilbk3/matrix.hpp"

namespace hilbk3 {

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& a) { return RatPoly(std::vector<Rat>{a}); }

RatPoly RatPoly::x() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (Rat& x : r) x *= s;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const { return *this * Rat(-1); }

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * inner + RatPoly::constant(c_[i]);
  return acc;
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly acc = RatPoly::constant(Rat(1));
  RatPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / c_.back());
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("RatPoly: division by zero");
  RatPoly rem = *this;
  std::vector<Rat> q;
  const int dd = divisor.degree();
  if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const size_t shift = rem.degree() - dd;
    const Rat f = rem.c_.back() / divisor.c_.back();
    q[shift] = f;
    for (int i = 0; i <= dd; ++i) rem.c_[shift + i] -= f * divisor.c_[i];
    rem.trim();
  }
  return {RatPoly(std::move(q)), rem};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x.divrem(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  RatPoly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    RatPoly basis = RatPoly::constant(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPoly(std::vector<Rat>{-points[j].first, Rat(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + basis * (points[i].second / denom);
  }
  return acc;
}

Rat resultant(const RatPoly& a, const RatPoly& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0) return qpow(a.coeff(0), n);
  if (n == 0) return qpow(b.coeff(0), m);
  RatMatrix s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s.at(i, i + j) = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = b.coeff(n - j);
  return det(s);
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int rn, rd;
  if (!is_perfect_square(q.get_num(), &rn)) return std::nullopt;
  if (!is_perfect_square(q.get_den(), &rd)) return std::nullopt;
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

std::vector<Rat> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  // Clear denominators to an integer polynomial.
  Int l = 1;
  for (const Rat& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(c.get_mpq_t()));
  std::vector<Int> ic;
  for (const Rat& c : p.coeffs()) {
    Rat v = c * Rat(l);
    v.canonicalize();
    ic.push_back(v.get_num());
  }
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low == ic.size()) return roots;
  const Int lead = ic.back(), tail = ic[low];
  for (const Int& num : signed_divisors(tail)) {
    if (num <= 0) continue;  // signs handled below
    for (const Int& den : signed_divisors(lead)) {
      if (den <= 0) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        cand.canonicalize();
        if (p.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hilbk3
