#ifndef HILBK3_SERIES_HPP
#define HILBK3_SERIES_HPP

#include <array>
#include <stdexcept>

#include "hilbk3/rational.hpp"

namespace hilbk3 {

// Global truncation order in z.  Order 4 covers the n = 4 target (the z^4
// coefficient of B(z)^24 is the deepest series datum the pipeline reads);
// raise it in lockstep with kAWeightCap for larger n.
inline constexpr int kZOrder = 4;

template <class C>
struct RingTraits;  // specialized per coefficient ring

template <>
struct RingTraits<Rat> {
  static Rat one() { return Rat(1); }
};

// Truncated power series c[0] + c[1] z + ... + c[kZOrder] z^kZOrder over a
// commutative Q-algebra C (Rat or APoly).  Operations never look past the
// truncation order.
template <class C>
struct Series {
  std::array<C, kZOrder + 1> c{};

  static Series one() {
    Series s;
    s.c[0] = RingTraits<C>::one();
    return s;
  }

  bool operator==(const Series& o) const { return c == o.c; }

  Series operator+(const Series& o) const {
    Series r;
    for (int i = 0; i <= kZOrder; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }

  Series operator-(const Series& o) const {
    Series r;
    for (int i = 0; i <= kZOrder; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }

  Series operator*(const Series& o) const {
    Series r;
    for (int i = 0; i <= kZOrder; ++i)
      for (int j = 0; i + j <= kZOrder; ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    return r;
  }

  Series scaled(const Rat& s) const {
    Series r;
    for (int i = 0; i <= kZOrder; ++i) r.c[i] = c[i] * s;
    return r;
  }
};

// log s for s with constant term 1: sum (-1)^{k+1} (s-1)^k / k.
template <class C>
Series<C> series_log(const Series<C>& s) {
  if (!(s.c[0] == RingTraits<C>::one()))
    throw std::domain_error("series_log: constant term must be 1");
  Series<C> u = s;
  u.c[0] = u.c[0] - RingTraits<C>::one();
  Series<C> acc, upow = u;
  for (int k = 1; k <= kZOrder; ++k) {
    acc = acc + upow.scaled(rat((k % 2 == 1) ? 1 : -1, k));
    if (k < kZOrder) upow = upow * u;
  }
  return acc;
}

// exp s for s with zero constant term.
template <class C>
Series<C> series_exp(const Series<C>& s) {
  if (!(s.c[0] == C()))
    throw std::domain_error("series_exp: constant term must be 0");
  Series<C> acc = Series<C>::one();
  Series<C> spow = s;
  Rat fact(1);
  for (int k = 1; k <= kZOrder; ++k) {
    fact *= k;
    acc = acc + spow.scaled(Rat(1) / fact);
    if (k < kZOrder) spow = spow * s;
  }
  return acc;
}

// s^r for rational r; s must have constant term 1.
template <class C>
Series<C> series_pow(const Series<C>& s, const Rat& r) {
  return series_exp(series_log(s).scaled(r));
}

template <class C>
Series<C> series_ipow(Series<C> base, unsigned e) {
  Series<C> acc = Series<C>::one();
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

}  // namespace hilbk3

#endif
