#ifndef HILBK3_RATIONAL_HPP
#define HILBK3_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hilbk3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den = Int(1)) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q"; rejects anything else.
std::optional<Rat> rat_from_string(const std::string& s);

// Lowest terms; "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

Int ipow(const Int& base, unsigned long e);
Rat qpow(const Rat& base, long e);  // e may be negative (base != 0)

Int factorial(unsigned n);
Int binomial(unsigned long n, unsigned long k);

// Floor of sqrt for z >= 0.
Int isqrt_floor(const Int& z);

// True iff z is a perfect square; if so and root != nullptr, stores the
// nonnegative root.
bool is_perfect_square(const Int& z, Int* root = nullptr);

// x = u^2 * v with v squarefree carrying the sign of x; requires x != 0.
// Trial division, intended for |x| within desk scale.
std::pair<Int, Int> squarefree_split(const Int& x);

// All (positive and negative) divisors of n != 0, in no particular order.
std::vector<Int> signed_divisors(const Int& n);

}  // namespace hilbk3

#endif
