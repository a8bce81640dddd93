#include "hilbk3/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hilbk3 {

std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num.empty() || den.empty()) return std::nullopt;
  auto digits_ok = [](const std::string& t, bool sign_ok) {
    for (size_t i = 0; i < t.size(); ++i) {
      const char c = t[i];
      if (i == 0 && sign_ok && (c == '-' || c == '+') && t.size() > 1) continue;
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
  const std::string num_clean = num[0] == '+' ? num.substr(1) : num;
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), (num_clean + "/" + den).c_str(), 10) != 0)
    return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat qpow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("qpow: negative power of zero");
    return qpow(Rat(1) / base, -e);
  }
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
             static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
             static_cast<unsigned long>(e));
  return r;
}

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int isqrt_floor(const Int& z) {
  if (z < 0) throw std::domain_error("isqrt_floor: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& z, Int* root) {
  if (z < 0) return false;
  if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), z.get_mpz_t());
  return true;
}

std::pair<Int, Int> squarefree_split(const Int& x) {
  if (x == 0) throw std::domain_error("squarefree_split: zero input");
  Int m = abs(x);
  Int u = 1, v = 1;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    u *= ipow(p, e / 2);
    if (e % 2 == 1) v *= p;
  }
  v *= m;  // leftover prime factor, exponent 1
  if (x < 0) v = -v;
  return {u, v};
}

std::vector<Int> signed_divisors(const Int& n) {
  if (n == 0) throw std::domain_error("signed_divisors: zero input");
  const Int m = abs(n);
  std::vector<Int> out;
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    out.push_back(-d);
    if (d * d != m) {
      out.push_back(m / d);
      out.push_back(-(m / d));
    }
  }
  return out;
}

}  // namespace hilbk3
