#include "hilbk3/fujiki.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hilbk3/k3.hpp"
#include "hilbk3/localization.hpp"

namespace hilbk3 {

namespace {

ChernPoly chern_scale(const ChernPoly& x, const APoly& s) {
  ChernPoly r;
  for (const auto& [m, c] : x) {
    APoly v = c * s;
    if (!v.is_zero()) r[m] = std::move(v);
  }
  return r;
}

void chern_add(ChernPoly& x, const ChernPoly& y) {
  for (const auto& [m, c] : y) {
    auto [it, fresh] = x.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) x.erase(it);
    }
  }
}

int mono_degree(const ChernMono& m) {
  int d = 0;
  for (int i : m) d += i;
  return d;
}

ChernPoly chern_mul(const ChernPoly& x, const ChernPoly& y) {
  ChernPoly r;
  for (const auto& [m1, c1] : x) {
    const int d1 = mono_degree(m1);
    for (const auto& [m2, c2] : y) {
      if (d1 + mono_degree(m2) > kAWeightCap) continue;
      ChernMono m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      std::sort(m.begin(), m.end());
      APoly v = c1 * c2;
      if (v.is_zero()) continue;
      auto [it, fresh] = r.emplace(std::move(m), v);
      if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

// log(1 + a_1 x + ... + a_8 x^8) as coefficients of x^1..x^8.
std::vector<APoly> log_phi_coeffs() {
  constexpr int kOrder = kAWeightCap;
  std::vector<APoly> u(kOrder + 1);  // Phi - 1
  for (int i = 1; i <= kOrder; ++i) u[i] = APoly::gen(i);
  auto mul = [&](const std::vector<APoly>& a, const std::vector<APoly>& b) {
    std::vector<APoly> r(kOrder + 1);
    for (int i = 0; i <= kOrder; ++i)
      for (int j = 0; i + j <= kOrder; ++j)
        if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
    return r;
  };
  std::vector<APoly> acc(kOrder + 1), upow = u;
  for (int k = 1; k <= kOrder; ++k) {
    const Rat f = rat(k % 2 == 1 ? 1 : -1, k);
    for (int i = 0; i <= kOrder; ++i) acc[i] += upow[i] * f;
    if (k < kOrder) upow = mul(upow, u);
  }
  return acc;
}

}  // namespace

const ChernPoly& genus_expansion() {
  static const ChernPoly table = [] {
    constexpr int kCap = kAWeightCap;
    // Power sums in Chern classes by Newton's identities:
    // p_m = c_1 p_{m-1} - c_2 p_{m-2} + ... + (-1)^{m-1} m c_m.
    std::vector<ChernPoly> p(kCap + 1);
    for (int m = 1; m <= kCap; ++m) {
      ChernPoly pm;
      pm[{m}] = APoly::constant(rat(m % 2 == 1 ? m : -m));
      for (int i = 1; i < m; ++i) {
        ChernPoly ci;
        ci[{i}] = APoly::constant(rat(i % 2 == 1 ? 1 : -1));
        chern_add(pm, chern_mul(ci, p[m - i]));
      }
      p[m] = std::move(pm);
    }
    // log Phi(X) = sum_m q_m p_m with q_m the x^m coefficient of log Phi(x).
    const std::vector<APoly> q = log_phi_coeffs();
    ChernPoly logphi;
    for (int m = 1; m <= kCap; ++m) chern_add(logphi, chern_scale(p[m], q[m]));
    // Exponentiate (no constant term, min degree 1).
    ChernPoly phi;
    phi[{}] = APoly::constant(Rat(1));
    ChernPoly pow = logphi;
    Rat fact(1);
    for (int k = 1; k <= kCap; ++k) {
      fact *= k;
      chern_add(phi, chern_scale(pow, APoly::constant(Rat(1) / fact)));
      if (k < kCap) pow = chern_mul(pow, logphi);
    }
    // Odd Chern classes vanish on the targets of interest.
    ChernPoly even;
    for (const auto& [m, c] : phi) {
      bool odd = false;
      for (int i : m) odd |= (i % 2 == 1);
      if (!odd) even.emplace(m, c);
    }
    // Anchors from the displayed low-degree expansion.
    if (!(even.at({}) == APoly::constant(Rat(1))))
      throw std::logic_error("genus_expansion: constant term");
    if (!(even.at({2}) == apoly_parse("a1^2 - 2*a2")))
      throw std::logic_error("genus_expansion: c2 coefficient");
    if (!(even.at({2, 2}) == apoly_parse("a2^2 - 2*a1*a3 + 2*a4")))
      throw std::logic_error("genus_expansion: c2^2 coefficient");
    if (!(even.at({4}) == apoly_parse("a1^4 - 4*a1^2*a2 + 2*a2^2 + 4*a1*a3 - 4*a4")))
      throw std::logic_error("genus_expansion: c4 coefficient");
    return even;
  }();
  return table;
}

UniversalAB extract_AB(const Series<APoly>& f_p2, const Series<APoly>& f_p1xp1) {
  // F_{P2} = A^9 B^3, F_{P1xP1} = A^8 B^4  =>  on logs a 2x2 solve.
  const Series<APoly> lp2 = series_log(f_p2);
  const Series<APoly> lp11 = series_log(f_p1xp1);
  UniversalAB ab;
  ab.A = series_exp((lp2.scaled(rat(4, 12)) - lp11.scaled(rat(3, 12))));
  ab.B = series_exp((lp11.scaled(rat(9, 12)) - lp2.scaled(rat(8, 12))));
  if (!(ab.A.c[1] == apoly_parse("a2")))
    throw std::logic_error("extract_AB: A z^1 coefficient mismatch");
  if (!(ab.B.c[1] == apoly_parse("a1^2 - 2*a2")))
    throw std::logic_error("extract_AB: B z^1 coefficient mismatch");
  if (!(ab.A.c[2] ==
        apoly_parse("-a1^3 + 3*a1^2*a2 + 1/4*a1^2 + a1*a2 - 9/2*a2^2 + a1*a3 "
                    "+ 1/6*a1 - 3/2*a2 + 3*a3 - 10*a4 - 1/48")))
    throw std::logic_error("extract_AB: A z^2 coefficient mismatch");
  if (!(ab.B.c[2] ==
        apoly_parse("2*a1^4 - 8*a1^2*a2 - 5/4*a1^2 + 31/2*a2^2 - 15*a1*a3 + "
                    "5/2*a2 + 15*a4 + 1/48")))
    throw std::logic_error("extract_AB: B z^2 coefficient mismatch");
  return ab;
}

UniversalAB extract_AB() {
  return extract_AB(genus_bott_series(Surface::P2),
                    genus_bott_series(Surface::P1xP1));
}

std::vector<ChernMono> even_partitions(int total) {
  std::vector<ChernMono> out;
  ChernMono cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      ChernMono m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (int p = std::min(left, maxpart); p >= 2; p -= 2) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(total, total - total % 2);
  return out;
}

const Rat& FujikiTable::raw_at(int k, const ChernMono& mu) const {
  auto it = raw.find({k, mu});
  if (it == raw.end()) throw std::out_of_range("FujikiTable::raw_at");
  return it->second;
}

const Rat& FujikiTable::gamma_at(const ChernMono& mu) const {
  auto it = gamma.find(mu);
  if (it == gamma.end()) throw std::out_of_range("FujikiTable::gamma_at");
  return it->second;
}

std::map<std::pair<int, ChernMono>, Rat> hilb_integrals(const Series<APoly>& b_series,
                                                        int n) {
  if (n < 1 || n > kZOrder) throw std::invalid_argument("hilb_integrals: bad n");
  // F_{K3}(z) = B(z)^24; the z^n coefficient decomposes over shapes (k, mu)
  // with 2k + |mu| = 2n as sum (1/(2k)!) (int delta^{2k} c_mu) Phi_mu(a).
  const APoly target = series_ipow(b_series, 24).c[n];
  const ChernPoly& phi = genus_expansion();
  std::vector<std::pair<int, ChernMono>> shapes;
  for (int k = 0; 2 * k <= 2 * n; ++k)
    for (const ChernMono& mu : even_partitions(2 * n - 2 * k))
      shapes.emplace_back(k, mu);
  // One equation per a-monomial appearing in any coefficient.
  std::map<AMono, size_t> row_of;
  auto note = [&](const APoly& p) {
    for (const auto& [m, c] : p.terms()) row_of.emplace(m, row_of.size());
  };
  const auto phi_at = [&](const ChernMono& m) -> const APoly& {
    static const APoly zero;
    auto it = phi.find(m);
    return it == phi.end() ? zero : it->second;
  };
  for (const auto& [k, mu] : shapes) note(phi_at(mu));
  note(target);
  RatMatrix sys(row_of.size(), shapes.size());
  std::vector<Rat> rhs(row_of.size(), Rat(0));
  for (size_t j = 0; j < shapes.size(); ++j) {
    const auto& [k, mu] = shapes[j];
    const Rat inv_fact = Rat(1) / Rat(factorial(2 * k));
    for (const auto& [m, c] : phi_at(mu).terms())
      sys.at(row_of.at(m), j) = c * inv_fact;
  }
  for (const auto& [m, c] : target.terms()) rhs[row_of.at(m)] = c;
  std::vector<Rat> sol;
  try {
    sol = solve_unique(sys, rhs);
  } catch (const std::exception&) {
    throw std::logic_error(
        "hilb_integrals: the a-monomial extraction system is not uniquely "
        "solvable (rank-deficient or inconsistent)");
  }
  std::map<std::pair<int, ChernMono>, Rat> out;
  for (size_t j = 0; j < shapes.size(); ++j) out[shapes[j]] = sol[j];
  return out;
}

FujikiTable fujiki_table(const Series<APoly>& b_series) {
  FujikiTable t;
  t.raw = hilb_integrals(b_series, 4);
  for (const auto& [shape, v] : t.raw) {
    const auto& [k, mu] = shape;
    t.gamma[mu] = v / qpow(rat(-6), k);
  }
  return t;
}

const Rat& AlphaTable::at(int k, int l) const {
  auto it = value.find({k, l});
  if (it == value.end()) throw std::out_of_range("AlphaTable::at");
  return it->second;
}

AlphaTable alpha_table(const AlphaInputs& in, const FujikiTable& fuj,
                       const Rat& gamma3_empty, const Rat& gamma3_c2) {
  AlphaTable t;
  for (int k = 0; k <= 4; ++k) t.value[{k, 0}] = 1;
  // b_2(X) = 23: theta pairs against c_mu as the trace of the form over an
  // orthonormal basis of H^2.
  t.value[{0, 1}] = kMiddleRank + 1;
  const Rat g4 = fuj.gamma_at({});
  t.value[{3, 1}] = in.d6theta / (qpow(rat(-6), 3) * g4);
  t.value[{2, 2}] = in.d4theta2 / (qpow(rat(-6), 2) * g4);
  t.value[{1, 3}] = in.d2theta3 / (rat(-6) * g4);
  t.value[{0, 4}] = in.theta4 / g4;
  // K3^[3]: (delta,delta) = -4, dim_C = 6.
  t.value[{0, 3}] = in.t3_theta3 / gamma3_empty;
  t.value[{1, 2}] = in.t3_d2theta2 / (rat(-4) * gamma3_empty);
  t.value[{2, 1}] = in.t3_d4theta / (qpow(rat(-4), 2) * gamma3_empty);
  t.value[{0, 2}] = in.t3_theta2c2 / gamma3_c2;
  t.value[{1, 1}] = in.t3_d2thetac2 / (rat(-4) * gamma3_c2);
  return t;
}

RatMatrix degree8_pairing_matrix(const FujikiTable& fuj, const AlphaTable& alpha) {
  // Basis (theta^2, theta c2, c2^2, c4); entry = integral of the product,
  // written as alpha(0, l) gamma(mu).
  auto entry = [&](int l, const ChernMono& mu) {
    return alpha.at(0, l) * fuj.gamma_at(mu);
  };
  RatMatrix m(4, 4);
  m.at(0, 0) = entry(4, {});
  m.at(0, 1) = m.at(1, 0) = entry(3, {2});
  m.at(0, 2) = m.at(2, 0) = entry(2, {2, 2});
  m.at(0, 3) = m.at(3, 0) = entry(2, {4});
  m.at(1, 1) = entry(2, {2, 2});
  m.at(1, 2) = m.at(2, 1) = entry(1, {2, 2, 2});
  m.at(1, 3) = m.at(3, 1) = entry(1, {2, 4});
  m.at(2, 2) = entry(0, {2, 2, 2, 2});
  m.at(2, 3) = m.at(3, 2) = entry(0, {2, 2, 4});
  m.at(3, 3) = entry(0, {4, 4});
  return m;
}

}  // namespace hilbk3
