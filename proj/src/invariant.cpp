#include "hilbk3/invariant.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hilbk3/poly.hpp"

namespace hilbk3 {

namespace {

using Kind = LabelledPartition::Kind;

LabelledPartition lpart(std::initializer_list<LabelledPartition::Part> parts) {
  LabelledPartition lp;
  for (const auto& p : parts) lp.parts.push_back(p);
  return lp;
}

std::string memo_key(std::vector<std::string> factors) {
  std::sort(factors.begin(), factors.end());
  std::string key;
  for (const auto& f : factors) {
    key += f;
    key += ',';
  }
  return key;
}

}  // namespace

InvariantRing::InvariantRing(const HilbAlgebra& hilb) : hilb_(hilb) {
  if (n() == 4)
    build_n4();
  else if (n() == 3)
    build_n3();
  else
    throw std::invalid_argument("InvariantRing: only n = 3, 4 are modeled");
}

void InvariantRing::build_n4() {
  const auto I = [&](const LabelledPartition& lp) { return hilb_.build_class(lp); };
  named_["delta"] = I(lpart({{2, Kind::Unit}, {1, Kind::Unit}, {1, Kind::Unit}}));
  // degree 4
  named_["W"] = I(lpart({{3, Kind::Unit}, {1, Kind::Unit}}));
  named_["X"] = I(lpart({{2, Kind::Unit}, {2, Kind::Unit}}));
  named_["Y"] = I(lpart({{1, Kind::Unit}, {1, Kind::Unit}, {1, Kind::Unit}, {1, Kind::Point}}));
  named_["Z"] = I(lpart({{1, Kind::Unit}, {1, Kind::Unit}, {1, Kind::E, 0}, {1, Kind::EDual, 0}}));
  // degree 6
  named_["P"] = I(lpart({{4, Kind::Unit}}));
  named_["Q"] = I(lpart({{2, Kind::Point}, {1, Kind::Unit}, {1, Kind::Unit}}));
  named_["R"] = I(lpart({{2, Kind::Unit}, {1, Kind::Unit}, {1, Kind::Point}}));
  named_["S"] = I(lpart({{2, Kind::EDual, 0}, {1, Kind::E, 0}, {1, Kind::Unit}}));
  named_["T"] = I(lpart({{2, Kind::Unit}, {1, Kind::E, 0}, {1, Kind::EDual, 0}}));
  // degree 8
  named_["A"] = I(lpart({{3, Kind::E, 0}, {1, Kind::EDual, 0}}));
  named_["B"] = I(lpart({{3, Kind::Unit}, {1, Kind::Point}}));
  named_["C"] = I(lpart({{3, Kind::Point}, {1, Kind::Unit}}));
  named_["D"] = I(lpart({{2, Kind::Unit}, {2, Kind::Point}}));
  named_["E"] = I(lpart({{2, Kind::E, 0}, {2, Kind::EDual, 0}}));
  named_["F"] = I(lpart({{1, Kind::Unit}, {1, Kind::Unit}, {1, Kind::Point}, {1, Kind::Point}}));
  named_["G"] = I(lpart({{1, Kind::Unit}, {1, Kind::E, 0}, {1, Kind::EDual, 0}, {1, Kind::Point}}));
  named_["H"] = I(lpart({{1, Kind::E, 0}, {1, Kind::E, 1}, {1, Kind::EDual, 0}, {1, Kind::EDual, 1}}));
  named_["theta"] = make_theta();
}

void InvariantRing::build_n3() {
  named_["delta"] = hilb_.build_class(lpart({{2, Kind::Unit}, {1, Kind::Unit}}));
  named_["theta"] = make_theta();
  // c2(S^[3]) = 4/3 theta per the K3^[3] intersection theory; taken as
  // input here, its derivation is outside this model.
  named_["c2"] = named_["theta"] * rat(4, 3);
}

SymElement InvariantRing::make_theta() const {
  // theta = sum_j L(e_j) L(e_j^dual) + delta^2/(2-2n), the cup-product image
  // of the dual of the Beauville-Bogomolov form.
  const K3Algebra& A = hilb_.algebra();
  SymElement acc = hilb_.zero();
  for (int j = 1; j <= kMiddleRank; ++j)
    acc = acc + hilb_.cup(hilb_.one_point(K3Class::middle(j)),
                          hilb_.one_point(A.dual_middle(j)));
  const SymElement& d = named_.at("delta");
  return acc + hilb_.cup(d, d) * rat(1, 2 - 2 * n());
}

const SymElement& InvariantRing::named(const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end())
    throw std::out_of_range("InvariantRing: unknown class " + name);
  return it->second;
}

int InvariantRing::coh_degree_of(const std::string& name) const {
  return named(name).coh_degree();
}

std::vector<Rat> InvariantRing::express(const SymElement& x,
                                        const std::vector<std::string>& basis,
                                        bool via_normal_equations) const {
  // Ambient coordinates: one row per (sigma, labels) key appearing in the
  // basis or the target; entry nb holds the target coefficient.
  const size_t nb = basis.size();
  std::map<std::pair<Perm, LabelVec>, std::vector<Rat>> rows;
  auto slot = [&](const Perm& p, const LabelVec& l) -> std::vector<Rat>& {
    auto [it, fresh] = rows.emplace(std::make_pair(p, l), std::vector<Rat>());
    if (fresh) it->second.assign(nb + 1, Rat(0));
    return it->second;
  };
  for (size_t j = 0; j < nb; ++j)
    for (const auto& [p, m] : named(basis[j]).terms())
      for (const auto& [l, c] : m) slot(p, l)[j] = c;
  for (const auto& [p, m] : x.terms())
    for (const auto& [l, c] : m) slot(p, l)[nb] = c;

  std::vector<Rat> coords;
  if (via_normal_equations) {
    RatMatrix btb(nb, nb);
    std::vector<Rat> btt(nb, Rat(0));
    for (const auto& [key, r] : rows)
      for (size_t i = 0; i < nb; ++i) {
        if (r[i] == 0) continue;
        for (size_t j = 0; j < nb; ++j)
          if (r[j] != 0) btb.at(i, j) += r[i] * r[j];
        if (r[nb] != 0) btt[i] += r[i] * r[nb];
      }
    coords = solve_unique(btb, btt);  // throws when the basis is dependent
  } else {
    // Collect nb independent rows, then solve the small square system.
    std::vector<std::vector<Rat>> reduced, chosen;
    std::vector<size_t> pivots;
    std::vector<Rat> chosen_t;
    for (const auto& [key, r] : rows) {
      if (chosen.size() == nb) break;
      std::vector<Rat> red(r.begin(), r.begin() + nb);
      for (size_t t = 0; t < reduced.size(); ++t) {
        const Rat f = red[pivots[t]];
        if (f == 0) continue;
        for (size_t j = 0; j < nb; ++j) red[j] -= f * reduced[t][j];
      }
      size_t piv = nb;
      for (size_t j = 0; j < nb; ++j)
        if (red[j] != 0) {
          piv = j;
          break;
        }
      if (piv == nb) continue;
      const Rat inv = Rat(1) / red[piv];
      for (auto& v : red) v *= inv;
      reduced.push_back(std::move(red));
      pivots.push_back(piv);
      chosen.emplace_back(r.begin(), r.begin() + nb);
      chosen_t.push_back(r[nb]);
    }
    if (chosen.size() < nb) throw std::runtime_error("express: dependent basis");
    RatMatrix m(nb, nb);
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = 0; j < nb; ++j) m.at(i, j) = chosen[i][j];
    coords = solve_unique(m, chosen_t);
  }
  // Exact residual check on every ambient coordinate (also catches the
  // least-squares-but-outside-span case on the normal-equation path).
  for (const auto& [key, r] : rows) {
    Rat dot(0);
    for (size_t j = 0; j < nb; ++j)
      if (r[j] != 0 && coords[j] != 0) dot += r[j] * coords[j];
    if (dot != r[nb]) throw std::runtime_error("express: not in span");
  }
  return coords;
}

std::map<std::string, std::vector<Rat>> InvariantRing::degree4_table() const {
  static const std::vector<std::string> deg4 = {"W", "X", "Y", "Z"};
  static const std::vector<std::string> deg8 = {"A", "B", "C", "D",
                                                "E", "F", "G", "H"};
  std::map<std::string, std::vector<Rat>> table;
  for (size_t i = 0; i < deg4.size(); ++i)
    for (size_t j = i; j < deg4.size(); ++j)
      table[deg4[i] + deg4[j]] =
          express(element_for({deg4[i], deg4[j]}), deg8);
  return table;
}

RatMatrix InvariantRing::gram_AH() const {
  static const std::vector<std::string> deg8 = {"A", "B", "C", "D",
                                                "E", "F", "G", "H"};
  RatMatrix g(8, 8);
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = i; j < 8; ++j) {
      g.at(i, j) = hilb_.integrate_product(named(deg8[i]), named(deg8[j]));
      g.at(j, i) = g.at(i, j);
    }
  return g;
}

const SymElement& InvariantRing::element_for(std::vector<std::string> factors) const {
  std::sort(factors.begin(), factors.end());
  const std::string key = memo_key(factors);
  auto it = product_memo_.find(key);
  if (it != product_memo_.end()) return it->second;
  SymElement result = hilb_.zero();
  if (factors.empty()) {
    result = hilb_.unit();
  } else if (factors.size() == 1) {
    result = named(factors[0]);
  } else {
    // Balanced split by cohomological degree keeps intermediate elements
    // small and maximizes memo reuse.
    std::vector<std::string> order = factors;
    std::stable_sort(order.begin(), order.end(),
                     [&](const std::string& a, const std::string& b) {
                       return coh_degree_of(a) > coh_degree_of(b);
                     });
    std::vector<std::string> left, right;
    int dl = 0, dr = 0;
    for (const auto& f : order) {
      if (dl <= dr) {
        left.push_back(f);
        dl += coh_degree_of(f);
      } else {
        right.push_back(f);
        dr += coh_degree_of(f);
      }
    }
    result = hilb_.cup(element_for(left), element_for(right));
  }
  return product_memo_.emplace(key, std::move(result)).first->second;
}

Rat InvariantRing::integral(const std::vector<std::string>& factors) const {
  int deg = 0;
  for (const auto& f : factors) deg += coh_degree_of(f);
  if (deg != 4 * n())
    throw std::invalid_argument("integral: total degree must be 4n");
  // Split once, pair the two halves without forming the full product.
  std::vector<std::string> order = factors;
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     return coh_degree_of(a) > coh_degree_of(b);
                   });
  std::vector<std::string> left, right;
  int dl = 0, dr = 0;
  for (const auto& f : order) {
    if (dl <= dr) {
      left.push_back(f);
      dl += coh_degree_of(f);
    } else {
      right.push_back(f);
      dr += coh_degree_of(f);
    }
  }
  return hilb_.integrate_product(element_for(left), element_for(right));
}

Rat InvariantRing::product_value(int delta_pow, int theta_pow, int c2_pow) const {
  std::vector<std::string> factors;
  factors.insert(factors.end(), delta_pow, "delta");
  factors.insert(factors.end(), theta_pow, "theta");
  factors.insert(factors.end(), c2_pow, "c2");
  return integral(factors);
}

void InvariantRing::set_c2(const SymElement& c2) {
  named_["c2"] = c2;
  // Invalidate any memoized products that mention c2.
  for (auto it = product_memo_.begin(); it != product_memo_.end();)
    if (it->first.find("c2,") != std::string::npos)
      it = product_memo_.erase(it);
    else
      ++it;
}

InvariantRing::Chern2Result InvariantRing::solve_chern2(const Chern2Inputs& in) {
  if (n() != 4) throw std::logic_error("solve_chern2: n = 4 only");
  static const std::vector<std::string> basis = {"W", "X", "Y", "Z"};
  // Stage 1: the rank-2 linear system from pairings with theta^3,
  // delta^2 theta^2, delta^4 theta, delta^6.
  const std::vector<std::vector<std::string>> tests = {
      {"theta", "theta", "theta"},
      {"delta", "delta", "theta", "theta"},
      {"delta", "delta", "delta", "delta", "theta"},
      {"delta", "delta", "delta", "delta", "delta", "delta"}};
  RatMatrix m(4, 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      std::vector<std::string> f = tests[i];
      f.push_back(basis[j]);
      m.at(i, j) = integral(f);
    }
  const AffineSolution sol =
      solve(m, {in.linear_rhs[0], in.linear_rhs[1], in.linear_rhs[2], in.linear_rhs[3]});
  if (!sol.consistent || sol.kernel.size() != 2)
    throw std::runtime_error("solve_chern2: expected a rank-2 system");

  // Reparametrize the affine solution set by u = x-coord + 21/4 and
  // v = -3 z-coord, the coordinates in which the candidate pairs are
  // reported.
  RatMatrix jac(2, 2);
  jac.at(0, 0) = sol.kernel[0][1];   // d x / d a
  jac.at(0, 1) = sol.kernel[1][1];   // d x / d b
  jac.at(1, 0) = sol.kernel[0][3] * Rat(-3);
  jac.at(1, 1) = sol.kernel[1][3] * Rat(-3);
  const RatMatrix jinv = inverse(jac);
  const Rat u0 = sol.particular[1] + rat(21, 4);
  const Rat v0 = sol.particular[3] * Rat(-3);
  // c(u,v) = c0 + u Ku + v Kv.
  std::vector<Rat> c0(4), ku(4), kv(4);
  for (size_t i = 0; i < 4; ++i) {
    ku[i] = jinv.at(0, 0) * sol.kernel[0][i] + jinv.at(1, 0) * sol.kernel[1][i];
    kv[i] = jinv.at(0, 1) * sol.kernel[0][i] + jinv.at(1, 1) * sol.kernel[1][i];
    c0[i] = sol.particular[i] - u0 * ku[i] - v0 * kv[i];
  }

  // Stage 2: the three quadratic conditions from c2^2 against theta^2,
  // delta^2 theta, delta^4.
  const std::vector<std::vector<std::string>> quads = {
      {"theta", "theta"}, {"delta", "delta", "theta"}, {"delta", "delta", "delta", "delta"}};
  // f_m(u,v) as a quadratic in v with RatPoly-in-u coefficients.
  struct Conic {
    RatPoly a, b, c;  // a(u) v^2 + b(u) v + c(u)
  };
  std::vector<Conic> conics;
  for (size_t mi = 0; mi < quads.size(); ++mi) {
    RatMatrix P(4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i; j < 4; ++j) {
        std::vector<std::string> f = quads[mi];
        f.push_back(basis[i]);
        f.push_back(basis[j]);
        P.at(i, j) = integral(f);
        P.at(j, i) = P.at(i, j);
      }
    auto form = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
      Rat s(0);
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) s += x[i] * P.at(i, j) * y[j];
      return s;
    };
    Conic q;
    q.a = RatPoly::constant(form(kv, kv));
    q.b = RatPoly(std::vector<Rat>{form(c0, kv) * 2, form(ku, kv) * 2});
    q.c = RatPoly(std::vector<Rat>{form(c0, c0) - in.quad_rhs[mi],
                                   form(c0, ku) * 2, form(ku, ku)});
    conics.push_back(std::move(q));
  }
  // Resultant in v of two quadratics.
  auto res_v = [](const Conic& f, const Conic& g) {
    const RatPoly ac = f.a * g.c - g.a * f.c;
    const RatPoly ab = f.a * g.b - g.a * f.b;
    const RatPoly bc = f.b * g.c - g.b * f.c;
    return ac * ac - ab * bc;
  };
  const RatPoly g12 = res_v(conics[0], conics[1]);
  const RatPoly g13 = res_v(conics[0], conics[2]);
  const RatPoly g = gcd(g12, g13);
  std::vector<Rat> u_roots;
  if (g.degree() == 1) {
    u_roots.push_back(-g.coeff(0) / g.coeff(1));
  } else if (g.degree() == 2) {
    const auto disc = rat_sqrt(g.coeff(1) * g.coeff(1) - g.coeff(0) * g.coeff(2) * 4);
    if (disc)
      for (int s : {1, -1})
        u_roots.push_back((-g.coeff(1) + *disc * s) / (g.coeff(2) * 2));
  } else {
    u_roots = rational_roots(g);
  }
  std::sort(u_roots.begin(), u_roots.end());
  u_roots.erase(std::unique(u_roots.begin(), u_roots.end()), u_roots.end());

  Chern2Result result;
  result.linear_matrix = m;
  for (const Rat& u : u_roots) {
    const Rat qa = conics[0].a.eval(u), qb = conics[0].b.eval(u),
              qc = conics[0].c.eval(u);
    std::vector<Rat> v_roots;
    if (qa == 0) {
      if (qb != 0) v_roots.push_back(-qc / qb);
    } else {
      const auto disc = rat_sqrt(qb * qb - qa * qc * 4);
      if (disc)
        for (int s : {1, -1}) v_roots.push_back((-qb + *disc * s) / (qa * 2));
    }
    for (const Rat& v : v_roots) {
      bool all = true;
      for (const Conic& q : conics)
        if (q.a.eval(u) * v * v + q.b.eval(u) * v + q.c.eval(u) != 0) all = false;
      if (all) result.candidates.emplace_back(u, v);
    }
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const auto& p, const auto& q) {
              return p.first > q.first;  // (21/4, -9) first, as reported
            });
  result.candidates.erase(
      std::unique(result.candidates.begin(), result.candidates.end()),
      result.candidates.end());

  // Final filter: the value of c2^4.
  std::vector<std::vector<Rat>> winners;
  for (const auto& [u, v] : result.candidates) {
    std::vector<Rat> coords(4);
    SymElement cand = hilb_.zero();
    for (size_t i = 0; i < 4; ++i) {
      coords[i] = c0[i] + u * ku[i] + v * kv[i];
      cand = cand + named(basis[i]) * coords[i];
    }
    const SymElement sq = hilb_.cup(cand, cand);
    if (hilb_.integrate_product(sq, sq) == in.c2_fourth) {
      winners.push_back(coords);
      set_c2(cand);
    }
  }
  if (winners.size() != 1)
    throw std::runtime_error("solve_chern2: the c2^4 filter did not select a unique candidate");
  result.coords = winners[0];
  return result;
}

const SymElement& InvariantRing::alpha_class() {
  if (n() != 4) throw std::logic_error("alpha_class: n = 4 only");
  if (!has("c2")) throw std::logic_error("alpha_class: c2 must be solved first");
  if (!has("alpha")) {
    named_["alpha"] =
        named("X") - named("Y") * Rat(3) + named("Z");
    static const std::vector<std::vector<std::string>> vanishing = {
        {"delta", "delta", "delta", "delta", "theta"},
        {"delta", "delta", "delta", "delta", "c2"},
        {"delta", "delta", "theta", "theta"},
        {"delta", "delta", "theta", "c2"},
        {"delta", "delta", "c2", "c2"},
        {"theta", "theta", "theta"},
        {"theta", "theta", "c2"},
        {"theta", "c2", "c2"},
        {"c2", "c2", "c2"}};
    for (const auto& w : vanishing) {
      std::vector<std::string> f = w;
      f.push_back("alpha");
      if (integral(f) != 0)
        throw std::logic_error("alpha_class: nonvanishing degree-12 pairing");
    }
    const std::vector<std::pair<std::vector<std::string>, Rat>> values = {
        {{"alpha", "alpha", "theta", "theta"}, Rat(9450)},
        {{"alpha", "alpha", "theta", "c2"}, Rat(14148)},
        {{"alpha", "alpha", "c2", "c2"}, Rat(21168)}};
    for (const auto& [f, expected] : values)
      if (integral(f) != expected)
        throw std::logic_error("alpha_class: alpha^2 pairing mismatch");
  }
  return named("alpha");
}

void InvariantRing::validate_basis() const {
  std::map<int, std::vector<std::string>> by_degree;
  std::vector<std::string> names;
  if (n() == 4)
    names = {"delta", "W", "X", "Y", "Z", "P", "Q", "R",
             "S",     "T", "A", "B", "C", "D", "E", "F", "G", "H"};
  else
    names = {"delta"};
  static const std::map<std::string, int> expected_degree = {
      {"delta", 2}, {"W", 4}, {"X", 4}, {"Y", 4}, {"Z", 4}, {"P", 6},
      {"Q", 6},     {"R", 6}, {"S", 6}, {"T", 6}, {"A", 8}, {"B", 8},
      {"C", 8},     {"D", 8}, {"E", 8}, {"F", 8}, {"G", 8}, {"H", 8}};
  for (const auto& name : names) {
    const SymElement& e = named(name);
    if (e.coh_degree() != expected_degree.at(name))
      throw std::logic_error("validate_basis: wrong degree for " + name);
    if (!hilb_.is_invariant(e))
      throw std::logic_error("validate_basis: " + name + " is not S_n-invariant");
    by_degree[e.coh_degree()].push_back(name);
  }
  if (!hilb_.is_invariant(theta()))
    throw std::logic_error("validate_basis: theta is not S_n-invariant");
  for (const auto& [deg, group] : by_degree) {
    const size_t nb = group.size();
    std::map<std::pair<Perm, LabelVec>, std::vector<Rat>> rows;
    for (size_t j = 0; j < nb; ++j)
      for (const auto& [p, m] : named(group[j]).terms())
        for (const auto& [l, c] : m) {
          auto [it, fresh] = rows.emplace(std::make_pair(p, l), std::vector<Rat>());
          if (fresh) it->second.assign(nb, Rat(0));
          it->second[j] = c;
        }
    std::vector<std::vector<Rat>> reduced;
    std::vector<size_t> pivots;
    for (const auto& [key, r] : rows) {
      if (reduced.size() == nb) break;
      std::vector<Rat> red = r;
      for (size_t t = 0; t < reduced.size(); ++t) {
        const Rat f = red[pivots[t]];
        if (f == 0) continue;
        for (size_t j = 0; j < nb; ++j) red[j] -= f * reduced[t][j];
      }
      size_t piv = nb;
      for (size_t j = 0; j < nb; ++j)
        if (red[j] != 0) {
          piv = j;
          break;
        }
      if (piv == nb) continue;
      const Rat inv = Rat(1) / red[piv];
      for (auto& v : red) v *= inv;
      reduced.push_back(std::move(red));
      pivots.push_back(piv);
    }
    if (reduced.size() != nb)
      throw std::logic_error("validate_basis: dependent classes in degree " +
                             std::to_string(deg));
  }
}

}  // namespace hilbk3
