#include "hilbk3/plane.hpp"

#include <stdexcept>

namespace hilbk3 {

namespace {

// (lambda-square power, theta power, c2 power) of each basis class.
struct BasisShape {
  int k, t, c;
};
constexpr BasisShape kShapes[6] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                   {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};

}  // namespace

PlaneSolver::PlaneSolver(const FujikiTable& fujiki, const AlphaTable& alpha,
                         const AlphaBlock& ablock)
    : fujiki_(fujiki), alpha_(alpha), ablock_(ablock) {}

RatMatrix PlaneSolver::m_lambda(const Rat& x) const {
  if (x == 0) throw std::invalid_argument("m_lambda: (lambda,lambda) must be nonzero");
  RatMatrix m(kPlaneBasisSize, kPlaneBasisSize);
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      const int k = kShapes[i].k + kShapes[j].k;
      const int t = kShapes[i].t + kShapes[j].t;
      const int c = kShapes[i].c + kShapes[j].c;
      const ChernMono mu(c, 2);  // c2^c
      m.at(i, j) = alpha_.at(k, t) * fujiki_.gamma_at(mu) * qpow(x, k);
      m.at(j, i) = m.at(i, j);
    }
  m.at(6, 6) = ablock_.theta_theta;
  m.at(6, 7) = m.at(7, 6) = ablock_.theta_c2;
  m.at(7, 7) = ablock_.c2_c2;
  return m;
}

std::vector<Rat> PlaneSolver::restriction_rhs(const Rat& x, const Rat& y) const {
  // lambda restricts to (x/6) h; theta to -7/2 h^2; c2 to -5 h^2 (from the
  // total Chern class (1 - h^2)^5 of T_X restricted to the plane); alpha to
  // y h^2.
  const Rat l = x / 6;
  return {qpow(l, 4),   l * l * rat(-7, 2), l * l * rat(-5), rat(49, 4),
          rat(35, 2),   rat(25),            y * rat(-7, 2),  y * rat(-5)};
}

std::vector<Rat> PlaneSolver::solve_plane(const Rat& x, const Rat& y) const {
  return solve_unique(m_lambda(x), restriction_rhs(x, y));
}

std::vector<Rat> PlaneSolver::closed_form_vector(const Rat& x, const Rat& y) {
  return {(rat(25) + rat(700) / x + rat(1764) / (x * x)) / 608256,
          (x * 25 + 3276 + rat(15876) / x) / -2737152,
          (rat(23) + rat(126) / x) / 38016,
          (x * x + x * 252 - 41148) / 5474304,
          (x * 5 - 2142) / -190080,
          rat(-1, 240),
          y * rat(31, 1188),
          y * rat(-7, 396)};
}

Rat PlaneSolver::Quartic::eval_rhs(const Rat& x) const {
  Rat acc(0);
  for (int i = 4; i >= 0; --i) acc = acc * x + coeff[i];
  return acc;
}

Rat PlaneSolver::Quartic::residual(const Rat& x, const Rat& y) const {
  return y * y - eval_rhs(x);
}

PlaneSolver::Quartic PlaneSolver::self_intersection_constraint() const {
  // [P^4]^2 as a function of (x, y): polynomial of degree 4 in x plus a
  // pure y^2 term from the alpha block.  Reconstructed by evaluation and
  // interpolation, with extra points certifying the degree bound.
  auto self_int = [&](const Rat& x, const Rat& y) {
    const std::vector<Rat> v = solve_plane(x, y);
    const std::vector<Rat> mv = m_lambda(x).apply(v);
    Rat s(0);
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * mv[i];
    return s;
  };
  std::vector<std::pair<Rat, Rat>> pts;
  for (long x = 1; x <= 5; ++x) {
    pts.emplace_back(rat(x), self_int(rat(x), Rat(0)));
    pts.emplace_back(rat(-x), self_int(rat(-x), Rat(0)));
  }
  const RatPoly s0 = interpolate(pts);
  if (s0.degree() > 4)
    throw std::logic_error("self_intersection_constraint: degree exceeds 4");
  for (long x : {7, -11, 13, -126})
    if (s0.eval(rat(x)) != self_int(rat(x), Rat(0)))
      throw std::logic_error("self_intersection_constraint: not a quartic in x");
  // The y-dependence: a single y^2 term, constant across x.
  const Rat ycoef = self_int(rat(2), rat(1)) - s0.eval(rat(2));
  for (long x : {3, -5})
    for (long y : {2, 3})
      if (self_int(rat(x), rat(y)) - s0.eval(rat(x)) != ycoef * y * y)
        throw std::logic_error(
            "self_intersection_constraint: y-dependence is not pure y^2");
  if (ycoef != rat(-7, 2376))
    throw std::logic_error("self_intersection_constraint: y^2 coefficient");
  // [P^4]^2 = 5 rearranged to y^2 = quartic(x).
  Quartic q;
  const Rat scale = rat(-1) / ycoef;  // 2376/7
  for (int i = 0; i <= 4; ++i)
    q.coeff[i] = (s0.coeff(i) - (i == 0 ? rat(5) : Rat(0))) * scale;
  return q;
}

PlaneSolver::FinalClass PlaneSolver::final_class(bool diophantine_confirmed) const {
  if (!diophantine_confirmed)
    throw std::logic_error(
        "final_class: the Diophantine uniqueness of (-126, 0) must be "
        "established first");
  const std::vector<Rat> v = solve_plane(rat(-126), Rat(0));
  FinalClass out;
  // lambda = 3 rho: powers of 3 move the lambda coefficients to the rho
  // basis.
  out.rho_coeffs = {v[0] * 81, v[1] * 9, v[2] * 9, v[3],
                    v[4],      v[5],     v[6],     v[7]};
  out.line_square = rat(-126, 36);  // (l, l) = x/36 for l = lambda/6
  return out;
}

}  // namespace hilbk3
