#include "hilbk3/k3.hpp"

#include <stdexcept>

namespace hilbk3 {

namespace {

void add_u_block(std::vector<std::vector<Int>>& g, int o) {
  g[o][o + 1] = 1;
  g[o + 1][o] = 1;
}

// E8(-1): negated Cartan matrix; node 4 is the trivalent one (arms of
// 4, 2 and 1 nodes).
void add_e8_block(std::vector<std::vector<Int>>& g, int o) {
  static const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                 {4, 5}, {5, 6}, {4, 7}};
  for (int i = 0; i < 8; ++i) g[o + i][o + i] = -2;
  for (const auto& e : edges) {
    g[o + e[0]][o + e[1]] = 1;
    g[o + e[1]][o + e[0]] = 1;
  }
}

}  // namespace

MiddleLattice MiddleLattice::standard() {
  std::vector<std::vector<Int>> g(kMiddleRank, std::vector<Int>(kMiddleRank, 0));
  add_u_block(g, 0);
  add_u_block(g, 2);
  add_u_block(g, 4);
  add_e8_block(g, 6);
  add_e8_block(g, 14);
  return from_gram(std::move(g));
}

MiddleLattice MiddleLattice::from_gram(std::vector<std::vector<Int>> g) {
  if (g.size() != kMiddleRank) throw std::invalid_argument("MiddleLattice: rank");
  RatMatrix m(kMiddleRank, kMiddleRank);
  for (int i = 0; i < kMiddleRank; ++i) {
    if (g[i].size() != kMiddleRank) throw std::invalid_argument("MiddleLattice: rank");
    if (g[i][i] % 2 != 0) throw std::invalid_argument("MiddleLattice: odd lattice");
    for (int j = 0; j < kMiddleRank; ++j) {
      if (g[i][j] != g[j][i]) throw std::invalid_argument("MiddleLattice: not symmetric");
      m.at(i, j) = Rat(g[i][j]);
    }
  }
  const Rat d = det(m);
  if (d != 1 && d != -1) throw std::invalid_argument("MiddleLattice: not unimodular");
  const Inertia in = inertia(m);
  if (in.positive != 3 || in.negative != 19)
    throw std::invalid_argument("MiddleLattice: signature is not (3,19)");
  MiddleLattice lat;
  lat.gram = std::move(g);
  lat.gram_inv = inverse(m);
  return lat;
}

K3Class K3Class::unit() { return basis(kUnitIdx); }
K3Class K3Class::point() { return basis(kPointIdx); }

K3Class K3Class::middle(int j) {
  if (j < 1 || j > kMiddleRank) throw std::out_of_range("K3Class::middle");
  return basis(j);
}

K3Class K3Class::basis(int idx) {
  K3Class x;
  x.add(idx, Rat(1));
  return x;
}

Rat K3Class::coeff(int idx) const {
  auto it = c_.find(idx);
  return it == c_.end() ? Rat(0) : it->second;
}

K3Class& K3Class::add(int idx, const Rat& v) {
  if (v == 0) return *this;
  auto [it, fresh] = c_.emplace(idx, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
  return *this;
}

K3Class K3Class::operator+(const K3Class& o) const {
  K3Class r = *this;
  for (const auto& [i, v] : o.c_) r.add(i, v);
  return r;
}

K3Class K3Class::operator-(const K3Class& o) const {
  K3Class r = *this;
  for (const auto& [i, v] : o.c_) r.add(i, -v);
  return r;
}

K3Class K3Class::operator*(const Rat& s) const {
  K3Class r;
  if (s == 0) return r;
  for (const auto& [i, v] : c_) r.c_.emplace(i, v * s);
  return r;
}

std::optional<int> K3Class::degree() const {
  if (c_.empty()) return std::nullopt;
  const int d = basis_degree(c_.begin()->first);
  for (const auto& [i, v] : c_)
    if (basis_degree(i) != d) return std::nullopt;
  return d;
}

TensorClass& TensorClass::add(const std::vector<uint8_t>& key, const Rat& v) {
  if (v == 0) return *this;
  auto [it, fresh] = c.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
  return *this;
}

K3Algebra::K3Algebra(MiddleLattice lat) : lat_(std::move(lat)) {
  build_products();
  build_comul();
  // Euler class: m(Delta(1)); the closed form is -24 [pt].
  const TensorClass d1 = comul_basis(kUnitIdx, 2);
  K3Class e;
  for (const auto& [key, v] : d1.c) e = e + mulb_[key[0]][key[1]] * v;
  euler_ = e;
  if (!(euler_ == K3Class::point() * Rat(-24)))
    throw std::logic_error("K3Algebra: euler class is not -24 [pt]");
}

void K3Algebra::build_products() {
  mulb_.assign(kK3Dim, std::vector<K3Class>(kK3Dim));
  pcoef_.assign(kK3Dim, std::vector<Rat>(kK3Dim, Rat(0)));
  mulidx_.assign(kK3Dim, std::vector<int>(kK3Dim, -1));
  mulcoef_.assign(kK3Dim, std::vector<Rat>(kK3Dim, Rat(0)));
  for (int i = 0; i < kK3Dim; ++i)
    for (int j = 0; j < kK3Dim; ++j) {
      K3Class p;
      if (i == kUnitIdx)
        p = K3Class::basis(j);
      else if (j == kUnitIdx)
        p = K3Class::basis(i);
      else if (i != kPointIdx && j != kPointIdx)
        p = K3Class::point() * Rat(lat_.gram[i - 1][j - 1]);
      // [pt] times anything of positive degree is zero.
      mulb_[i][j] = p;
      pcoef_[i][j] = p.coeff(kPointIdx);
      if (!p.is_zero()) {
        mulidx_[i][j] = p.terms().begin()->first;
        mulcoef_[i][j] = p.terms().begin()->second;
      }
    }
}

K3Class K3Algebra::mul(const K3Class& x, const K3Class& y) const {
  K3Class r;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) r = r + mulb_[i][j] * (a * b);
  return r;
}

Rat K3Algebra::counit(const K3Class& x) const { return -x.coeff(kPointIdx); }

K3Class K3Algebra::dual_middle(int j) const {
  if (j < 1 || j > kMiddleRank) throw std::out_of_range("dual_middle");
  K3Class d;
  for (int k = 1; k <= kMiddleRank; ++k)
    d.add(k, lat_.gram_inv.at(j - 1, k - 1));
  return d;
}

RatMatrix K3Algebra::pairing_matrix() const {
  RatMatrix p(kK3Dim, kK3Dim);
  for (int i = 0; i < kK3Dim; ++i)
    for (int j = 0; j < kK3Dim; ++j) p.at(i, j) = -pcoef_[i][j];
  return p;
}

void K3Algebra::build_comul() {
  delta_.assign(3, std::vector<TensorClass>());  // [0] unused
  // r = 1: identity.
  delta_[1].assign(kK3Dim, TensorClass(1));
  for (int b = 0; b < kK3Dim; ++b)
    delta_[1][b].add({static_cast<uint8_t>(b)}, Rat(1));
  // r = 2 by adjointness: (T x T)(Delta(x) . (y x z)) = T(x y z) for all
  // basis y, z, i.e. the coefficient matrix is P^-1 M(x) P^-1 with
  // M(x)_{yz} = T(x y z) and P the Frobenius pairing.
  const RatMatrix pinv = inverse(pairing_matrix());
  delta_[2].assign(kK3Dim, TensorClass(2));
  for (int b = 0; b < kK3Dim; ++b) {
    RatMatrix m(kK3Dim, kK3Dim);
    for (int y = 0; y < kK3Dim; ++y)
      for (int z = 0; z < kK3Dim; ++z)
        m.at(y, z) = counit(mul(mulb_[b][y], K3Class::basis(z)));
    const RatMatrix coeffs = pinv * m * pinv;
    for (int y = 0; y < kK3Dim; ++y)
      for (int z = 0; z < kK3Dim; ++z)
        delta_[2][b].add({static_cast<uint8_t>(y), static_cast<uint8_t>(z)},
                         coeffs.at(y, z));
  }
  // Closed forms from adjointness (the assertion of record).
  TensorClass d1(2), dp(2);
  for (int j = 1; j <= kMiddleRank; ++j) {
    const K3Class dual = dual_middle(j);
    for (const auto& [k, v] : dual.terms())
      d1.add({static_cast<uint8_t>(j), static_cast<uint8_t>(k)}, -v);
    TensorClass dej(2);
    dej.add({static_cast<uint8_t>(j), kPointIdx}, Rat(-1));
    dej.add({kPointIdx, static_cast<uint8_t>(j)}, Rat(-1));
    if (!(delta_[2][j] == dej))
      throw std::logic_error("K3Algebra: Delta(e_j) closed form mismatch");
  }
  d1.add({kPointIdx, kUnitIdx}, Rat(-1));
  d1.add({kUnitIdx, kPointIdx}, Rat(-1));
  dp.add({kPointIdx, kPointIdx}, Rat(-1));
  if (!(delta_[2][kUnitIdx] == d1))
    throw std::logic_error("K3Algebra: Delta(1) closed form mismatch");
  if (!(delta_[2][kPointIdx] == dp))
    throw std::logic_error("K3Algebra: Delta([pt]) closed form mismatch");
}

const TensorClass& K3Algebra::comul_basis(int idx, int r) const {
  if (r < 1) throw std::domain_error("comul_n: r must be >= 1");
  // Delta[r] = (Delta[r-1] x id) . Delta[2], grown lazily.
  while (static_cast<int>(delta_.size()) <= r) {
    const int rr = static_cast<int>(delta_.size());
    std::vector<TensorClass> level(kK3Dim, TensorClass(rr));
    for (int b = 0; b < kK3Dim; ++b) {
      for (const auto& [key2, v2] : delta_[2][b].c) {
        const TensorClass& inner = delta_[rr - 1][key2[0]];
        for (const auto& [keyi, vi] : inner.c) {
          std::vector<uint8_t> key = keyi;
          key.push_back(key2[1]);
          level[b].add(key, v2 * vi);
        }
      }
    }
    delta_.push_back(std::move(level));
  }
  return delta_[r][idx];
}

TensorClass K3Algebra::comul_n(const K3Class& x, int r) const {
  if (r < 1) throw std::domain_error("comul_n: r must be >= 1");
  TensorClass t(r);
  for (const auto& [b, v] : x.terms())
    for (const auto& [key, w] : comul_basis(b, r).c) t.add(key, v * w);
  return t;
}

}  // namespace hilbk3
