#include "hilbk3/lehn_sorger.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hilbk3 {

size_t SymElement::term_count() const {
  size_t c = 0;
  for (const auto& [p, m] : t_) c += m.size();
  return c;
}

void SymElement::add_term(const Perm& sigma, const LabelVec& labels, const Rat& c) {
  if (c == 0) return;
  if (sigma.n() != n_) throw std::invalid_argument("SymElement: wrong n");
  auto& m = t_[sigma];
  auto [it, fresh] = m.emplace(labels, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) {
      m.erase(it);
      if (m.empty()) t_.erase(sigma);
    }
  }
}

Rat SymElement::coeff(const Perm& sigma, const LabelVec& labels) const {
  auto it = t_.find(sigma);
  if (it == t_.end()) return 0;
  auto jt = it->second.find(labels);
  return jt == it->second.end() ? Rat(0) : jt->second;
}

SymElement SymElement::operator+(const SymElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("SymElement: n mismatch");
  SymElement r = *this;
  for (const auto& [p, m] : o.t_)
    for (const auto& [l, c] : m) r.add_term(p, l, c);
  return r;
}

SymElement SymElement::operator-(const SymElement& o) const {
  return *this + o * Rat(-1);
}

SymElement SymElement::operator*(const Rat& s) const {
  SymElement r(n_);
  if (s == 0) return r;
  for (const auto& [p, m] : t_)
    for (const auto& [l, c] : m) r.t_[p].emplace(l, c * s);
  return r;
}

void SymElement::prune_all() {
  for (auto it = t_.begin(); it != t_.end();) {
    auto& m = it->second;
    for (auto jt = m.begin(); jt != m.end();)
      jt = (jt->second == 0) ? m.erase(jt) : std::next(jt);
    it = m.empty() ? t_.erase(it) : std::next(it);
  }
}

std::optional<int> SymElement::shifted_degree() const {
  std::optional<int> deg;
  for (const auto& [p, m] : t_)
    for (const auto& [l, c] : m) {
      int d = 0;
      for (uint8_t b : l) d += basis_degree(b);
      if (!deg)
        deg = d;
      else if (*deg != d)
        return std::nullopt;
    }
  return deg;
}

int SymElement::coh_degree() const {
  auto d = shifted_degree();
  if (!d) throw std::logic_error("SymElement: not homogeneous");
  return *d + 2 * n_;
}

void PartTensor::add(const LabelVec& key, const Rat& v) {
  if (v == 0) return;
  auto [it, fresh] = c.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

PartTensor coarsen(const K3Algebra& A, const PartTensor& x, const OrbitPartition& K) {
  if (!refines(x.part, K)) throw std::invalid_argument("coarsen: K is not coarser");
  PartTensor out;
  out.part = K;
  // K-block index of each x-block.
  std::vector<uint8_t> dest(x.part.size());
  for (size_t i = 0; i < x.part.size(); ++i)
    dest[i] = K.block_of[x.part.blocks[i].front()];
  for (const auto& [key, v] : x.c) {
    LabelVec okey(K.size(), kUnitIdx);
    Rat coef = v;
    bool dead = false;
    for (size_t i = 0; i < key.size() && !dead; ++i) {
      const int b = A.mul_basis_index(okey[dest[i]], key[i]);
      const Rat& s = A.mul_basis_coeff(okey[dest[i]], key[i]);
      if (b < 0 || s == 0) {
        dead = true;
        break;
      }
      coef *= s;
      okey[dest[i]] = static_cast<uint8_t>(b);
    }
    if (!dead) out.add(okey, coef);
  }
  return out;
}

PartTensor refine(const K3Algebra& A, const PartTensor& x, const OrbitPartition& H) {
  if (!refines(H, x.part)) throw std::invalid_argument("refine: H is not finer");
  PartTensor out;
  out.part = H;
  // Sub-blocks of each x-block, in canonical order.
  std::vector<std::vector<uint8_t>> sub(x.part.size());
  for (size_t h = 0; h < H.size(); ++h)
    sub[x.part.block_of[H.blocks[h].front()]].push_back(static_cast<uint8_t>(h));
  for (const auto& [key, v] : x.c) {
    LabelVec okey(H.size(), 0);
    std::function<void(size_t, const Rat&)> rec = [&](size_t k, const Rat& acc) {
      if (k == key.size()) {
        out.add(okey, acc);
        return;
      }
      const TensorClass& t = A.comul_basis(key[k], static_cast<int>(sub[k].size()));
      for (const auto& [tkey, tv] : t.c) {
        for (size_t i = 0; i < sub[k].size(); ++i) okey[sub[k][i]] = tkey[i];
        rec(k + 1, acc * tv);
      }
    };
    rec(0, v);
  }
  return out;
}

PartTensor mul_tensor(const K3Algebra& A, const PartTensor& x, const PartTensor& y) {
  if (!(x.part == y.part)) throw std::invalid_argument("mul_tensor: partition mismatch");
  PartTensor out;
  out.part = x.part;
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ky, vy] : y.c) {
      LabelVec okey(kx.size());
      Rat coef = vx * vy;
      bool dead = false;
      for (size_t i = 0; i < kx.size(); ++i) {
        const int b = A.mul_basis_index(kx[i], ky[i]);
        const Rat& s = A.mul_basis_coeff(kx[i], ky[i]);
        if (b < 0 || s == 0) {
          dead = true;
          break;
        }
        coef *= s;
        okey[i] = static_cast<uint8_t>(b);
      }
      if (!dead) out.add(okey, coef);
    }
  return out;
}

Rat pair_tensor(const K3Algebra& A, const PartTensor& x, const PartTensor& y) {
  if (!(x.part == y.part)) throw std::invalid_argument("pair_tensor: partition mismatch");
  Rat total(0);
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ky, vy] : y.c) {
      Rat f = vx * vy;
      for (size_t i = 0; i < kx.size() && f != 0; ++i)
        f *= -A.point_coeff(kx[i], ky[i]);  // T(b_i b_j)
      total += f;
    }
  return total;
}

int LabelledPartition::total() const {
  int t = 0;
  for (const auto& p : parts) t += p.size;
  return t;
}

LabelledPartition& LabelledPartition::add(int size, Kind kind, int pair_id) {
  parts.push_back({size, kind, pair_id});
  return *this;
}

HilbAlgebra::HilbAlgebra(const K3Algebra& A, int n) : A_(A), n_(n) {
  if (n < 1) throw std::invalid_argument("HilbAlgebra: n must be positive");
  perms_ = all_perms(n);
  for (size_t i = 0; i < perms_.size(); ++i) perm_index_[perms_[i]] = static_cast<int>(i);
  plans_.resize(perms_.size() * perms_.size());
}

SymElement HilbAlgebra::unit() const {
  SymElement u(n_);
  u.add_term(Perm::identity(n_), LabelVec(n_, kUnitIdx), Rat(1));
  return u;
}

const HilbAlgebra::Plan& HilbAlgebra::plan_for(const Perm& sigma, const Perm& tau) const {
  const size_t idx =
      perm_index_.at(sigma) * perms_.size() + perm_index_.at(tau);
  if (!plans_[idx]) {
    auto plan = std::make_unique<Plan>();
    plan->prod = sigma.compose(tau);
    const OrbitPartition osig = orbits(sigma);
    const OrbitPartition otau = orbits(tau);
    const OrbitPartition oprod = orbits(plan->prod);
    const OrbitPartition J = join(osig, otau);
    plan->out_orbit_count = oprod.size();
    plan->blocks.resize(J.size());
    for (size_t i = 0; i < osig.size(); ++i)
      plan->blocks[J.block_of[osig.blocks[i].front()]].sigma_orbits.push_back(
          static_cast<uint8_t>(i));
    for (size_t i = 0; i < otau.size(); ++i)
      plan->blocks[J.block_of[otau.blocks[i].front()]].tau_orbits.push_back(
          static_cast<uint8_t>(i));
    for (size_t i = 0; i < oprod.size(); ++i)
      plan->blocks[J.block_of[oprod.blocks[i].front()]].out_orbits.push_back(
          static_cast<uint8_t>(i));
    for (size_t k = 0; k < J.size(); ++k)
      plan->blocks[k].defect = graph_defect_block(sigma, tau, J.blocks[k]);
    plans_[idx] = std::move(plan);
  }
  return *plans_[idx];
}

void HilbAlgebra::cup_terms(const Plan& plan, const std::map<LabelVec, Rat>& xs,
                            const std::map<LabelVec, Rat>& ys,
                            std::map<LabelVec, Rat>& out) const {
  const size_t nb = plan.blocks.size();
  std::vector<int> bidx(nb);
  LabelVec okey(plan.out_orbit_count);
  for (const auto& [lx, cx] : xs) {
    for (const auto& [ly, cy] : ys) {
      Rat base = cx * cy;
      bool dead = false;
      for (size_t k = 0; k < nb && !dead; ++k) {
        const PlanBlock& blk = plan.blocks[k];
        int b = kUnitIdx;
        auto step = [&](int label) {
          const Rat& s = A_.mul_basis_coeff(b, label);
          if (s == 0 || A_.mul_basis_index(b, label) < 0) {
            dead = true;
            return;
          }
          base *= s;
          b = A_.mul_basis_index(b, label);
        };
        for (uint8_t i : blk.sigma_orbits) {
          step(lx[i]);
          if (dead) break;
        }
        for (uint8_t i : blk.tau_orbits) {
          if (dead) break;
          step(ly[i]);
        }
        // Euler-class twist e^defect with e = -24 [pt] (nilpotent: square 0).
        for (int g = 0; g < blk.defect && !dead; ++g) {
          step(kPointIdx);
          base *= -24;
        }
        bidx[k] = b;
      }
      if (dead) continue;
      std::function<void(size_t, const Rat&)> rec = [&](size_t k, const Rat& acc) {
        if (k == nb) {
          auto [it, fresh] = out.emplace(okey, acc);
          if (!fresh) it->second += acc;  // zeros pruned by the caller
          return;
        }
        const PlanBlock& blk = plan.blocks[k];
        const TensorClass& t =
            A_.comul_basis(bidx[k], static_cast<int>(blk.out_orbits.size()));
        for (const auto& [tkey, tv] : t.c) {
          for (size_t i = 0; i < blk.out_orbits.size(); ++i)
            okey[blk.out_orbits[i]] = tkey[i];
          rec(k + 1, acc * tv);
        }
      };
      rec(0, base);
    }
  }
}

SymElement HilbAlgebra::cup(const SymElement& x, const SymElement& y) const {
  if (x.n() != n_ || y.n() != n_) throw std::invalid_argument("cup: n mismatch");
  SymElement out(n_);
  for (const auto& [sigma, xs] : x.terms())
    for (const auto& [tau, ys] : y.terms()) {
      const Plan& plan = plan_for(sigma, tau);
      cup_terms(plan, xs, ys, out.raw_bucket(plan.prod));
    }
  out.prune_all();
  return out;
}

SymElement HilbAlgebra::cup_pow(const SymElement& x, int k) const {
  if (k < 0) throw std::invalid_argument("cup_pow: negative power");
  SymElement acc = unit();
  for (int i = 0; i < k; ++i) acc = cup(acc, x);
  return acc;
}

SymElement HilbAlgebra::cup_reference(const SymElement& x, const SymElement& y) const {
  if (x.n() != n_ || y.n() != n_) throw std::invalid_argument("cup: n mismatch");
  SymElement out(n_);
  for (const auto& [sigma, xs] : x.terms())
    for (const auto& [tau, ys] : y.terms()) {
      const Perm prod = sigma.compose(tau);
      const OrbitPartition osig = orbits(sigma);
      const OrbitPartition otau = orbits(tau);
      const OrbitPartition oprod = orbits(prod);
      const OrbitPartition J = join(osig, otau);
      const std::vector<int> defects = graph_defect(sigma, tau);
      // e^g blockwise; e^2 = 0 kills the pair outright.
      if (*std::max_element(defects.begin(), defects.end()) >= 2) continue;
      PartTensor euler_twist;
      euler_twist.part = J;
      {
        LabelVec key(J.size(), kUnitIdx);
        Rat coef(1);
        for (size_t k = 0; k < J.size(); ++k)
          if (defects[k] == 1) {
            key[k] = kPointIdx;
            coef *= -24;
          }
        euler_twist.add(key, coef);
      }
      PartTensor xt, yt;
      xt.part = osig;
      yt.part = otau;
      for (const auto& [lx, cx] : xs) xt.add(lx, cx);
      for (const auto& [ly, cy] : ys) yt.add(ly, cy);
      const PartTensor prod_t = mul_tensor(
          A_, mul_tensor(A_, coarsen(A_, xt, J), coarsen(A_, yt, J)), euler_twist);
      const PartTensor refined = refine(A_, prod_t, oprod);
      for (const auto& [key, v] : refined.c) out.add_term(prod, key, v);
    }
  return out;
}

SymElement HilbAlgebra::act(const Perm& tau, const SymElement& x) const {
  if (x.n() != n_ || tau.n() != n_) throw std::invalid_argument("act: n mismatch");
  SymElement out(n_);
  for (const auto& [sigma, xs] : x.terms()) {
    const Perm conj = sigma.conjugated_by(tau);
    const OrbitPartition os = orbits(sigma);
    const OrbitPartition oc = orbits(conj);
    // Orbit i of sigma maps to the oc-block containing tau(first element).
    std::vector<uint8_t> dest(os.size());
    for (size_t i = 0; i < os.size(); ++i)
      dest[i] = oc.block_of[tau(os.blocks[i].front())];
    for (const auto& [l, c] : xs) {
      LabelVec nl(oc.size());
      for (size_t i = 0; i < l.size(); ++i) nl[dest[i]] = l[i];
      out.add_term(conj, nl, c);
    }
  }
  return out;
}

bool HilbAlgebra::is_invariant(const SymElement& x) const {
  for (const Perm& tau : perms_)
    if (!(act(tau, x) == x)) return false;
  return true;
}

Rat HilbAlgebra::integrate(const SymElement& x) const {
  if (x.n() != n_) throw std::invalid_argument("integrate: n mismatch");
  const Rat c = x.coeff(Perm::identity(n_), LabelVec(n_, kPointIdx));
  return c / Rat(factorial(n_));
}

namespace {

// Labels pack into one machine word (byte per slot, first slot highest):
// the packed order agrees with lexicographic LabelVec order.
inline uint64_t pack_labels(const LabelVec& l) {
  uint64_t key = 0;
  for (uint8_t b : l) key = (key << 8) | b;
  return key;
}

}  // namespace

Rat HilbAlgebra::integrate_product(const SymElement& x, const SymElement& y) const {
  if (x.n() != n_ || y.n() != n_)
    throw std::invalid_argument("integrate_product: n mismatch");
  // Only sigma against sigma^-1 can land on the identity permutation, and
  // only the all-[pt] refinement survives; the coefficient of [pt]^r in
  // Delta[r](z) is (-1)^{r-1} (coefficient of [pt] in z).
  const auto& gram = A_.lattice().gram;
  Rat total(0);
  for (const auto& [sigma, xs] : x.terms()) {
    auto yt = y.terms().find(sigma.inverse());
    if (yt == y.terms().end()) continue;
    const auto& ys = yt->second;
    const size_t norb = orbits(sigma).size();
    const int sign = ((n_ - static_cast<int>(norb)) % 2 == 0) ? 1 : -1;
    // ys keys packed into sorted words for cheap binary search.
    std::vector<uint64_t> ykeys;
    std::vector<const Rat*> yvals;
    ykeys.reserve(ys.size());
    yvals.reserve(ys.size());
    for (const auto& [ly, cy] : ys) {
      ykeys.push_back(pack_labels(ly));
      yvals.push_back(&cy);
    }
    for (const auto& [lx, cx] : xs) {
      // Per-position partner options with their pairing factors.
      std::vector<std::vector<std::pair<uint8_t, Rat>>> options(norb);
      size_t cand_count = 1;
      bool possible = true;
      for (size_t i = 0; i < norb && possible; ++i) {
        const int b = lx[i];
        if (b == kUnitIdx)
          options[i] = {{kPointIdx, Rat(1)}};
        else if (b == kPointIdx)
          options[i] = {{kUnitIdx, Rat(1)}};
        else {
          for (int k = 1; k <= kMiddleRank; ++k)
            if (gram[b - 1][k - 1] != 0)
              options[i].push_back(
                  {static_cast<uint8_t>(k), Rat(gram[b - 1][k - 1])});
        }
        if (options[i].empty()) possible = false;
        cand_count *= options[i].size();
      }
      if (!possible) continue;
      if (cand_count <= 4 * ys.size()) {
        std::function<void(size_t, uint64_t, const Rat&)> rec =
            [&](size_t i, uint64_t key, const Rat& acc) {
              if (i == norb) {
                auto it = std::lower_bound(ykeys.begin(), ykeys.end(), key);
                if (it != ykeys.end() && *it == key)
                  total += Rat(sign) * cx * acc * *yvals[it - ykeys.begin()];
                return;
              }
              for (const auto& [lab, f] : options[i])
                rec(i + 1, (key << 8) | lab, acc * f);
            };
        rec(0, 0, Rat(1));
      } else {
        for (const auto& [ly, cy] : ys) {
          Rat f = cx * cy;
          for (size_t i = 0; i < norb && f != 0; ++i)
            f *= A_.point_coeff(lx[i], ly[i]);
          if (f != 0) total += Rat(sign) * f;
        }
      }
    }
  }
  return total / Rat(factorial(n_));
}

SymElement HilbAlgebra::one_point(const K3Class& x) const {
  SymElement out(n_);
  const Perm id = Perm::identity(n_);
  for (int i = 0; i < n_; ++i)
    for (const auto& [b, c] : x.terms()) {
      LabelVec l(n_, kUnitIdx);
      l[i] = static_cast<uint8_t>(b);
      out.add_term(id, l, c);
    }
  return out;
}

SymElement HilbAlgebra::build_class(const LabelledPartition& lp) const {
  if (lp.total() != n_)
    throw std::invalid_argument("build_class: part sizes must sum to n");
  {
    std::map<int, int> e_seen, d_seen;
    for (const auto& p : lp.parts) {
      if (p.kind == LabelledPartition::Kind::E) ++e_seen[p.pair_id];
      if (p.kind == LabelledPartition::Kind::EDual) ++d_seen[p.pair_id];
    }
    if (e_seen != d_seen)
      throw std::invalid_argument("build_class: unmatched e-pair ids");
    for (const auto& [id, c] : e_seen)
      if (c != 1) throw std::invalid_argument("build_class: duplicate pair id");
  }
  // sum_j e_j (x) e_j^dual expanded over the basis.
  std::vector<std::tuple<uint8_t, uint8_t, Rat>> pair_tensor_entries;
  const RatMatrix& ginv = A_.lattice().gram_inv;
  for (int j = 1; j <= kMiddleRank; ++j)
    for (int k = 1; k <= kMiddleRank; ++k)
      if (ginv.at(j - 1, k - 1) != 0)
        pair_tensor_entries.emplace_back(static_cast<uint8_t>(j),
                                         static_cast<uint8_t>(k),
                                         ginv.at(j - 1, k - 1));

  std::vector<int> mu;
  for (const auto& p : lp.parts) mu.push_back(p.size);

  SymElement out(n_);
  for (const Perm& sigma : perms_of_cycle_type(n_, mu)) {
    const OrbitPartition orbs = orbits(sigma);
    // Group part indices and orbit indices by size.
    std::map<int, std::vector<int>> parts_by_size, orbits_by_size;
    for (size_t i = 0; i < lp.parts.size(); ++i)
      parts_by_size[lp.parts[i].size].push_back(static_cast<int>(i));
    for (size_t i = 0; i < orbs.size(); ++i)
      orbits_by_size[static_cast<int>(orbs.blocks[i].size())].push_back(
          static_cast<int>(i));
    // Enumerate all bijective assignments (parts of each size permuted over
    // the orbits of that size); distinct expanded coefficient maps are
    // counted exactly once.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (auto& [sz, ps] : parts_by_size)
      groups.emplace_back(ps, orbits_by_size.at(sz));
    std::set<std::map<LabelVec, Rat>> distinct;
    std::vector<int> part_at_orbit(orbs.size(), -1);
    std::function<void(size_t)> enumerate = [&](size_t g) {
      if (g == groups.size()) {
        // Expand this assignment.
        LabelVec base(orbs.size(), kUnitIdx);
        std::vector<std::pair<int, int>> pair_slots;  // (E orbit, EDual orbit) per pair
        std::map<int, int> e_slot, d_slot;
        for (size_t oi = 0; oi < orbs.size(); ++oi) {
          const auto& part = lp.parts[part_at_orbit[oi]];
          switch (part.kind) {
            case LabelledPartition::Kind::Unit:
              base[oi] = kUnitIdx;
              break;
            case LabelledPartition::Kind::Point:
              base[oi] = kPointIdx;
              break;
            case LabelledPartition::Kind::E:
              e_slot[part.pair_id] = static_cast<int>(oi);
              break;
            case LabelledPartition::Kind::EDual:
              d_slot[part.pair_id] = static_cast<int>(oi);
              break;
          }
        }
        for (const auto& [pid, s] : e_slot) pair_slots.emplace_back(s, d_slot.at(pid));
        std::map<LabelVec, Rat> expanded;
        LabelVec key = base;
        std::function<void(size_t, const Rat&)> fill = [&](size_t p, const Rat& acc) {
          if (p == pair_slots.size()) {
            auto [it, fresh] = expanded.emplace(key, acc);
            if (!fresh) it->second += acc;
            return;
          }
          for (const auto& [j, k, v] : pair_tensor_entries) {
            key[pair_slots[p].first] = j;
            key[pair_slots[p].second] = k;
            fill(p + 1, acc * v);
          }
        };
        fill(0, Rat(1));
        distinct.insert(std::move(expanded));
        return;
      }
      std::vector<int> perm = groups[g].first;
      std::sort(perm.begin(), perm.end());
      do {
        for (size_t i = 0; i < perm.size(); ++i)
          part_at_orbit[groups[g].second[i]] = perm[i];
        enumerate(g + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    enumerate(0);
    for (const auto& m : distinct)
      for (const auto& [key, v] : m) out.add_term(sigma, key, v);
  }
  return out;
}

}  // namespace hilbk3
