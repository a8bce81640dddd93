#include "hilbk3/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilbk3 {

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("Perm: not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(n);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      p.img_[cyc[i]] = static_cast<uint8_t>(cyc[(i + 1) % cyc.size()]);
  std::vector<uint8_t> img = p.img_;
  return Perm(std::move(img));  // revalidate
}

Perm Perm::compose(const Perm& o) const {
  if (n() != o.n()) throw std::invalid_argument("Perm: size mismatch");
  std::vector<uint8_t> img(img_.size());
  for (int i = 0; i < n(); ++i) img[i] = img_[o.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<uint8_t> img(img_.size());
  for (int i = 0; i < n(); ++i) img[img_[i]] = static_cast<uint8_t>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::conjugated_by(const Perm& t) const {
  return t.compose(*this).compose(t.inverse());
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  for (const auto& b : orbits(*this).blocks) type.push_back(static_cast<int>(b.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

OrbitPartition OrbitPartition::singletons(int n) {
  std::vector<std::vector<uint8_t>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = {static_cast<uint8_t>(i)};
  return from_blocks(n, std::move(blocks));
}

OrbitPartition OrbitPartition::from_blocks(int n,
                                           std::vector<std::vector<uint8_t>> blocks) {
  OrbitPartition p;
  p.n = n;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.blocks = std::move(blocks);
  p.block_of.assign(n, 0xff);
  for (size_t bi = 0; bi < p.blocks.size(); ++bi)
    for (uint8_t e : p.blocks[bi]) {
      if (e >= n || p.block_of[e] != 0xff)
        throw std::invalid_argument("OrbitPartition: not a partition");
      p.block_of[e] = static_cast<uint8_t>(bi);
    }
  for (int i = 0; i < n; ++i)
    if (p.block_of[i] == 0xff)
      throw std::invalid_argument("OrbitPartition: element not covered");
  return p;
}

OrbitPartition orbits(const Perm& sigma) {
  const int n = sigma.n();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<uint8_t>> blocks;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<uint8_t> cyc;
    for (int j = i; !seen[j]; j = sigma(j)) {
      seen[j] = true;
      cyc.push_back(static_cast<uint8_t>(j));
    }
    blocks.push_back(std::move(cyc));
  }
  return OrbitPartition::from_blocks(n, std::move(blocks));
}

OrbitPartition join(const OrbitPartition& p, const OrbitPartition& q) {
  if (p.n != q.n) throw std::invalid_argument("join: size mismatch");
  // Union-find over the two block structures.
  std::vector<int> parent(p.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& part : {p, q})
    for (const auto& b : part.blocks)
      for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  std::vector<std::vector<uint8_t>> blocks;
  std::vector<int> root_block(p.n, -1);
  for (int i = 0; i < p.n; ++i) {
    const int r = find(i);
    if (root_block[r] == -1) {
      root_block[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[root_block[r]].push_back(static_cast<uint8_t>(i));
  }
  return OrbitPartition::from_blocks(p.n, std::move(blocks));
}

bool refines(const OrbitPartition& fine, const OrbitPartition& coarse) {
  if (fine.n != coarse.n) return false;
  for (const auto& b : fine.blocks) {
    const uint8_t cb = coarse.block_of[b.front()];
    for (uint8_t e : b)
      if (coarse.block_of[e] != cb) return false;
  }
  return true;
}

namespace {

int orbit_count_in(const Perm& g, const std::vector<uint8_t>& block) {
  std::vector<bool> seen(g.n(), false);
  int count = 0;
  for (uint8_t e : block) {
    if (seen[e]) continue;
    ++count;
    for (int j = e; !seen[j]; j = g(j)) seen[j] = true;
  }
  return count;
}

}  // namespace

int graph_defect_block(const Perm& sigma, const Perm& tau,
                       const std::vector<uint8_t>& block) {
  const int num = static_cast<int>(block.size()) + 2 -
                  orbit_count_in(sigma, block) - orbit_count_in(tau, block) -
                  orbit_count_in(sigma.compose(tau), block);
  if (num < 0 || num % 2 != 0)
    throw std::logic_error("graph_defect: not a nonnegative integer");
  return num / 2;
}

std::vector<int> graph_defect(const Perm& sigma, const Perm& tau) {
  const OrbitPartition j = join(orbits(sigma), orbits(tau));
  std::vector<int> g;
  g.reserve(j.blocks.size());
  for (const auto& b : j.blocks) g.push_back(graph_defect_block(sigma, tau, b));
  return g;
}

std::vector<Perm> all_perms(int n) {
  std::vector<uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Perm> perms_of_cycle_type(int n, std::vector<int> mu) {
  std::sort(mu.rbegin(), mu.rend());
  std::vector<Perm> out;
  for (const Perm& p : all_perms(n))
    if (p.cycle_type() == mu) out.push_back(p);
  return out;
}

}  // namespace hilbk3
