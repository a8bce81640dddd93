#ifndef HILBK3_PERM_HPP
#define HILBK3_PERM_HPP

#include <cstdint>
#include <vector>

namespace hilbk3 {

// Permutation of {0..n-1} by image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<uint8_t> images);  // validates bijection
  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<uint8_t>& images() const { return img_; }

  // (this . o)(i) = this(o(i)).
  Perm compose(const Perm& o) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& t) const;  // t . this . t^-1
  bool is_identity() const;

  std::vector<int> cycle_type() const;  // part sizes, descending

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<uint8_t> img_;
};

// Partition of {0..n-1}; blocks are sorted internally and ordered by their
// minimum element, so block indices are canonical.
struct OrbitPartition {
  int n = 0;
  std::vector<std::vector<uint8_t>> blocks;
  std::vector<uint8_t> block_of;  // element -> block index

  static OrbitPartition singletons(int n);
  static OrbitPartition from_blocks(int n, std::vector<std::vector<uint8_t>> blocks);

  size_t size() const { return blocks.size(); }
  bool operator==(const OrbitPartition& o) const {
    return n == o.n && blocks == o.blocks;
  }
};

// Cycle partition of sigma (the orbits of the cyclic group it generates).
OrbitPartition orbits(const Perm& sigma);

// Finest common coarsening; for sigma, tau this is the orbit partition of
// the subgroup they generate.
OrbitPartition join(const OrbitPartition& p, const OrbitPartition& q);

bool refines(const OrbitPartition& fine, const OrbitPartition& coarse);

// Graph defect g(sigma,tau)(B) = (|B| + 2 - #sigma-orbits - #tau-orbits
// - #sigma tau-orbits)/2 on a block B of the join; throws if the result is
// not a nonnegative integer.
int graph_defect_block(const Perm& sigma, const Perm& tau,
                       const std::vector<uint8_t>& block);
std::vector<int> graph_defect(const Perm& sigma, const Perm& tau);

std::vector<Perm> all_perms(int n);
std::vector<Perm> perms_of_cycle_type(int n, std::vector<int> mu);

}  // namespace hilbk3

#endif
