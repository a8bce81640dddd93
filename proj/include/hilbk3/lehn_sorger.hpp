#ifndef HILBK3_LEHN_SORGER_HPP
#define HILBK3_LEHN_SORGER_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hilbk3/k3.hpp"
#include "hilbk3/perm.hpp"

namespace hilbk3 {

// One A-basis label per orbit/block, in canonical block order.
using LabelVec = std::vector<uint8_t>;

// Element of A{S_n}: sparse rational combination of pure tensors
// (sigma, labels of the sigma-orbits).
class SymElement {
 public:
  SymElement() = default;
  explicit SymElement(int n) : n_(n) {}

  int n() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const;

  void add_term(const Perm& sigma, const LabelVec& labels, const Rat& c);
  Rat coeff(const Perm& sigma, const LabelVec& labels) const;

  SymElement operator+(const SymElement& o) const;
  SymElement operator-(const SymElement& o) const;
  SymElement operator*(const Rat& s) const;
  bool operator==(const SymElement& o) const { return n_ == o.n_ && t_ == o.t_; }

  // Shifted degree (sum of the shifted label degrees); nullopt when mixed
  // or zero.  Cohomological degree is shifted + 2n.
  std::optional<int> shifted_degree() const;
  int coh_degree() const;

  const std::map<Perm, std::map<LabelVec, Rat>>& terms() const { return t_; }

  // Bulk-accumulation interface for the product kernel; callers must call
  // prune_all() afterwards to restore the no-zero-coefficients invariant.
  std::map<LabelVec, Rat>& raw_bucket(const Perm& sigma) { return t_[sigma]; }
  void prune_all();

 private:
  int n_ = 0;
  std::map<Perm, std::map<LabelVec, Rat>> t_;
};

// Labeled tensor over a set partition: a sparse element of A^{blocks}.
struct PartTensor {
  OrbitPartition part;
  std::map<LabelVec, Rat> c;

  void add(const LabelVec& key, const Rat& v);
};

// Ring homomorphism A^H -> A^K for K coarsening x.part: multiplies the
// labels of the H-blocks contained in each K-block.
PartTensor coarsen(const K3Algebra& A, const PartTensor& x, const OrbitPartition& K);

// Adjoint map A^K -> A^H for H refining x.part: blockwise comultiplication,
// tensor factors distributed to the sub-blocks in canonical order.
PartTensor refine(const K3Algebra& A, const PartTensor& x, const OrbitPartition& H);

// Blockwise product over a common partition.
PartTensor mul_tensor(const K3Algebra& A, const PartTensor& x, const PartTensor& y);

// (T x ... x T)(x . y) for tensors over a common partition.
Rat pair_tensor(const K3Algebra& A, const PartTensor& x, const PartTensor& y);

// A partition of n with a label per part; e-labile parts come in (E, EDual)
// pairs that are expanded as sum_j e_j (x) e_j^dual.
struct LabelledPartition {
  enum class Kind { Unit, Point, E, EDual };
  struct Part {
    int size = 1;
    Kind kind = Kind::Unit;
    int pair_id = 0;  // meaningful for E/EDual
  };
  std::vector<Part> parts;

  int total() const;
  LabelledPartition& add(int size, Kind kind, int pair_id = 0);
};

// The Lehn-Sorger algebra A{S_n} for A the K3 Frobenius algebra, with the
// cup product of H*(S^[n]) on its symmetric part.
class HilbAlgebra {
 public:
  HilbAlgebra(const K3Algebra& A, int n);

  int n() const { return n_; }
  const K3Algebra& algebra() const { return A_; }
  const std::vector<Perm>& perms() const { return perms_; }

  SymElement zero() const { return SymElement(n_); }
  SymElement unit() const;

  SymElement cup(const SymElement& x, const SymElement& y) const;
  SymElement cup_pow(const SymElement& x, int k) const;

  // Direct transcription of the product formula through coarsen/refine;
  // kept as the slow reference for equivalence tests.
  SymElement cup_reference(const SymElement& x, const SymElement& y) const;

  SymElement act(const Perm& tau, const SymElement& x) const;
  bool is_invariant(const SymElement& x) const;

  // Integral over S^[n]: coefficient of (id, [pt]...[pt]) divided by n!.
  Rat integrate(const SymElement& x) const;
  // integrate(cup(x, y)) without forming the product.
  Rat integrate_product(const SymElement& x, const SymElement& y) const;

  SymElement build_class(const LabelledPartition& lp) const;
  // sum over slots of (id, x at one slot, units elsewhere).
  SymElement one_point(const K3Class& x) const;

 private:
  struct PlanBlock {
    std::vector<uint8_t> sigma_orbits;  // canonical sigma-orbit indices inside
    std::vector<uint8_t> tau_orbits;
    std::vector<uint8_t> out_orbits;  // canonical sigma tau-orbit indices inside
    int defect = 0;
  };
  struct Plan {
    Perm prod;
    size_t out_orbit_count = 0;
    std::vector<PlanBlock> blocks;
  };

  const Plan& plan_for(const Perm& sigma, const Perm& tau) const;
  void cup_terms(const Plan& plan, const std::map<LabelVec, Rat>& xs,
                 const std::map<LabelVec, Rat>& ys,
                 std::map<LabelVec, Rat>& out) const;

  const K3Algebra& A_;
  int n_;
  std::vector<Perm> perms_;
  std::map<Perm, int> perm_index_;
  mutable std::vector<std::unique_ptr<Plan>> plans_;
};

}  // namespace hilbk3

#endif
