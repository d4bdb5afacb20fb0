#pragma once
// Integer lattices with a finite group action, presented concretely: a rank
// m and a list of m x m integer generator matrices of determinant +-1 whose
// generated group is finite (checked by closure, never assumed).
//
// Three quantities feed the multiplicity bound:
//
//   fixed_dim_mod_p     dim over F_p of the simultaneous kernel of M_g - I
//                       acting on (Z/p)^m (a vector fixed by all generators
//                       is fixed by the whole group);
//   rational_fixed_rank rank of the integer kernel of the stacked M_g - I;
//   h1_p_torsion_dim    their difference.
//
// The difference computes the p-torsion of the first cohomology of the
// lattice: multiplying the exact sequence 0 -> L -> L -> L/pL -> 0 (the
// middle map is multiplication by p) through group invariants gives
//
//   0 -> L^G / p L^G -> (L/pL)^G -> H^1(G, L)[p] -> 0,
//
// and p L intersected with L^G equals p L^G because L is torsion-free, so
// dim (L/pL)^G = rank L^G + dim H^1(G, L)[p].
//
// Permutation modules come in two shapes: the natural one (basis permuted),
// and the augmentation one, the sublattice of coordinate-sum zero with basis
// e_i - e_0 (i = 1..k-1), on which sigma acts by
//   sigma (e_j - e_0) = (e_{sigma(j)} - e_0) - (e_{sigma(0)} - e_0).

#include <cstdint>
#include <vector>

#include "selbound/arith.hpp"

namespace selbound::lattice {

using arith::Integer;
using arith::Rational;

struct IntMat {
  unsigned n = 0;
  std::vector<std::int64_t> a;  // row-major, n*n entries

  IntMat() = default;
  explicit IntMat(unsigned size);
  static IntMat identity(unsigned size);

  std::int64_t at(unsigned i, unsigned j) const { return a[i * n + j]; }
  std::int64_t& at(unsigned i, unsigned j) { return a[i * n + j]; }

  // overflow-checked product (this * rhs)
  IntMat mul(const IntMat& rhs) const;

  bool operator==(const IntMat& rhs) const = default;
  bool operator<(const IntMat& rhs) const;
};

// exact determinant
Integer det(const IntMat& m);

struct LatticeDesc {
  unsigned rank = 0;
  std::vector<IntMat> generators;
};

inline constexpr std::size_t kDefaultOrderBound = 10000;

// det +-1 generators of matching size, at least one of them, and a finite
// generated group (closure within the order bound)
void validate(const LatticeDesc& l, std::size_t order_bound = kDefaultOrderBound);

// every element of the generated group, identity first (breadth-first);
// computation_error if the closure exceeds the order bound
std::vector<IntMat> group_closure(const std::vector<IntMat>& generators,
                                  std::size_t order_bound = kDefaultOrderBound);

unsigned fixed_dim_mod_p(const LatticeDesc& l, unsigned p);
unsigned rational_fixed_rank(const LatticeDesc& l);
unsigned h1_p_torsion_dim(const LatticeDesc& l, unsigned p);

using Permutation = std::vector<unsigned>;

// rank-k module with the basis permuted: M(i, j) = [sigma(j) == i]
LatticeDesc natural_perm_lattice(const std::vector<Permutation>& perms);
// rank k-1 sum-zero module in the basis e_i - e_0
LatticeDesc augmentation_lattice(const std::vector<Permutation>& perms);

struct MwHypothesis {
  bool satisfied = false;
  unsigned dim = 0;  // dim of the mod-p fixed space when satisfied
};

// the multiplicity bound needs a nonzero mod-p fixed space
MwHypothesis mw_multiplicity_hypothesis_check(const LatticeDesc& l, unsigned p);

}  // namespace selbound::lattice
