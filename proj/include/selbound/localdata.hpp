#pragma once
// Local ingredients of the genus-theory bound.
//
// At a place of multiplicative reduction with v = val(delta), over an
// unramified local extension of degree n, the index of the norm subgroup on
// the component group is
//
//   split:     gcd(v, n)        (cyclic component group of order v)
//   nonsplit:  2 if v and n are both even, else 1
//
// (an odd-degree unramified extension keeps the twist nonsplit and norms
// hit everything; an even-degree one trivializes the twist but only the
// 2-torsion Z/2 of the Frobenius-fixed part survives, present iff v is
// even).
//
// Each place of the base field contributes to the curve-independent part of
// the bound at most
//
//   above p:            2 + [F_v : Q_p]
//   finite, not above p: 2
//   real:               1 if p = 2, else 0
//   complex:            0
//
// Summing over all places above the primes of S = {2, 3, p} and the
// ramification of K, and using sum_{v | q} [F_v : Q_q] = [F : Q], gives the
// closed base term 2 * sum_{q in S} omega_F(q) + [F:Q] + (p = 2) r1(F).
// Bad primes outside S are charged per place: nothing for I_1, a uniform 2
// in the coarse mode, and in the refined mode 2 for additive places or the
// F_p-dimension of the norm-index group for multiplicative ones.

#include <cstdint>
#include <vector>

#include "selbound/curves.hpp"
#include "selbound/numfield.hpp"

namespace selbound::localdata {

using arith::Integer;

struct NormIndexInfo {
  unsigned order = 1;  // index of the norm subgroup, a cyclic group order
  // dimension over F_p of its p-torsion: 1 when p divides the order
  unsigned mod_p_dim(std::uint64_t p) const;
};

NormIndexInfo norm_index_split_mult(unsigned v_delta, unsigned n);
NormIndexInfo norm_index_nonsplit_mult(unsigned v_delta, unsigned n);

enum class PlaceKind { above_p, finite_not_p, real, complex };

// local_degree is only read for above_p (and must then be >= 1)
unsigned local_cap(PlaceKind kind, unsigned local_degree, std::uint64_t p);

enum class GenusMode { uniform_two, refined };

struct GenusPlaceTerm {
  std::uint64_t ell = 0;
  unsigned places = 0;     // omega_F(ell)
  unsigned per_place = 0;  // charge at each of them
  curves::ReductionType type;
  unsigned contribution() const { return places * per_place; }
};

struct GenusBoundReport {
  unsigned base_term = 0;  // curve independent
  std::vector<GenusPlaceTerm> bad_terms;
  unsigned total() const;
};

GenusBoundReport genus_bound(const curves::CurveParams& c,
                             const numfield::ExtensionDesc& E,
                             std::uint64_t p, GenusMode mode,
                             const Integer& bad_prime_limit);
GenusBoundReport genus_bound(const curves::CurveParams& c,
                             const numfield::ExtensionDesc& E,
                             std::uint64_t p, GenusMode mode);

// the closed form above, exposed for reuse by the constant assembler
unsigned genus_base_term(const numfield::FieldDesc& F,
                         const std::vector<Integer>& s_primes, std::uint64_t p);

}  // namespace selbound::localdata
