#pragma once
// The family of integral curves y^2 = x^3 + Ax + B, excluding pairs where
// some prime ell has ell^4 | A and ell^6 | B (each curve appears once, in
// minimal form) and degenerate pairs with 4A^3 + 27B^2 = 0.  The height is
// H(A, B) = max(|A|^3, B^2), so |A| <= X^(1/3) and |B| <= X^(1/2) at
// height X.
//
// Reduction at a prime ell >= 5 is read off the minimal pair directly:
// additive when ell divides both A and B, multiplicative of type I_v with
// v = val_ell(4A^3 + 27B^2) otherwise bad, and split exactly when the
// tangent directions at the node are rational, i.e. (6B | ell) = 1 (at the
// node x0: A = -3 x0^2, B = 2 x0^3, and the tangent discriminant 3 x0
// agrees with 6B = 12 x0^3 modulo squares).

#include <cstdint>
#include <functional>
#include <vector>

#include "selbound/arith.hpp"

namespace selbound::curves {

using arith::Integer;

struct CurveParams {
  Integer A, B;
};

Integer delta(const CurveParams& c);   // 4A^3 + 27B^2
Integer height(const CurveParams& c);  // max(|A|^3, B^2)
bool is_member(const CurveParams& c);

// Enumeration works on int64 coordinates; heights up to 2*10^17 keep
// 4A^3 + 27B^2 inside the representable range.
struct EnumBounds {
  std::int64_t amax = 0, bmax = 0;
};
EnumBounds enum_bounds(const Integer& X);

// Primes ell with ell^4 <= amax or ell^6 <= bmax; a pair is excluded from
// the family iff some entry divides it as (ell^4 | A, ell^6 | B).
struct PowerPair {
  std::int64_t p4 = 0, p6 = 0;
};
std::vector<PowerPair> exclusion_table(std::int64_t amax, std::int64_t bmax);
bool excluded_by_table(const std::vector<PowerPair>& table, std::int64_t a,
                       std::int64_t b);

// Visit every family member of height <= X whose A-stripe lands on the
// given shard (stripes are A + amax mod nshards), in increasing (A, B)
// order.  Shards partition the family, and the union over shards is
// independent of nshards.
void enumerate_shard(const Integer& X, unsigned shard, unsigned nshards,
                     const std::function<void(const CurveParams&)>& fn);

std::uint64_t count_shard(const Integer& X, unsigned shard, unsigned nshards);

enum class ReductionKind { good, multiplicative, additive };

struct ReductionType {
  ReductionKind kind = ReductionKind::good;
  unsigned v_delta = 0;  // val_ell(4A^3 + 27B^2); the n of I_n when multiplicative
  bool split = false;    // multiplicative only
};

ReductionType reduction_type(const CurveParams& c, std::uint64_t ell);

// Twist by a squarefree D != 0: (A, B) -> (A D^2, B D^3), renormalized into
// the family.  An involution: twisting twice by the same D gives back c.
CurveParams quadratic_twist(const CurveParams& c, const Integer& D);

}  // namespace selbound::curves
