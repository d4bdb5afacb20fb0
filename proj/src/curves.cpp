#include "selbound/curves.hpp"

#include <algorithm>

namespace selbound::curves {
namespace {

// Largest height for which 4A^3 + 27B^2 is guaranteed to fit in int64:
// |4A^3| <= 4X and 27B^2 <= 27X, so 31X < 2^63 with margin.
const Integer kEnumCap = Integer("200000000000000000");

bool divisible(const Integer& n, const Integer& q) {
  return mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()) != 0;
}

}  // namespace

Integer delta(const CurveParams& c) {
  return 4 * c.A * c.A * c.A + 27 * c.B * c.B;
}

Integer height(const CurveParams& c) {
  Integer a3 = abs(c.A);
  a3 = a3 * a3 * a3;
  Integer b2 = c.B * c.B;
  return std::max(a3, b2);
}

bool is_member(const CurveParams& c) {
  if (delta(c) == 0) return false;
  // a prime with ell^4 | A and ell^6 | B divides gcd(A, B); with A = 0 it
  // divides B, with B = 0 it divides A (0 is divisible by everything)
  Integer probe;
  if (c.A == 0)
    probe = c.B;
  else if (c.B == 0)
    probe = c.A;
  else
    probe = gcd(c.A, c.B);
  for (const auto& pp : arith::factorize(probe).factors) {
    Integer p4 = pp.p * pp.p * pp.p * pp.p;
    if (!divisible(c.A, p4)) continue;
    if (divisible(c.B, p4 * pp.p * pp.p)) return false;
  }
  return true;
}

EnumBounds enum_bounds(const Integer& X) {
  if (X < 0) throw input_error("height bound must be nonnegative");
  if (X > kEnumCap)
    throw input_error("height bound exceeds the enumeration range 2*10^17");
  EnumBounds b;
  b.amax = arith::iroot_floor(X, 3).get_si();
  b.bmax = arith::iroot_floor(X, 2).get_si();
  return b;
}

std::vector<PowerPair> exclusion_table(std::int64_t amax, std::int64_t bmax) {
  std::vector<PowerPair> table;
  for (std::int64_t ell = 2;; ++ell) {
    if (!arith::is_prime(Integer(static_cast<long>(ell)))) continue;
    std::int64_t p4 = ell * ell * ell * ell;
    std::int64_t p6 = p4 * ell * ell;
    if (p4 > amax && p6 > bmax) break;
    table.push_back({p4, p6});
  }
  return table;
}

bool excluded_by_table(const std::vector<PowerPair>& table, std::int64_t a,
                       std::int64_t b) {
  for (const auto& pp : table)
    if (a % pp.p4 == 0 && b % pp.p6 == 0) return true;
  return false;
}

void enumerate_shard(const Integer& X, unsigned shard, unsigned nshards,
                     const std::function<void(const CurveParams&)>& fn) {
  if (nshards == 0 || shard >= nshards)
    throw input_error("shard index out of range");
  const EnumBounds bounds = enum_bounds(X);
  const auto table = exclusion_table(bounds.amax, bounds.bmax);
  CurveParams c;
  for (std::int64_t a = -bounds.amax; a <= bounds.amax; ++a) {
    if (static_cast<std::uint64_t>(a + bounds.amax) % nshards != shard)
      continue;
    const std::int64_t a3x4 = 4 * a * a * a;
    for (std::int64_t b = -bounds.bmax; b <= bounds.bmax; ++b) {
      if (a3x4 + 27 * b * b == 0) continue;
      if (excluded_by_table(table, a, b)) continue;
      c.A = static_cast<long>(a);
      c.B = static_cast<long>(b);
      fn(c);
    }
  }
}

std::uint64_t count_shard(const Integer& X, unsigned shard, unsigned nshards) {
  std::uint64_t n = 0;
  enumerate_shard(X, shard, nshards, [&](const CurveParams&) { ++n; });
  return n;
}

ReductionType reduction_type(const CurveParams& c, std::uint64_t ell) {
  if (ell < 5 || !arith::is_prime(Integer(static_cast<unsigned long>(ell))))
    throw input_error("reduction classification wants a prime ell >= 5");
  Integer d = delta(c);
  if (d == 0) throw input_error("degenerate pair: 4A^3 + 27B^2 = 0");
  const Integer ellz = static_cast<unsigned long>(ell);
  ReductionType rt;
  rt.v_delta = arith::valuation(d, ellz);
  if (rt.v_delta == 0) {
    rt.kind = ReductionKind::good;
    return rt;
  }
  if (divisible(c.A, ellz) && divisible(c.B, ellz)) {
    rt.kind = ReductionKind::additive;
    return rt;
  }
  rt.kind = ReductionKind::multiplicative;
  rt.split = arith::kronecker(6 * c.B, ellz) == 1;
  return rt;
}

CurveParams quadratic_twist(const CurveParams& c, const Integer& D) {
  if (D == 0 || !arith::is_squarefree(D))
    throw input_error("twist wants a squarefree D != 0");
  if (delta(c) == 0) throw input_error("degenerate pair: 4A^3 + 27B^2 = 0");
  CurveParams t;
  t.A = c.A * D * D;
  t.B = c.B * D * D * D;
  // renormalize: only primes dividing D can violate minimality, and for a
  // member input a single division per prime suffices (v_ell(A) <= 3 or
  // v_ell(B) <= 5 beforehand)
  for (const auto& pp : arith::factorize(D).factors) {
    Integer p4 = pp.p * pp.p * pp.p * pp.p;
    Integer p6 = p4 * pp.p * pp.p;
    while (divisible(t.A, p4) && divisible(t.B, p6)) {
      t.A /= p4;
      t.B /= p6;
      if (t.A == 0 && t.B == 0) break;
    }
  }
  return t;
}

}  // namespace selbound::curves
