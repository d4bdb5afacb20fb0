#pragma once
// Explicit average-rank machinery.
//
// The central quantity is the constant
//
//   C_p(K/F) = 2 omega_F(6 p Delta_K) + [F:Q] + delta_2(p) r_1(F)
//              + 2 * sum_{ell not dividing 6 p Delta_K}
//                    omega_F(ell) * (2 ell^8 - ell^7 - 1) / (ell^10 - 1),
//
// where omega_F counts places of F above a rational prime, r_1 the real
// embeddings, and delta_2(p) = 1 exactly when p = 2.  The term at ell is the
// density of short Weierstrass curves whose reduction at ell is bad but not
// nodal of type I_1, weighted by the local place count; the finite head plus
// a closed-form tail bound turn it into an exact two-sided enclosure:
//
//   * the constant part 2 sum_{q in S} omega_F(q) + [F:Q] + delta_2(p) r_1(F),
//     S = {2, 3, p} plus the primes ramifying in K, is the same closed form
//     as the genus-theory base term and is reused from there;
//   * primes ell <= cutoff, ell not in S, are accumulated exactly as
//     floor(term * 2^kScaleBits) in a single big integer, so the rounding
//     deficit of the head is below nterms / 2^kScaleBits;
//   * the tail over primes ell > L = cutoff fits under 2 [F:Q] / L with room
//     to spare: each term is below 4 omega_F(ell) / ell^2 <= 4 [F:Q] / ell^2
//     (the density is below 2 / ell^2), primes above L >= 100 fall in the two
//     residue classes coprime to 6, and summing 1/n^2 over each such class by
//     integral comparison gives
//       sum_{ell > L} 1/ell^2  <=  1/(3L) + 2/L^2,
//     so the tail is at most 4 [F:Q] (1/(3L) + 2/L^2), which for L >= 100
//     stays below 2 [F:Q] / L - [F:Q] / (2L); the spare [F:Q] / (2L) in turn
//     dominates the head deficit because the code insists at runtime that
//     nterms * 8 L^3 <= [F:Q] * 2^kScaleBits.
//
// Hence  lo = constant part + floor-accumulated head / 2^kScaleBits  and
//        hi = lo + 2 [F:Q] / cutoff  bracket C_p(K/F), and the width of the
// enclosure is exactly 2 [F:Q] / cutoff.
//
// On top of C_p sit the composers.  Writing s5 = 3^(5/2) and q(p) = (p+1)/p:
//
//   fixed-space average (K/Q, Galois, p-descent over Q):
//       C_p(K/Q) + s5 * q(p), and when gcd(p, [K:Q]) = 1 the descent is
//       exact so only the geometric term s5 * q(p) remains;
//   good-characteristic base average (p odd, F inside a multiquadratic
//   field with square classes qset(F)):
//       s5 * q(p) * sum_{D in qset(F)} |D|^5,
//     proven for p in {3, 5}, otherwise gated behind the conjectural flag;
//   base-field Selmer average for p = 2 over a (multi)quadratic F:
//       [F:Q] * ( C_2(F/Q) + 3^(7/2) / 2 );
//   extension step ([K:F] a power of p):
//       avg_K <= [K:F] * ( C_p(K/F) + avg_F );
//   rank: 2 avg rank <= Selmer average, reported as the same bound;
//   Mordell-Weil multiplicity: an average bound divided by the dimension of
//     the fixed space of the Galois action on the lattice mod p, which must
//     be positive for the hypothesis to hold;
//   descent failure: the average number of everywhere-locally-soluble
//     p-coverings that die in K is at most C_p(K/F) itself.

#include <cstdint>
#include <string>
#include <vector>

#include "selbound/intervals.hpp"
#include "selbound/numfield.hpp"

namespace selbound::bounds {

using numfield::ExtensionDesc;
using numfield::FieldDesc;

// scale of the fixed-point head accumulation in c_constant
inline constexpr unsigned kScaleBits = 256;

struct BoundRequest {
  unsigned p = 2;
  ExtensionDesc ext;
  std::uint64_t cutoff = 1000000;  // prime cutoff L for the head of the sum
  bool conjectural = false;        // unlock p outside the proven range
};

void validate(const BoundRequest& req);

// (2 ell^8 - ell^7 - 1) / (ell^10 - 1) as an exact rational; ell prime
Rational density_term(std::uint64_t ell);

// two-sided enclosure of C_p(K/F); width exactly 2 [F:Q] / cutoff
BoundInterval c_constant(const BoundRequest& req);

// a bound together with human-readable caveats (heuristic inputs, exactness
// notes); every composer returns one so callers can surface the caveats
struct NotedBound {
  BoundInterval value;
  std::vector<std::string> notes;
};

// average dim_{F_p} of the fixed space of Selmer groups under Gal(K/Q)
NotedBound fixed_space_avg_bound(const BoundRequest& req);

// good-characteristic average p-Selmer size bound over F (p odd)
NotedBound multiquadratic_goodchar_avg(unsigned p, const FieldDesc& F, bool conjectural);

// average p-Selmer bound over the base field F of the request
NotedBound base_field_selmer_avg(unsigned p, const FieldDesc& F, std::uint64_t cutoff,
                                 bool conjectural);

// one extension step: [K:F] * (C_p(K/F) + avg_F); [K:F] must be a p-power
NotedBound p_extension_selmer_avg_bound(const BoundRequest& req, const BoundInterval& avg_f);

// the full chain: base average, then the extension step
NotedBound selmer_avg_bound(const BoundRequest& req);

// 2 * average rank over K is at most the Selmer average
NotedBound rank_avg_bound(const BoundRequest& req);

// average multiplicity bound (C_p + avg_F) / dim_fixed; dim_fixed >= 1
NotedBound mw_multiplicity_avg_bound(const BoundRequest& req, unsigned dim_fixed);

// average count of locally soluble p-coverings that fail over K
NotedBound descent_failure_avg_bound(const BoundRequest& req);

}  // namespace selbound::bounds
