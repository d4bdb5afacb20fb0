#pragma once
// Empirical verification over the enumerated family: exact counts and
// fractions from brute force, compared against the closed-form predictions.
// Everything is exact rational arithmetic; runs shard the A-range across
// threads and reduce in shard order, so reports are bit-identical for every
// shard count.

#include <cstdint>
#include <string>

#include "selbound/bounds.hpp"
#include "selbound/curves.hpp"
#include "selbound/localdata.hpp"

namespace selbound::stats {

using arith::Integer;
using arith::Rational;

struct ExperimentReport {
  std::string name;
  Integer x = 0;
  unsigned shards = 1;
  Rational observed;   // exact count or count ratio
  Rational predicted;  // closed form, exact rational (midpoint of an
                       // enclosure where the prediction is irrational)
  Rational abs_error;  // |observed - predicted|
};

// name, X, observed num/den, predicted num/den, error num/den
std::string to_tsv_line(const ExperimentReport& r);

// family size versus the asymptotic 4 X^(5/6) / zeta(10)
ExperimentReport count_curves(const Integer& x, unsigned shards = 1);

// fraction of curves whose reduction at ell is bad but not of type I_1,
// which on minimal pairs is exactly the condition ell^2 | 4A^3 + 27B^2,
// versus the density (2 ell^8 - ell^7 - 1) / (ell^10 - 1)
ExperimentReport bad_not_i1_fraction(std::uint64_t ell, const Integer& x,
                                     unsigned shards = 1);

// mean genus-theory bound over the family versus the upper end of the
// constant's enclosure (the theory promises the mean stays below the
// constant up to O(1/log X))
ExperimentReport avg_genus_bound_empirical(unsigned p,
                                           const numfield::ExtensionDesc& ext,
                                           const Integer& x,
                                           localdata::GenusMode mode,
                                           unsigned shards = 1,
                                           std::uint64_t cutoff = 1000000);

// fraction of curves with an integer root of x^3 + Ax + B (rational
// 2-torsion); the prediction is the limit value 0, so the error column
// tracks the raw fraction, which should decay as X grows
ExperimentReport two_torsion_fraction(const Integer& x, unsigned shards = 1);

}  // namespace selbound::stats
