#pragma once
// Exact integer and rational arithmetic: valuations, Kronecker symbols,
// deterministic factorization, a segmented prime sieve, integer roots.
//
// Integer and Rational are GMP-backed.  Rationals are canonical (lowest
// terms, positive denominator) whenever they leave this library.  All
// routines are deterministic; factorization either succeeds with certified
// prime factors or throws computation_error, it never silently returns a
// composite as "prime".

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "selbound/errors.hpp"

namespace selbound::arith {

using Integer = mpz_class;
using Rational = mpq_class;

// Largest e >= 0 with ell^e | n.  Requires n != 0 (the valuation of 0 is
// infinite) and ell >= 2.
unsigned valuation(const Integer& n, const Integer& ell);

// Kronecker symbol (a | n) with the standard conventions, in particular
// (a | 2) = 0 for even a and +1 / -1 for a = +-1 / +-3 mod 8.
int kronecker(const Integer& a, const Integer& n);

struct PrimePower {
  Integer p;
  unsigned e = 0;
};

struct Factorization {
  int sign = 1;                     // -1 or +1
  std::vector<PrimePower> factors;  // primes strictly increasing
  Integer value() const;            // sign * prod p^e
};

// Deterministic factorization of n != 0.  Trial division below 10^5, then
// Brent's cycle-finding rho with a fixed parameter schedule; every reported
// prime passes 40 Miller-Rabin rounds.  Intended domain |n| <= 2^128; a rho
// budget overrun throws computation_error rather than looping forever.
Factorization factorize(const Integer& n);

bool is_prime(const Integer& n);

// Whether |n| is squarefree; n must be nonzero.
bool is_squarefree(const Integer& n);

// All primes in [lo, hi], increasing (segmented Eratosthenes).
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// floor(n^(1/k)) for n >= 0, k >= 1.
Integer iroot_floor(const Integer& n, unsigned k);

}  // namespace selbound::arith
