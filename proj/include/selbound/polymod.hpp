#pragma once
// Univariate polynomial arithmetic over a prime field F_ell and a complete
// deterministic factorization: squarefree split, distinct-degree split, then
// equal-degree split.  The equal-degree stage draws trial elements from a
// fixed-seed generator, so the output (and its order) never varies between
// runs.  Factors are monic and sorted by degree, then lexicographically by
// coefficient tuple (constant term first).
//
// Moduli up to 2^62 are supported; products are formed in 128-bit registers.

#include <cstdint>
#include <vector>

#include "selbound/arith.hpp"

namespace selbound::arith {

// Coefficient of x^i at index i, reduced mod ell, no trailing zeros.
// The zero polynomial is the empty vector.
using PolyFp = std::vector<std::uint64_t>;

struct PolyFactor {
  PolyFp factor;  // monic irreducible
  unsigned multiplicity = 0;
};

// Reduce an integer polynomial (constant term first) mod ell.
PolyFp poly_reduce_mod(const std::vector<Integer>& f, std::uint64_t ell);

// Complete factorization of f mod ell.  Requires ell prime and f nonzero
// mod ell.  The leading unit is reported through lead_unit when given.
std::vector<PolyFactor> poly_factor_mod(const std::vector<Integer>& f,
                                        std::uint64_t ell,
                                        std::uint64_t* lead_unit = nullptr);

// Whether f mod ell is separable, i.e. squarefree.  Degree-0 polynomials
// count as separable; the zero polynomial is rejected.
bool is_separable_mod(const std::vector<Integer>& f, std::uint64_t ell);

// Degree of every irreducible factor of f mod ell, one entry per distinct
// factor (multiplicities ignored), increasing.
std::vector<unsigned> factor_degrees_mod(const std::vector<Integer>& f,
                                         std::uint64_t ell);

}  // namespace selbound::arith
