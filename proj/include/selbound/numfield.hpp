#pragma once
// Number field descriptors and the place-counting data the bound formulas
// consume.  Four shapes are supported:
//
//   rational        Q
//   quadratic       Q(sqrt(d)), d squarefree, d not in {0, 1}
//   multiquadratic  Q(sqrt(d_1), ..., sqrt(d_r)), the d_i squarefree and
//                   multiplicatively independent modulo squares
//   monogenic       Q[x]/(f) for a monic irreducible f in Z[x]; the primes
//                   dividing the field discriminant must be listed
//                   explicitly, and splitting behaviour at those primes (or
//                   at index divisors) must be supplied via omega_override
//                   if it is needed, we never guess it
//
// omega_prime(F, ell) counts the places of F above ell, so a rational prime
// that splits into several primes of F is counted with that multiplicity.
// For multiquadratic fields everything is decided by Kronecker symbols on
// the group of square classes; for monogenic fields by factoring the
// minimal polynomial mod ell, which is only legitimate away from the
// ramified primes and index divisors (elsewhere we fail loudly).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "selbound/arith.hpp"

namespace selbound::numfield {

using arith::Integer;
using arith::Rational;

enum class FieldKind { rational, quadratic, multiquadratic, monogenic };

struct FieldDesc {
  FieldKind kind = FieldKind::rational;
  Integer d = 0;                    // quadratic only
  std::vector<Integer> generators;  // multiquadratic only
  std::vector<Integer> minpoly;     // monogenic only, constant term first
  std::vector<Integer> ramified;    // monogenic only: primes dividing disc
  std::map<std::uint64_t, unsigned> omega_override;  // monogenic only

  static FieldDesc rationals();
  static FieldDesc quadratic(Integer d);
  static FieldDesc multiquadratic(std::vector<Integer> gens);
  static FieldDesc monogenic(std::vector<Integer> minpoly,
                             std::vector<Integer> ramified,
                             std::map<std::uint64_t, unsigned> overrides = {});
};

// Throws input_error on malformed descriptors (non-squarefree d, dependent
// generators, non-monic minpoly, ...).  Irreducibility of a monogenic
// minimal polynomial is the caller's responsibility.
void validate(const FieldDesc& F);

unsigned degree(const FieldDesc& F);

// number of real embeddings (Sturm count for monogenic fields)
unsigned real_embeddings(const FieldDesc& F);

// product of two squarefree integers modulo squares, again squarefree
Integer square_class_product(const Integer& a, const Integer& b);

// The square classes cut out by the field: {1} for Q, {1, d} for a
// quadratic field, the full 2^r-element closure for a multiquadratic one.
// Sorted increasing.  Monogenic fields are rejected.
std::vector<Integer> qset(const FieldDesc& F);

// number of places of F above the rational prime ell
unsigned omega_prime(const FieldDesc& F, std::uint64_t ell);

// sum of omega_prime over the distinct primes dividing n (n != 0)
unsigned omega_support(const FieldDesc& F, const Integer& n);

// primes dividing the discriminant of F, increasing
std::vector<Integer> ramified_primes(const FieldDesc& F);

// residue degrees of the places above ell, increasing; requires ell
// unramified in F and honest splitting data (see omega_prime)
std::vector<unsigned> residue_degrees(const FieldDesc& F, std::uint64_t ell);

struct ExtensionDesc {
  FieldDesc base;                          // F
  FieldDesc top;                           // K
  unsigned degree_kf = 1;                  // [K:F]
  std::vector<Integer> ramified_primes_k;  // primes dividing Delta_K
};

// Derives ramified_primes_k from the top field and validates consistency:
// degree(top) = degree_kf * degree(base), base ramification contained in
// the top ramification, nontrivial fields ramify somewhere.
ExtensionDesc make_extension(FieldDesc base, FieldDesc top,
                             unsigned degree_kf);
void validate(const ExtensionDesc& E);

// The common residue degree of K over F above ell, for ell unramified in K.
// Errors when the residue degrees above ell are not all equal (the local
// degree is then ill-defined and callers must not silently pick one).
unsigned residue_degree_unramified(const ExtensionDesc& E, std::uint64_t ell);

// short signatures for output lines
std::string describe(const FieldDesc& F);
std::string describe(const ExtensionDesc& E);

}  // namespace selbound::numfield
