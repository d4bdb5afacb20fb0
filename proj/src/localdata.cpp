#include "selbound/localdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace selbound::localdata {

unsigned NormIndexInfo::mod_p_dim(std::uint64_t p) const {
  if (p < 2 || !arith::is_prime(Integer(static_cast<unsigned long>(p))))
    throw input_error("mod-p dimension wants a prime p");
  return order % p == 0 ? 1 : 0;
}

NormIndexInfo norm_index_split_mult(unsigned v_delta, unsigned n) {
  if (v_delta == 0 || n == 0)
    throw input_error("norm index wants v >= 1 and n >= 1");
  return {std::gcd(v_delta, n)};
}

NormIndexInfo norm_index_nonsplit_mult(unsigned v_delta, unsigned n) {
  if (v_delta == 0 || n == 0)
    throw input_error("norm index wants v >= 1 and n >= 1");
  return {(v_delta % 2 == 0 && n % 2 == 0) ? 2u : 1u};
}

unsigned local_cap(PlaceKind kind, unsigned local_degree, std::uint64_t p) {
  if (!arith::is_prime(Integer(static_cast<unsigned long>(p))))
    throw input_error("local cap wants a prime p");
  switch (kind) {
    case PlaceKind::above_p:
      if (local_degree == 0)
        throw input_error("a place above p has local degree >= 1");
      return 2 + local_degree;
    case PlaceKind::finite_not_p:
      return 2;
    case PlaceKind::real:
      return p == 2 ? 1 : 0;
    case PlaceKind::complex:
      return 0;
  }
  throw input_error("unknown place kind");
}

unsigned GenusBoundReport::total() const {
  unsigned t = base_term;
  for (const auto& term : bad_terms) t += term.contribution();
  return t;
}

unsigned genus_base_term(const numfield::FieldDesc& F,
                         const std::vector<Integer>& s_primes,
                         std::uint64_t p) {
  unsigned t = numfield::degree(F);
  for (const auto& q : s_primes) {
    if (!q.fits_ulong_p())
      throw input_error("prime in S exceeds the supported range");
    t += 2 * numfield::omega_prime(F, q.get_ui());
  }
  if (p == 2) t += numfield::real_embeddings(F);
  return t;
}

GenusBoundReport genus_bound(const curves::CurveParams& c,
                             const numfield::ExtensionDesc& E,
                             std::uint64_t p, GenusMode mode,
                             const Integer& bad_prime_limit) {
  if (p < 2 || !arith::is_prime(Integer(static_cast<unsigned long>(p))))
    throw input_error("genus bound wants a prime p");
  numfield::validate(E);
  const Integer d = curves::delta(c);
  if (d == 0) throw input_error("degenerate pair: 4A^3 + 27B^2 = 0");

  std::set<Integer> s_primes{Integer(2), Integer(3),
                             Integer(static_cast<unsigned long>(p))};
  s_primes.insert(E.ramified_primes_k.begin(), E.ramified_primes_k.end());

  GenusBoundReport report;
  report.base_term = genus_base_term(
      E.base, {s_primes.begin(), s_primes.end()}, p);

  for (const auto& pp : arith::factorize(d).factors) {
    if (s_primes.count(pp.p)) continue;
    if (pp.p > bad_prime_limit)
      throw computation_error("bad prime " + pp.p.get_str() +
                              " exceeds the factorization limit");
    if (!pp.p.fits_ulong_p())
      throw input_error("bad prime exceeds the supported range");
    const std::uint64_t ell = pp.p.get_ui();
    GenusPlaceTerm term;
    term.ell = ell;
    term.type = curves::reduction_type(c, ell);
    term.places = numfield::omega_prime(E.base, ell);
    if (term.type.kind == curves::ReductionKind::multiplicative &&
        term.type.v_delta == 1) {
      term.per_place = 0;  // I_1 costs nothing in either mode
    } else if (mode == GenusMode::uniform_two) {
      term.per_place = 2;
    } else if (term.type.kind == curves::ReductionKind::additive) {
      term.per_place = 2;
    } else {
      // multiplicative, v >= 2, refined by the norm-index law over the
      // uniform unramified local degree n of K/F
      const unsigned n = numfield::residue_degree_unramified(E, ell);
      const unsigned ff = numfield::residue_degrees(E.base, ell).front();
      // a nonsplit place becomes split once the residue field contains the
      // quadratic extension, i.e. when f(F at ell) is even
      const bool split_here = term.type.split || ff % 2 == 0;
      const NormIndexInfo info =
          split_here ? norm_index_split_mult(term.type.v_delta, n)
                     : norm_index_nonsplit_mult(term.type.v_delta, n);
      term.per_place = info.mod_p_dim(p);
    }
    report.bad_terms.push_back(term);
  }
  return report;
}

GenusBoundReport genus_bound(const curves::CurveParams& c,
                             const numfield::ExtensionDesc& E,
                             std::uint64_t p, GenusMode mode) {
  return genus_bound(c, E, p, mode, Integer(1) << 62);
}

}  // namespace selbound::localdata
