#include "selbound/bounds.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "selbound/errors.hpp"
#include "selbound/localdata.hpp"

namespace selbound::bounds {

namespace {

using numfield::FieldKind;

constexpr std::uint64_t kMinCutoff = 100;
constexpr std::uint64_t kMaxCutoff = 100000000;

void require_prime(unsigned p) {
  if (!arith::is_prime(Integer(p))) throw input_error("p must be prime");
}

// {2, 3, p} together with the primes ramifying in K, sorted and distinct
std::vector<Integer> s_prime_list(const BoundRequest& req) {
  std::set<Integer> s{Integer(2), Integer(3), Integer(req.p)};
  for (const auto& q : req.ext.ramified_primes_k) s.insert(q);
  return {s.begin(), s.end()};
}

bool proven_p(unsigned p) { return p == 2 || p == 3 || p == 5; }

void push_note(NotedBound& b, const std::string& note) {
  if (std::find(b.notes.begin(), b.notes.end(), note) == b.notes.end())
    b.notes.push_back(note);
}

void merge_notes(NotedBound& dst, const NotedBound& src) {
  for (const auto& n : src.notes) push_note(dst, n);
}

void note_conjectural(NotedBound& b, unsigned p) {
  if (!proven_p(p))
    push_note(b, "conjectural: p = " + std::to_string(p) +
                     " lies outside the proven set {2, 3, 5}");
}

}  // namespace

void validate(const BoundRequest& req) {
  require_prime(req.p);
  if (!proven_p(req.p) && !req.conjectural)
    throw input_error("p outside {2, 3, 5} needs the conjectural flag");
  numfield::validate(req.ext);
  if (req.cutoff < kMinCutoff || req.cutoff > kMaxCutoff)
    throw input_error("cutoff must lie in [100, 10^8]");
}

Rational density_term(std::uint64_t ell) {
  if (!arith::is_prime(Integer(static_cast<unsigned long>(ell))))
    throw input_error("density term wants a prime");
  Integer l(static_cast<unsigned long>(ell));
  Integer l7;
  mpz_pow_ui(l7.get_mpz_t(), l.get_mpz_t(), 7);
  return make_rational(2 * l7 * l - l7 - 1, l7 * l * l * l - 1);
}

BoundInterval c_constant(const BoundRequest& req) {
  validate(req);
  const FieldDesc& f = req.ext.base;
  const unsigned deg = numfield::degree(f);
  const auto s_list = s_prime_list(req);
  const unsigned const_part = localdata::genus_base_term(f, s_list, req.p);

  std::set<std::uint64_t> skip;
  for (const auto& q : s_list)
    if (q.fits_ulong_p()) skip.insert(q.get_ui());

  const Integer scale = Integer(1) << kScaleBits;
  const std::uint64_t cutoff = req.cutoff;
  Integer acc = 0;
  std::uint64_t nterms = 0;
  constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
  for (std::uint64_t blk = 2; blk <= cutoff; blk += kBlock) {
    const std::uint64_t blk_hi = std::min(cutoff, blk + (kBlock - 1));
    for (std::uint64_t ell : arith::primes_in(blk, blk_hi)) {
      if (skip.count(ell) != 0) continue;
      const unsigned w = f.kind == FieldKind::rational
                             ? 1u
                             : numfield::omega_prime(f, ell);
      const Integer l(static_cast<unsigned long>(ell));
      Integer l7;
      mpz_pow_ui(l7.get_mpz_t(), l.get_mpz_t(), 7);
      const Integer num = (2 * l7 * l - l7 - 1) * (2 * w);
      const Integer den = l7 * l * l * l - 1;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), Integer(num << kScaleBits).get_mpz_t(),
                 den.get_mpz_t());
      acc += q;
      ++nterms;
    }
  }

  // The floor accumulation undercounts by at most nterms / 2^kScaleBits;
  // the closed-form tail only absorbs a deficit up to [F:Q] / (8 cutoff^3)
  // (see the header), so insist on that explicitly.
  const Integer l3 = Integer(static_cast<unsigned long>(cutoff));
  if (Integer(nterms) * 8 * l3 * l3 * l3 > scale * deg)
    throw computation_error(
        "fixed-point accumulation too coarse for this cutoff");

  const Rational head = make_rational(acc, scale);
  const Rational lo = head + const_part;
  const Rational tail =
      make_rational(Integer(2u * deg), Integer(static_cast<unsigned long>(cutoff)));
  return {lo, lo + tail};
}

NotedBound fixed_space_avg_bound(const BoundRequest& req) {
  validate(req);
  if (req.ext.base.kind != FieldKind::rational)
    throw input_error(
        "the fixed-space average is stated for Galois fields over Q; "
        "the base of the extension must be the rationals");
  const unsigned deg_k = numfield::degree(req.ext.top);
  const BoundInterval geometric =
      three_half_pow(5) * make_rational(Integer(req.p) + 1, Integer(req.p));
  NotedBound out;
  if (deg_k % req.p != 0) {
    out.value = geometric;
    push_note(out, "p does not divide [K:Q]: the descent is exact and only "
                   "the geometric term 3^(5/2) (p+1)/p survives");
  } else {
    out.value = c_constant(req) + geometric;
  }
  note_conjectural(out, req.p);
  return out;
}

NotedBound multiquadratic_goodchar_avg(unsigned p, const FieldDesc& f,
                                       bool conjectural) {
  require_prime(p);
  if (p == 2)
    throw input_error("the good-characteristic average needs an odd p");
  numfield::validate(f);
  if (f.kind == FieldKind::monogenic)
    throw input_error(
        "the good-characteristic average needs a field cut out by square "
        "classes (Q, quadratic, or multiquadratic)");
  if (p != 3 && p != 5 && !conjectural)
    throw input_error(
        "the good-characteristic average is proven for p in {3, 5} only; "
        "pass the conjectural flag for other p");
  Integer sum = 0;
  for (const auto& d : numfield::qset(f)) {
    Integer a;
    mpz_abs(a.get_mpz_t(), d.get_mpz_t());
    Integer a5;
    mpz_pow_ui(a5.get_mpz_t(), a.get_mpz_t(), 5);
    sum += a5;
  }
  NotedBound out;
  out.value =
      three_half_pow(5) * make_rational((Integer(p) + 1) * sum, Integer(p));
  if (p != 3 && p != 5)
    push_note(out, "heuristic input: the good-characteristic average for "
                   "p outside {3, 5} is conjectural");
  return out;
}

NotedBound base_field_selmer_avg(unsigned p, const FieldDesc& f,
                                 std::uint64_t cutoff, bool conjectural) {
  require_prime(p);
  numfield::validate(f);
  if (p != 2) return multiquadratic_goodchar_avg(p, f, conjectural);
  if (f.kind == FieldKind::rational) {
    NotedBound out;
    out.value = three_half_pow(7) / Rational(2);
    return out;
  }
  if (f.kind == FieldKind::monogenic)
    throw input_error(
        "the p = 2 base average needs Q or a (multi)quadratic base field");
  const unsigned deg_f = numfield::degree(f);
  const ExtensionDesc ef =
      numfield::make_extension(FieldDesc::rationals(), f, deg_f);
  const BoundRequest rf{2, ef, cutoff, conjectural};
  NotedBound out;
  out.value =
      (c_constant(rf) + three_half_pow(7) / Rational(2)) * Rational(deg_f);
  push_note(out,
            "two-stage p = 2 base average: [F:Q] (C_2(F/Q) + 3^(7/2)/2)");
  return out;
}

NotedBound p_extension_selmer_avg_bound(const BoundRequest& req,
                                        const BoundInterval& avg_f) {
  validate(req);
  unsigned m = req.ext.degree_kf;
  while (m % req.p == 0) m /= req.p;
  if (m != 1)
    throw input_error("[K:F] must be a power of p for the extension step");
  NotedBound out;
  out.value = (c_constant(req) + avg_f) * Rational(req.ext.degree_kf);
  note_conjectural(out, req.p);
  return out;
}

NotedBound selmer_avg_bound(const BoundRequest& req) {
  validate(req);
  const NotedBound base =
      base_field_selmer_avg(req.p, req.ext.base, req.cutoff, req.conjectural);
  NotedBound out = p_extension_selmer_avg_bound(req, base.value);
  merge_notes(out, base);
  return out;
}

NotedBound rank_avg_bound(const BoundRequest& req) {
  NotedBound out = selmer_avg_bound(req);
  push_note(out, "bounds 2 x (average rank over K): ranks grow at most half "
                 "as fast as the Selmer average");
  return out;
}

NotedBound mw_multiplicity_avg_bound(const BoundRequest& req,
                                     unsigned dim_fixed) {
  validate(req);
  if (dim_fixed == 0)
    throw input_error(
        "the multiplicity hypothesis needs a nonzero fixed space mod p");
  const NotedBound base =
      base_field_selmer_avg(req.p, req.ext.base, req.cutoff, req.conjectural);
  NotedBound out;
  out.value = (c_constant(req) + base.value) / Rational(dim_fixed);
  merge_notes(out, base);
  note_conjectural(out, req.p);
  return out;
}

NotedBound descent_failure_avg_bound(const BoundRequest& req) {
  NotedBound out;
  out.value = c_constant(req);
  note_conjectural(out, req.p);
  return out;
}

}  // namespace selbound::bounds
