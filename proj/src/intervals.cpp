#include "selbound/intervals.hpp"

#include <utility>

#include "selbound/errors.hpp"

namespace selbound::bounds {

namespace {

Integer pow10z(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BoundInterval::BoundInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw input_error("interval endpoints out of order");
}

BoundInterval BoundInterval::exact(const Rational& v) { return {v, v}; }

Rational BoundInterval::width() const { return hi - lo; }

bool BoundInterval::contains(const Rational& v) const { return lo <= v && v <= hi; }

BoundInterval operator+(const BoundInterval& a, const BoundInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

BoundInterval operator+(const BoundInterval& a, const Rational& s) {
  return {a.lo + s, a.hi + s};
}

BoundInterval operator-(const BoundInterval& a, const BoundInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

BoundInterval operator*(const BoundInterval& a, const Rational& s) {
  if (s <= 0) throw input_error("interval scaling wants a positive scalar");
  return {a.lo * s, a.hi * s};
}

BoundInterval operator/(const BoundInterval& a, const Rational& s) {
  if (s <= 0) throw input_error("interval division wants a positive scalar");
  return {a.lo / s, a.hi / s};
}

BoundInterval mul_nonneg(const BoundInterval& a, const BoundInterval& b) {
  if (a.lo < 0 || b.lo < 0) throw input_error("interval product wants nonnegative operands");
  return {a.lo * b.lo, a.hi * b.hi};
}

BoundInterval pow_nonneg(const BoundInterval& a, unsigned k) {
  if (a.lo < 0) throw input_error("interval power wants a nonnegative base");
  if (k == 0) return BoundInterval::exact(1);
  auto qpow = [](const Rational& q, unsigned e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;  // canonical: powers of coprime numerator/denominator stay coprime
  };
  return {qpow(a.lo, k), qpow(a.hi, k)};
}

BoundInterval sqrt_enclosure(const Integer& n, unsigned digits) {
  if (n < 0) throw input_error("sqrt enclosure wants a nonnegative argument");
  const Integer den = pow10z(digits);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), Integer(n * den * den).get_mpz_t());
  // s = floor(sqrt(n * 10^(2 digits))), so s/10^d <= sqrt(n) < (s+1)/10^d
  return {make_rational(s, den), make_rational(s + 1, den)};
}

BoundInterval three_half_pow(unsigned k, unsigned digits) {
  if (k % 2 == 0) {
    Integer p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, k / 2);
    return BoundInterval::exact(Rational(p3));
  }
  Integer p3;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, k);
  return sqrt_enclosure(p3, digits);
}

namespace {

// Bracket arctan(1/k) between consecutive partial sums of its alternating
// series; consecutive partial sums of an alternating series with strictly
// decreasing terms always straddle the limit.
BoundInterval atan_inv_brackets(unsigned long k, unsigned digits) {
  const Rational eps = make_rational(1, pow10z(digits));
  const Integer ksq = Integer(k) * k;
  Integer kpow = k;  // k^(2i+1)
  Rational sum = 0, prev = 0;
  for (unsigned i = 0;; ++i) {
    const Rational term = make_rational(1, kpow * (2 * i + 1));
    prev = sum;
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
    if (term < eps && i > 0) break;
    kpow *= ksq;
  }
  return prev <= sum ? BoundInterval{prev, sum} : BoundInterval{sum, prev};
}

}  // namespace

BoundInterval pi_enclosure() {
  static const BoundInterval cached = [] {
    const unsigned digits = 55;
    const BoundInterval a5 = atan_inv_brackets(5, digits);
    const BoundInterval a239 = atan_inv_brackets(239, digits);
    return BoundInterval{16 * a5.lo - 4 * a239.hi, 16 * a5.hi - 4 * a239.lo};
  }();
  return cached;
}

BoundInterval zeta10_enclosure() {
  static const BoundInterval cached = pow_nonneg(pi_enclosure(), 10) / Rational(93555);
  return cached;
}

}  // namespace selbound::bounds
