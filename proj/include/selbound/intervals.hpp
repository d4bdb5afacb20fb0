#pragma once
// Exact interval arithmetic over the rationals.  Every enclosure produced
// here has exact rational endpoints that provably bracket the target value;
// widths add under addition and scale under positive scalar multiplication,
// so downstream bounds can advertise exactly how much slack they carry.
//
// Irrational ingredients:
//   sqrt(n)   via the integer square root of n * 10^(2 digits)
//   pi        via Machin's formula 16 arctan(1/5) - 4 arctan(1/239), with
//             the alternating partial sums bracketing each arctangent
//   zeta(10)  = pi^10 / 93555

#include "selbound/arith.hpp"

namespace selbound::bounds {

using arith::Integer;
using arith::Rational;

Rational make_rational(const Integer& num, const Integer& den);

struct BoundInterval {
  Rational lo = 0, hi = 0;

  BoundInterval() = default;
  BoundInterval(Rational l, Rational h);
  static BoundInterval exact(const Rational& v);

  Rational width() const;
  bool contains(const Rational& v) const;
};

BoundInterval operator+(const BoundInterval& a, const BoundInterval& b);
BoundInterval operator+(const BoundInterval& a, const Rational& s);
BoundInterval operator-(const BoundInterval& a, const BoundInterval& b);
// positive scalars only: intervals here never need sign flips
BoundInterval operator*(const BoundInterval& a, const Rational& s);
BoundInterval operator/(const BoundInterval& a, const Rational& s);
// product of intervals with nonnegative lower ends
BoundInterval mul_nonneg(const BoundInterval& a, const BoundInterval& b);
// a^k for a.lo >= 0
BoundInterval pow_nonneg(const BoundInterval& a, unsigned k);

// sqrt(n) for n >= 0 with width 10^-digits
BoundInterval sqrt_enclosure(const Integer& n, unsigned digits);
// 3^(k/2): exact for even k, a sqrt enclosure for odd k
BoundInterval three_half_pow(unsigned k, unsigned digits = 40);
BoundInterval pi_enclosure();
BoundInterval zeta10_enclosure();

}  // namespace selbound::bounds
