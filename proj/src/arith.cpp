#include "selbound/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace selbound::arith {

unsigned valuation(const Integer& n, const Integer& ell) {
  if (n == 0) throw input_error("valuation of 0 is infinite");
  if (ell < 2) throw input_error("valuation base must be >= 2");
  Integer rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t()));
}

int kronecker(const Integer& a, const Integer& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& pp : factors) {
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), pp.p.get_mpz_t(), pp.e);
    v *= q;
  }
  return v;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

constexpr std::uint64_t kTrialBound = 100000;

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> v = primes_in(2, kTrialBound);
  return v;
}

// Brent's variant of Pollard rho.  The polynomial offset c is stepped
// deterministically, so repeated runs agree.  A global squaring budget keeps
// pathological inputs from hanging: inside the intended 2^128 domain the
// budget is generous, beyond it we fail loudly.
Integer rho_split(const Integer& n) {
  std::int64_t budget = 400000000;  // total modular squarings allowed
  for (unsigned c = 1; c <= 40; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      budget -= static_cast<std::int64_t>(r);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min<std::uint64_t>(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        budget -= static_cast<std::int64_t>(steps);
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // The whole batch collapsed; redo the last block one gcd at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n && g > 1) return g;
    // else: cycle found only the trivial divisor for this c, try the next
  }
  throw computation_error("factorization budget exceeded");
}

}  // namespace

Factorization factorize(const Integer& n) {
  if (n == 0) throw input_error("cannot factor 0");
  Factorization out;
  out.sign = (n < 0) ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, unsigned> acc;
  for (std::uint64_t p : small_primes()) {
    if (m == 1) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      Integer pz = static_cast<unsigned long>(p);
      acc[pz] += valuation(m, pz);
      mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
    }
    if (Integer(static_cast<unsigned long>(p)) *
            static_cast<unsigned long>(p) >
        m)
      break;  // remaining cofactor has no divisor <= p, hence is prime or 1
  }
  std::vector<Integer> pending;
  if (m > 1) pending.push_back(m);
  while (!pending.empty()) {
    Integer t = pending.back();
    pending.pop_back();
    if (is_prime(t)) {
      acc[t] += 1;
    } else {
      Integer d = rho_split(t);
      pending.push_back(d);
      pending.push_back(t / d);
    }
  }
  for (const auto& [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) throw input_error("squarefreeness of 0 is undefined");
  for (const auto& pp : factorize(n).factors)
    if (pp.e > 1) return false;
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || hi < lo) return out;
  if (lo < 2) lo = 2;
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(double(hi))) + 2;
  while (root * root > hi) --root;  // root = isqrt(hi), cheap fixup
  std::vector<bool> base(root + 1, true);
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    base_primes.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) base[j] = false;
  }
  const std::uint64_t block = 1u << 20;
  for (std::uint64_t start = lo; start <= hi;) {
    std::uint64_t end = std::min(hi, start + block - 1);
    std::vector<bool> seg(end - start + 1, true);
    for (std::uint64_t p : base_primes) {
      if (p * p > end) break;
      std::uint64_t first = std::max(p * p, ((start + p - 1) / p) * p);
      for (std::uint64_t j = first; j <= end; j += p) seg[j - start] = false;
    }
    for (std::uint64_t v = start; v <= end; ++v)
      if (seg[v - start] && v >= 2) out.push_back(v);
    if (end == hi) break;
    start = end + 1;
  }
  return out;
}

Integer iroot_floor(const Integer& n, unsigned k) {
  if (n < 0) throw input_error("integer root of a negative number");
  if (k == 0) throw input_error("0th root is undefined");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace selbound::arith
