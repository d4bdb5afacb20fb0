// Factorization over F_ell.  Pipeline: make monic, split off repeated
// factors (char-p squarefree decomposition, taking p-th roots where the
// derivative vanishes), split by factor degree (iterated Frobenius
// gcd(x^(ell^d) - x, f)), then split blocks of equal-degree factors with
// gcd(r^((ell^d-1)/2) - 1, block) for odd ell and the F_2 trace map for
// ell = 2.  The trial elements r come from splitmix64 with a seed derived
// from ell alone, so the factor list is reproducible bit for bit.

#include "selbound/polymod.hpp"

#include <algorithm>
#include <utility>

namespace selbound::arith {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 kModulusCap = 1ULL << 62;

u64 addm(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // no overflow: a, b < m <= 2^62
  return s >= m ? s - m : s;
}
u64 subm(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
u64 mulm(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 invm(u64 a, u64 m) {
  i128 t = 0, newt = 1;
  u64 r = m, newr = a % m;
  while (newr != 0) {
    u64 q = r / newr;
    i128 tt = t - static_cast<i128>(q) * newt;
    t = newt;
    newt = tt;
    u64 rr = r - q * newr;
    r = newr;
    newr = rr;
  }
  if (r != 1) throw computation_error("non-invertible leading coefficient");
  i128 v = t % static_cast<i128>(m);
  if (v < 0) v += m;
  return static_cast<u64>(v);
}

void trim(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int deg(const PolyFp& f) { return static_cast<int>(f.size()) - 1; }

PolyFp pmul(const PolyFp& a, const PolyFp& b, u64 m) {
  if (a.empty() || b.empty()) return {};
  PolyFp c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = addm(c[i + j], mulm(a[i], b[j], m), m);
  }
  trim(c);
  return c;
}

PolyFp psub(PolyFp a, const PolyFp& b, u64 m) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], m);
  trim(a);
  return a;
}

// remainder of a modulo monic b
PolyFp pmod(PolyFp a, const PolyFp& b, u64 m) {
  while (deg(a) >= deg(b)) {
    u64 c = a.back();
    int shift = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i)
      a[i + shift] = subm(a[i + shift], mulm(c, b[i], m), m);
    trim(a);
  }
  return a;
}

// quotient of a by monic b (exact when b | a)
PolyFp pdiv(PolyFp a, const PolyFp& b, u64 m) {
  if (deg(a) < deg(b)) return {};
  PolyFp q(deg(a) - deg(b) + 1, 0);
  while (deg(a) >= deg(b)) {
    u64 c = a.back();
    int shift = deg(a) - deg(b);
    q[shift] = c;
    for (int i = 0; i <= deg(b); ++i)
      a[i + shift] = subm(a[i + shift], mulm(c, b[i], m), m);
    trim(a);
  }
  trim(q);
  return q;
}

PolyFp monic(PolyFp f, u64 m) {
  if (f.empty() || f.back() == 1) return f;
  u64 iv = invm(f.back(), m);
  for (auto& c : f) c = mulm(c, iv, m);
  return f;
}

PolyFp pgcd(PolyFp a, PolyFp b, u64 m) {
  while (!b.empty()) {
    b = monic(std::move(b), m);
    PolyFp r = pmod(std::move(a), b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), m);
}

PolyFp pderiv(const PolyFp& f, u64 m) {
  PolyFp d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], i % m, m));
  trim(d);
  return d;
}

PolyFp ppow(PolyFp base, Integer e, const PolyFp& f, u64 m) {
  PolyFp r{1};
  base = pmod(std::move(base), f, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, base, m), f, m);
    e = e >> 1;
    if (e > 0) base = pmod(pmul(base, base, m), f, m);
  }
  return r;
}

// p-th root of f when f = g(x^p): over the prime field a^p = a, so the root
// just takes every p-th coefficient.
PolyFp proot(const PolyFp& f, u64 p) {
  PolyFp h;
  for (size_t i = 0; i * p < f.size(); ++i) h.push_back(f[i * p]);
  trim(h);
  return h;
}

void squarefree_split(PolyFp f, u64 p, u64 mult,
                      std::vector<std::pair<PolyFp, unsigned>>& out) {
  // f monic of degree >= 1
  PolyFp d = pderiv(f, p);
  if (d.empty()) {
    squarefree_split(proot(f, p), p, mult * p, out);
    return;
  }
  PolyFp c = pgcd(f, d, p);
  PolyFp w = pdiv(f, c, p);
  u64 i = 1;
  while (deg(w) > 0) {
    PolyFp y = pgcd(w, c, p);
    PolyFp z = pdiv(w, y, p);
    if (deg(z) > 0) out.push_back({z, static_cast<unsigned>(mult * i)});
    w = std::move(y);
    c = pdiv(std::move(c), w, p);
    ++i;
  }
  // what is left of c collects the factors with multiplicity divisible by
  // p; it is a p-th power, so the recursion lands in the derivative-zero
  // branch and picks up the factor p there
  if (deg(c) > 0) squarefree_split(c, p, mult, out);
}

Integer ipow(u64 b, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

std::vector<std::pair<PolyFp, unsigned>> ddf(PolyFp g, u64 p) {
  std::vector<std::pair<PolyFp, unsigned>> out;
  const PolyFp x{0, 1};
  PolyFp h = pmod(x, g, p);
  unsigned d = 0;
  while (deg(g) >= 1 && 2 * static_cast<int>(d + 1) <= deg(g)) {
    ++d;
    h = ppow(std::move(h), Integer(static_cast<unsigned long>(p)), g, p);
    PolyFp gd = pgcd(psub(h, x, p), g, p);
    if (deg(gd) > 0) {
      out.push_back({gd, d});
      g = pdiv(std::move(g), gd, p);
      h = pmod(std::move(h), g, p);
    }
  }
  if (deg(g) > 0) out.push_back({g, static_cast<unsigned>(deg(g))});
  return out;
}

struct SplitRng {
  u64 s;
  u64 next() {
    s += 0x9e3779b97f4a7c15ULL;
    u64 z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

void edf(const PolyFp& block, unsigned d, u64 p, SplitRng& rng,
         std::vector<PolyFp>& out) {
  const int D = deg(block);
  if (D == static_cast<int>(d)) {
    out.push_back(block);
    return;
  }
  for (unsigned attempt = 0; attempt < 10000; ++attempt) {
    PolyFp r(static_cast<size_t>(D), 0);
    for (auto& c : r) c = rng.next() % p;
    trim(r);
    if (r.empty()) continue;
    PolyFp g;
    if (p == 2) {
      // trace map r + r^2 + ... + r^(2^(d-1)) lands in F_2 on each factor
      PolyFp t = r, acc = r;
      for (unsigned i = 1; i < d; ++i) {
        t = pmod(pmul(t, t, p), block, p);
        acc = psub(std::move(acc), t, p);
      }
      g = pgcd(std::move(acc), block, p);
    } else {
      const Integer e = (ipow(p, d) - 1) / 2;
      PolyFp s = ppow(std::move(r), e, block, p);
      if (s.empty())
        s = {p - 1};
      else {
        s[0] = subm(s[0], 1, p);
        trim(s);
      }
      g = pgcd(std::move(s), block, p);
    }
    if (deg(g) > 0 && deg(g) < D) {
      edf(g, d, p, rng, out);
      edf(pdiv(block, g, p), d, p, rng, out);
      return;
    }
  }
  throw computation_error("equal-degree split did not converge");
}

}  // namespace

PolyFp poly_reduce_mod(const std::vector<Integer>& f, std::uint64_t ell) {
  if (ell < 2 || ell > kModulusCap) throw input_error("modulus out of range");
  PolyFp g;
  g.reserve(f.size());
  for (const auto& c : f)
    g.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(ell)));
  trim(g);
  return g;
}

std::vector<PolyFactor> poly_factor_mod(const std::vector<Integer>& f,
                                        std::uint64_t ell,
                                        std::uint64_t* lead_unit) {
  if (ell > kModulusCap || !is_prime(Integer(static_cast<unsigned long>(ell))))
    throw input_error("factorization modulus must be a prime < 2^62");
  PolyFp g = poly_reduce_mod(f, ell);
  if (g.empty()) throw input_error("polynomial vanishes mod ell");
  if (lead_unit) *lead_unit = g.back();
  g = monic(std::move(g), ell);
  std::vector<PolyFactor> out;
  if (deg(g) == 0) return out;
  std::vector<std::pair<PolyFp, unsigned>> parts;
  squarefree_split(std::move(g), ell, 1, parts);
  SplitRng rng{0xc0ffee1234abcdefULL ^ (ell * 0x9e3779b97f4a7c15ULL)};
  for (auto& [part, mult] : parts)
    for (auto& [block, d] : ddf(std::move(part), ell)) {
      std::vector<PolyFp> irr;
      edf(block, d, ell, rng, irr);
      for (auto& q : irr) out.push_back({std::move(q), mult});
    }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.size() != b.factor.size())
      return a.factor.size() < b.factor.size();
    return a.factor < b.factor;
  });
  return out;
}

bool is_separable_mod(const std::vector<Integer>& f, std::uint64_t ell) {
  PolyFp g = poly_reduce_mod(f, ell);
  if (g.empty()) throw input_error("polynomial vanishes mod ell");
  if (deg(g) == 0) return true;
  g = monic(std::move(g), ell);
  return deg(pgcd(g, pderiv(g, ell), ell)) == 0;
}

std::vector<unsigned> factor_degrees_mod(const std::vector<Integer>& f,
                                         std::uint64_t ell) {
  std::vector<unsigned> degs;
  for (const auto& pf : poly_factor_mod(f, ell))
    degs.push_back(static_cast<unsigned>(pf.factor.size() - 1));
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace selbound::arith
