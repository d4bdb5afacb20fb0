// Place counting.  For a quadratic field Q(sqrt(d)) the behaviour of an odd
// prime ell is read off (d | ell); for ell = 2 it is governed by d mod 8.
// For a multiquadratic field F with square classes Q the subgroup
// U = { D in Q : Q(sqrt(D)) unramified at ell } fixes the maximal
// subextension unramified at ell, of degree |U|; over it ell has residue
// degree f = 1 if every D in U has (D | ell) = 1 and f = 2 otherwise (for
// ell = 2 every member of U is 1 mod 4, where (D | 2) = 1 exactly when
// D = 1 mod 8, i.e. when 2 splits).  Ramification never splits places
// further, so omega = |U| / f and every place has local degree
// e * f = 2^r / omega.

#include "selbound/numfield.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "selbound/polymod.hpp"

namespace selbound::numfield {
namespace {

bool is_unit_or_zero(const Integer& d) { return d == 0 || d == 1; }

// whether ell ramifies in Q(sqrt(D)), D squarefree
bool quad_ramified(const Integer& D, std::uint64_t ell) {
  if (D == 1) return false;
  if (ell == 2) return mpz_fdiv_ui(D.get_mpz_t(), 4) != 1;
  return mpz_fdiv_ui(D.get_mpz_t(), static_cast<unsigned long>(ell)) == 0;
}

// square classes unramified at ell (a subgroup of qset)
std::vector<Integer> unramified_classes(const std::vector<Integer>& classes,
                                        std::uint64_t ell) {
  std::vector<Integer> u;
  for (const auto& D : classes)
    if (!quad_ramified(D, ell)) u.push_back(D);
  return u;
}

// residue degree of ell in the compositum of the Q(sqrt(D)), D in u, all
// unramified at ell: 1 iff every Frobenius component is trivial
unsigned split_degree(const std::vector<Integer>& u, std::uint64_t ell) {
  for (const auto& D : u)
    if (D != 1 &&
        arith::kronecker(D, Integer(static_cast<unsigned long>(ell))) != 1)
      return 2;
  return 1;
}

// Sturm count of the real roots of a squarefree integer polynomial
unsigned real_roots_sturm(const std::vector<Integer>& poly) {
  using QP = std::vector<Rational>;
  auto trim = [](QP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  QP p0;
  for (const auto& c : poly) p0.push_back(Rational(c));
  trim(p0);
  if (p0.size() <= 1) return 0;
  QP p1;
  for (size_t i = 1; i < p0.size(); ++i)
    p1.push_back(p0[i] * Rational(static_cast<unsigned long>(i)));
  trim(p1);
  auto neg_rem = [&](QP a, const QP& b) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational c = a.back() / b.back();
      size_t k = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
      trim(a);
    }
    for (auto& c : a) c = -c;
    return a;
  };
  std::vector<QP> chain{p0, p1};
  while (!chain.back().empty() && chain.back().size() > 1)
    chain.push_back(neg_rem(chain[chain.size() - 2], chain.back()));
  auto variations = [&](int at_minus_inf) {
    int count = 0, prev = 0;
    for (const auto& f : chain) {
      if (f.empty()) continue;
      int s = sgn(f.back());
      if (at_minus_inf && (f.size() - 1) % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return static_cast<unsigned>(variations(1) - variations(0));
}

void require_prime(std::uint64_t ell) {
  if (!arith::is_prime(Integer(static_cast<unsigned long>(ell))))
    throw input_error("omega/residue data wants a prime argument");
}

std::string int_str(const Integer& n) { return n.get_str(); }

}  // namespace

FieldDesc FieldDesc::rationals() { return FieldDesc{}; }

FieldDesc FieldDesc::quadratic(Integer d) {
  FieldDesc F;
  F.kind = FieldKind::quadratic;
  F.d = std::move(d);
  return F;
}

FieldDesc FieldDesc::multiquadratic(std::vector<Integer> gens) {
  FieldDesc F;
  F.kind = FieldKind::multiquadratic;
  F.generators = std::move(gens);
  return F;
}

FieldDesc FieldDesc::monogenic(std::vector<Integer> minpoly,
                               std::vector<Integer> ramified,
                               std::map<std::uint64_t, unsigned> overrides) {
  FieldDesc F;
  F.kind = FieldKind::monogenic;
  F.minpoly = std::move(minpoly);
  F.ramified = std::move(ramified);
  F.omega_override = std::move(overrides);
  std::sort(F.ramified.begin(), F.ramified.end());
  return F;
}

Integer square_class_product(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw input_error("square class of 0 is undefined");
  Integer g = gcd(a, b);
  return (a / g) * (b / g);
}

void validate(const FieldDesc& F) {
  switch (F.kind) {
    case FieldKind::rational:
      return;
    case FieldKind::quadratic:
      if (is_unit_or_zero(F.d) || !arith::is_squarefree(F.d))
        throw input_error("quadratic field wants a squarefree d != 0, 1");
      return;
    case FieldKind::multiquadratic: {
      if (F.generators.empty())
        throw input_error("multiquadratic field wants at least one generator");
      for (const auto& g : F.generators)
        if (is_unit_or_zero(g) || !arith::is_squarefree(g))
          throw input_error(
              "multiquadratic generators must be squarefree and != 0, 1");
      if (qset(F).size() != (size_t{1} << F.generators.size()))
        throw input_error(
            "multiquadratic generators are dependent modulo squares");
      return;
    }
    case FieldKind::monogenic: {
      if (F.minpoly.size() < 2 || F.minpoly.back() != 1)
        throw input_error("monogenic field wants a monic minimal polynomial");
      for (const auto& q : F.ramified)
        if (!arith::is_prime(q))
          throw input_error("ramified list must consist of primes");
      for (size_t i = 1; i < F.ramified.size(); ++i)
        if (F.ramified[i] <= F.ramified[i - 1])
          throw input_error(
              "ramified list must be strictly increasing without repeats");
      return;
    }
  }
  throw input_error("unknown field kind");
}

unsigned degree(const FieldDesc& F) {
  switch (F.kind) {
    case FieldKind::rational:
      return 1;
    case FieldKind::quadratic:
      return 2;
    case FieldKind::multiquadratic:
      return 1u << F.generators.size();
    case FieldKind::monogenic:
      return static_cast<unsigned>(F.minpoly.size() - 1);
  }
  throw input_error("unknown field kind");
}

unsigned real_embeddings(const FieldDesc& F) {
  switch (F.kind) {
    case FieldKind::rational:
      return 1;
    case FieldKind::quadratic:
      return F.d > 0 ? 2 : 0;
    case FieldKind::multiquadratic: {
      for (const auto& g : F.generators)
        if (g < 0) return 0;
      return degree(F);  // totally real iff every generator is positive
    }
    case FieldKind::monogenic:
      return real_roots_sturm(F.minpoly);
  }
  throw input_error("unknown field kind");
}

std::vector<Integer> qset(const FieldDesc& F) {
  switch (F.kind) {
    case FieldKind::rational:
      return {Integer(1)};
    case FieldKind::quadratic:
      return F.d < 1 ? std::vector<Integer>{F.d, Integer(1)}
                     : std::vector<Integer>{Integer(1), F.d};
    case FieldKind::multiquadratic: {
      std::set<Integer> classes{Integer(1)};
      for (const auto& g : F.generators) {
        std::set<Integer> next = classes;
        for (const auto& e : classes) next.insert(square_class_product(e, g));
        classes = std::move(next);
      }
      return {classes.begin(), classes.end()};
    }
    case FieldKind::monogenic:
      throw input_error("square classes are unavailable for monogenic fields");
  }
  throw input_error("unknown field kind");
}

unsigned omega_prime(const FieldDesc& F, std::uint64_t ell) {
  require_prime(ell);
  switch (F.kind) {
    case FieldKind::rational:
      return 1;
    case FieldKind::quadratic: {
      if (quad_ramified(F.d, ell)) return 1;
      return arith::kronecker(F.d, Integer(static_cast<unsigned long>(ell))) ==
                     1
                 ? 2
                 : 1;
    }
    case FieldKind::multiquadratic: {
      auto u = unramified_classes(qset(F), ell);
      return static_cast<unsigned>(u.size()) / split_degree(u, ell);
    }
    case FieldKind::monogenic: {
      auto it = F.omega_override.find(ell);
      if (it != F.omega_override.end()) return it->second;
      if (std::binary_search(F.ramified.begin(), F.ramified.end(),
                             Integer(static_cast<unsigned long>(ell))))
        throw computation_error("splitting data required at the ramified prime " +
                                std::to_string(ell));
      if (!arith::is_separable_mod(F.minpoly, ell))
        throw computation_error(
            "splitting data required at the index divisor " +
            std::to_string(ell));
      return static_cast<unsigned>(
          arith::factor_degrees_mod(F.minpoly, ell).size());
    }
  }
  throw input_error("unknown field kind");
}

unsigned omega_support(const FieldDesc& F, const Integer& n) {
  if (n == 0) throw input_error("support of 0 is undefined");
  unsigned total = 0;
  for (const auto& pp : arith::factorize(n).factors) {
    if (!pp.p.fits_ulong_p())
      throw input_error("prime support exceeds the supported range");
    total += omega_prime(F, pp.p.get_ui());
  }
  return total;
}

std::vector<Integer> ramified_primes(const FieldDesc& F) {
  switch (F.kind) {
    case FieldKind::rational:
      return {};
    case FieldKind::quadratic:
    case FieldKind::multiquadratic: {
      std::set<Integer> primes;
      const auto classes = qset(F);
      bool two_ramifies = false;
      for (const auto& D : classes) {
        if (D == 1) continue;
        for (const auto& pp : arith::factorize(D).factors)
          if (pp.p != 2) primes.insert(pp.p);
        if (quad_ramified(D, 2)) two_ramifies = true;
      }
      if (two_ramifies) primes.insert(Integer(2));
      return {primes.begin(), primes.end()};
    }
    case FieldKind::monogenic:
      return F.ramified;
  }
  throw input_error("unknown field kind");
}

std::vector<unsigned> residue_degrees(const FieldDesc& F, std::uint64_t ell) {
  require_prime(ell);
  const auto ram = ramified_primes(F);
  if (std::binary_search(ram.begin(), ram.end(),
                         Integer(static_cast<unsigned long>(ell))))
    throw input_error("residue degrees want an unramified prime, " +
                      std::to_string(ell) + " ramifies");
  switch (F.kind) {
    case FieldKind::rational:
      return {1};
    case FieldKind::quadratic:
      return arith::kronecker(F.d, Integer(static_cast<unsigned long>(ell))) ==
                     1
                 ? std::vector<unsigned>{1, 1}
                 : std::vector<unsigned>{2};
    case FieldKind::multiquadratic: {
      const unsigned f = split_degree(qset(F), ell);
      return std::vector<unsigned>(degree(F) / f, f);
    }
    case FieldKind::monogenic: {
      if (F.omega_override.count(ell))
        throw computation_error(
            "splitting data at " + std::to_string(ell) +
            " fixes only the number of places, not their degrees");
      if (!arith::is_separable_mod(F.minpoly, ell))
        throw computation_error(
            "splitting data required at the index divisor " +
            std::to_string(ell));
      auto degs = arith::factor_degrees_mod(F.minpoly, ell);
      unsigned sum = 0;
      for (unsigned d : degs) sum += d;
      if (sum != degree(F))
        throw computation_error("degree bookkeeping failed at " +
                                std::to_string(ell));
      return degs;
    }
  }
  throw input_error("unknown field kind");
}

ExtensionDesc make_extension(FieldDesc base, FieldDesc top,
                             unsigned degree_kf) {
  ExtensionDesc E;
  E.base = std::move(base);
  E.top = std::move(top);
  E.degree_kf = degree_kf;
  E.ramified_primes_k = ramified_primes(E.top);
  validate(E);
  return E;
}

void validate(const ExtensionDesc& E) {
  validate(E.base);
  validate(E.top);
  if (E.degree_kf == 0) throw input_error("[K:F] must be positive");
  if (degree(E.top) != E.degree_kf * degree(E.base))
    throw input_error("field degrees are inconsistent: [K:Q] != [K:F][F:Q]");
  if (E.ramified_primes_k.empty() && degree(E.top) > 1)
    throw input_error("a nontrivial field ramifies at some prime");
  for (const auto& q : ramified_primes(E.base))
    if (!std::binary_search(E.ramified_primes_k.begin(),
                            E.ramified_primes_k.end(), q))
      throw input_error("base field ramifies at " + int_str(q) +
                        " but the top field does not");
}

unsigned residue_degree_unramified(const ExtensionDesc& E, std::uint64_t ell) {
  require_prime(ell);
  if (std::binary_search(E.ramified_primes_k.begin(),
                         E.ramified_primes_k.end(),
                         Integer(static_cast<unsigned long>(ell))))
    throw input_error("residue degree wants a prime unramified in K, " +
                      std::to_string(ell) + " ramifies");
  auto uniform = [&](const FieldDesc& F) {
    auto degs = residue_degrees(F, ell);
    for (unsigned d : degs)
      if (d != degs.front())
        throw computation_error("residue degrees above " +
                                std::to_string(ell) +
                                " are not all equal; the local degree of "
                                "K/F there is ill-defined");
    return degs.front();
  };
  const unsigned fk = uniform(E.top);
  const unsigned ff = uniform(E.base);
  if (fk % ff != 0)
    throw computation_error("residue degree of the base does not divide the "
                            "top degree at " +
                            std::to_string(ell));
  return fk / ff;
}

std::string describe(const FieldDesc& F) {
  std::ostringstream os;
  switch (F.kind) {
    case FieldKind::rational:
      os << "Q";
      break;
    case FieldKind::quadratic:
      os << "Q(sqrt(" << int_str(F.d) << "))";
      break;
    case FieldKind::multiquadratic: {
      os << "Q(";
      for (size_t i = 0; i < F.generators.size(); ++i)
        os << (i ? "," : "") << "sqrt(" << int_str(F.generators[i]) << ")";
      os << ")";
      break;
    }
    case FieldKind::monogenic: {
      os << "monogenic(deg=" << degree(F) << ",ram={";
      for (size_t i = 0; i < F.ramified.size(); ++i)
        os << (i ? "," : "") << int_str(F.ramified[i]);
      os << "})";
      break;
    }
  }
  return os.str();
}

std::string describe(const ExtensionDesc& E) {
  std::ostringstream os;
  os << "K=" << describe(E.top) << "/F=" << describe(E.base)
     << ",[K:F]=" << E.degree_kf;
  return os.str();
}

}  // namespace selbound::numfield
