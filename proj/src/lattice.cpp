#include "selbound/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "selbound/errors.hpp"

namespace selbound::lattice {

namespace {

void require_prime(unsigned p) {
  if (!arith::is_prime(Integer(p))) throw input_error("p must be prime");
}

std::int64_t checked_i64(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw computation_error("matrix entry exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// rows of (M_g - I) for every generator, stacked
std::vector<std::vector<std::int64_t>> stacked_fixed_rows(const LatticeDesc& l) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(static_cast<std::size_t>(l.rank) * l.generators.size());
  for (const IntMat& g : l.generators)
    for (unsigned i = 0; i < l.rank; ++i) {
      std::vector<std::int64_t> row(l.rank);
      for (unsigned j = 0; j < l.rank; ++j)
        row[j] = g.at(i, j) - (i == j ? 1 : 0);
      rows.push_back(std::move(row));
    }
  return rows;
}

unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, unsigned ncols,
                    std::uint64_t p) {
  unsigned rank = 0;
  for (unsigned col = 0; col < ncols && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    // scale the pivot row to 1 via Fermat inversion
    std::uint64_t inv = 1, base = rows[rank][col] % p, e = p - 2;
    while (e != 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (unsigned j = col; j < ncols; ++j) rows[rank][j] = rows[rank][j] * inv % p;
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::uint64_t f = rows[i][col];
      for (unsigned j = col; j < ncols; ++j)
        rows[i][j] = (rows[i][j] + (p - f) * rows[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

unsigned rank_over_q(const std::vector<std::vector<std::int64_t>>& int_rows,
                     unsigned ncols) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(int_rows.size());
  for (const auto& r : int_rows) {
    std::vector<Rational> row(ncols);
    for (unsigned j = 0; j < ncols; ++j) row[j] = Rational(r[j]);
    rows.push_back(std::move(row));
  }
  unsigned rank = 0;
  for (unsigned col = 0; col < ncols && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (unsigned j = col; j < ncols; ++j) rows[rank][j] *= inv;
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (unsigned j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

void validate_permutations(const std::vector<Permutation>& perms) {
  if (perms.empty()) throw input_error("at least one permutation is required");
  const std::size_t k = perms.front().size();
  if (k < 2) throw input_error("permutations act on at least two points");
  for (const auto& s : perms) {
    if (s.size() != k)
      throw input_error("permutations act on the same number of points");
    std::vector<bool> seen(k, false);
    for (unsigned v : s) {
      if (v >= k || seen[v]) throw input_error("not a permutation");
      seen[v] = true;
    }
  }
}

}  // namespace

IntMat::IntMat(unsigned size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

IntMat IntMat::identity(unsigned size) {
  IntMat m(size);
  for (unsigned i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::mul(const IntMat& rhs) const {
  if (n != rhs.n) throw input_error("matrix size mismatch");
  IntMat out(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (unsigned k = 0; k < n; ++k)
        acc += static_cast<__int128>(at(i, k)) * rhs.at(k, j);
      out.at(i, j) = checked_i64(acc);
    }
  return out;
}

bool IntMat::operator<(const IntMat& rhs) const {
  if (n != rhs.n) return n < rhs.n;
  return a < rhs.a;
}

Integer det(const IntMat& m) {
  if (m.n == 0) throw input_error("determinant of an empty matrix");
  std::vector<std::vector<Rational>> rows(m.n, std::vector<Rational>(m.n));
  for (unsigned i = 0; i < m.n; ++i)
    for (unsigned j = 0; j < m.n; ++j) rows[i][j] = Rational(m.at(i, j));
  Rational d = 1;
  for (unsigned col = 0; col < m.n; ++col) {
    unsigned pivot = col;
    while (pivot < m.n && rows[pivot][col] == 0) ++pivot;
    if (pivot == m.n) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      d = -d;
    }
    d *= rows[col][col];
    const Rational inv = 1 / rows[col][col];
    for (unsigned j = col; j < m.n; ++j) rows[col][j] *= inv;
    for (unsigned i = col + 1; i < m.n; ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (unsigned j = col; j < m.n; ++j) rows[i][j] -= f * rows[col][j];
    }
  }
  if (d.get_den() != 1) throw computation_error("integer determinant expected");
  return d.get_num();
}

void validate(const LatticeDesc& l, std::size_t order_bound) {
  if (l.rank == 0) throw input_error("lattice rank must be positive");
  if (l.generators.empty())
    throw input_error("a lattice needs at least one generator matrix "
                      "(the identity for a trivial action)");
  for (const IntMat& g : l.generators) {
    if (g.n != l.rank)
      throw input_error("generator size does not match the lattice rank");
    const Integer d = det(g);
    if (d != 1 && d != -1)
      throw input_error("generators must have determinant +1 or -1");
  }
  group_closure(l.generators, order_bound);  // throws when infinite-looking
}

std::vector<IntMat> group_closure(const std::vector<IntMat>& generators,
                                  std::size_t order_bound) {
  if (generators.empty())
    throw input_error("group closure needs at least one generator");
  const unsigned n = generators.front().n;
  for (const IntMat& g : generators)
    if (g.n != n) throw input_error("matrix size mismatch");
  std::vector<IntMat> elements{IntMat::identity(n)};
  std::set<IntMat> seen{elements.front()};
  std::deque<IntMat> todo{elements.front()};
  while (!todo.empty()) {
    const IntMat cur = std::move(todo.front());
    todo.pop_front();
    for (const IntMat& g : generators) {
      IntMat next = cur.mul(g);
      if (!seen.insert(next).second) continue;
      if (seen.size() > order_bound)
        throw computation_error("group closure exceeds the order bound");
      elements.push_back(next);
      todo.push_back(std::move(next));
    }
  }
  return elements;
}

unsigned fixed_dim_mod_p(const LatticeDesc& l, unsigned p) {
  validate(l);
  require_prime(p);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& row : stacked_fixed_rows(l)) {
    std::vector<std::uint64_t> r(l.rank);
    for (unsigned j = 0; j < l.rank; ++j) {
      const std::int64_t v = row[j] % static_cast<std::int64_t>(p);
      r[j] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
    rows.push_back(std::move(r));
  }
  return l.rank - rank_mod_p(std::move(rows), l.rank, p);
}

unsigned rational_fixed_rank(const LatticeDesc& l) {
  validate(l);
  return l.rank - rank_over_q(stacked_fixed_rows(l), l.rank);
}

unsigned h1_p_torsion_dim(const LatticeDesc& l, unsigned p) {
  const unsigned modp = fixed_dim_mod_p(l, p);
  const unsigned rat = rational_fixed_rank(l);
  // a fixed vector stays fixed after reduction, so modp >= rat always
  return modp - rat;
}

LatticeDesc natural_perm_lattice(const std::vector<Permutation>& perms) {
  validate_permutations(perms);
  const unsigned k = static_cast<unsigned>(perms.front().size());
  LatticeDesc l;
  l.rank = k;
  for (const auto& s : perms) {
    IntMat m(k);
    for (unsigned j = 0; j < k; ++j) m.at(s[j], j) = 1;
    l.generators.push_back(std::move(m));
  }
  return l;
}

LatticeDesc augmentation_lattice(const std::vector<Permutation>& perms) {
  validate_permutations(perms);
  const unsigned k = static_cast<unsigned>(perms.front().size());
  LatticeDesc l;
  l.rank = k - 1;
  for (const auto& s : perms) {
    IntMat m(k - 1);
    for (unsigned j = 1; j < k; ++j)
      for (unsigned i = 1; i < k; ++i)
        m.at(i - 1, j - 1) = (s[j] == i ? 1 : 0) - (s[0] == i ? 1 : 0);
    l.generators.push_back(std::move(m));
  }
  return l;
}

MwHypothesis mw_multiplicity_hypothesis_check(const LatticeDesc& l, unsigned p) {
  const unsigned dim = fixed_dim_mod_p(l, p);
  return {dim >= 1, dim};
}

}  // namespace selbound::lattice
