#include <doctest.h>

#include <vector>

#include "oracle_cohomology.hpp"
#include "selbound/errors.hpp"
#include "selbound/lattice.hpp"

namespace {

using selbound::arith::Integer;
using selbound::computation_error;
using selbound::input_error;
using namespace selbound::lattice;
using selbound::testing::h1_p_torsion_dim_oracle;

IntMat from_rows(unsigned n, std::vector<std::int64_t> entries) {
  IntMat m(n);
  m.a = std::move(entries);
  return m;
}

// multiplication by zeta on Z[zeta_5] in the basis {1, zeta, zeta^2,
// zeta^3}: the companion matrix of 1 + x + x^2 + x^3 + x^4
IntMat zeta5_companion() {
  return from_rows(4, {0, 0, 0, -1,  //
                       1, 0, 0, -1,  //
                       0, 1, 0, -1,  //
                       0, 0, 1, -1});
}

// the substitution zeta -> zeta^2 in the same basis
IntMat zeta5_substitution() {
  return from_rows(4, {1, 0, -1, 0,  //
                       0, 0, -1, 1,  //
                       0, 1, -1, 0,  //
                       0, 0, -1, 0});
}

LatticeDesc zeta5_lattice() {
  return {4, {zeta5_companion(), zeta5_substitution()}};
}

const Permutation kFiveCycle{1, 2, 3, 4, 0};
const Permutation kTimesTwoMod5{0, 2, 4, 1, 3};

struct CatalogEntry {
  const char* name;
  std::vector<Permutation> perms;
  std::size_t order;
};

// permutation groups on up to 6 points, of order up to 24
const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"swap on 2 points", {{1, 0}}, 2},
      {"3-cycle", {{1, 2, 0}}, 3},
      {"symmetric on 3 points", {{1, 2, 0}, {1, 0, 2}}, 6},
      {"4-cycle", {{1, 2, 3, 0}}, 4},
      {"double transpositions", {{1, 0, 3, 2}, {2, 3, 0, 1}}, 4},
      {"dihedral on 4 points", {{1, 2, 3, 0}, {0, 3, 2, 1}}, 8},
      {"alternating on 4 points", {{1, 0, 3, 2}, {1, 2, 0, 3}}, 12},
      {"symmetric on 4 points", {{1, 2, 3, 0}, {1, 0, 2, 3}}, 24},
      {"5-cycle", {kFiveCycle}, 5},
      {"affine on 5 points", {kFiveCycle, kTimesTwoMod5}, 20},
      {"6-cycle", {{1, 2, 3, 4, 5, 0}}, 6},
      {"dihedral on 6 points", {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}}, 12},
      {"product of a 3-cycle and a swap",
       {{1, 2, 0, 4, 5, 3}, {3, 4, 5, 0, 1, 2}},
       6},
  };
  return entries;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("matrix basics") {
  IntMat id = IntMat::identity(3);
  CHECK(det(id) == 1);
  IntMat m = from_rows(2, {1, 2, 3, 4});
  CHECK(det(m) == -2);
  CHECK(det(from_rows(2, {1, 2, 2, 4})) == 0);
  CHECK(m.mul(id.n == 2 ? id : IntMat::identity(2)) == m);
  IntMat sq = m.mul(m);
  CHECK(sq.at(0, 0) == 7);
  CHECK(sq.at(1, 1) == 22);
  CHECK(det(zeta5_companion()) == 1);
  CHECK(det(zeta5_substitution()) == -1);
  CHECK_THROWS_AS(m.mul(IntMat::identity(3)), input_error);
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(validate(LatticeDesc{0, {}}), input_error);
  CHECK_THROWS_AS(validate(LatticeDesc{2, {}}), input_error);
  CHECK_THROWS_AS(validate(LatticeDesc{3, {IntMat::identity(2)}}), input_error);
  CHECK_THROWS_AS(validate(LatticeDesc{1, {from_rows(1, {2})}}), input_error);
  // determinant 1 but infinite order: closure must refuse
  LatticeDesc shear{2, {from_rows(2, {1, 1, 0, 1})}};
  CHECK_THROWS_AS(validate(shear, 100), computation_error);
  CHECK_NOTHROW(validate(zeta5_lattice()));
}

TEST_CASE("group closure sizes") {
  CHECK(group_closure({IntMat::identity(3)}).size() == 1);
  CHECK(group_closure(natural_perm_lattice({kFiveCycle}).generators).size() == 5);
  CHECK(group_closure(zeta5_lattice().generators).size() == 20);
  for (const auto& entry : catalog()) {
    auto l = natural_perm_lattice(entry.perms);
    CHECK_MESSAGE(group_closure(l.generators).size() == entry.order, entry.name);
  }
  auto els = group_closure({from_rows(1, {-1})});
  CHECK(els.size() == 2);
  CHECK(els.front() == IntMat::identity(1));
  CHECK_THROWS_AS(group_closure({}), input_error);
}

TEST_CASE("permutation module construction") {
  // 2-cycle on 2 points: augmentation is rank 1 with generator (-1)
  LatticeDesc aug2 = augmentation_lattice({{1, 0}});
  CHECK(aug2.rank == 1);
  CHECK(aug2.generators.size() == 1);
  CHECK(aug2.generators[0].at(0, 0) == -1);

  // identity on 3 points: rank 2 trivial action
  LatticeDesc triv = augmentation_lattice({{0, 1, 2}});
  CHECK(triv.rank == 2);
  CHECK(triv.generators[0] == IntMat::identity(2));

  LatticeDesc nat = natural_perm_lattice({kFiveCycle});
  CHECK(nat.rank == 5);
  CHECK(nat.generators[0].at(1, 0) == 1);  // e_0 -> e_1

  CHECK_THROWS_AS(natural_perm_lattice({}), input_error);
  CHECK_THROWS_AS(natural_perm_lattice({{0}}), input_error);
  CHECK_THROWS_AS(natural_perm_lattice({{1, 1}}), input_error);
  CHECK_THROWS_AS(natural_perm_lattice({{1, 2, 0}, {1, 0}}), input_error);
}

TEST_CASE("golden values for the affine lattice on 5 points") {
  LatticeDesc aug = augmentation_lattice({kFiveCycle, kTimesTwoMod5});
  CHECK(aug.rank == 4);
  CHECK(fixed_dim_mod_p(aug, 5) == 1);
  CHECK(rational_fixed_rank(aug) == 0);
  CHECK(h1_p_torsion_dim(aug, 5) == 1);
  for (unsigned p : {2u, 3u, 7u, 11u, 13u}) {
    CHECK(fixed_dim_mod_p(aug, p) == 0);
    CHECK(h1_p_torsion_dim(aug, p) == 0);
  }
  auto hyp5 = mw_multiplicity_hypothesis_check(aug, 5);
  CHECK(hyp5.satisfied);
  CHECK(hyp5.dim == 1);
  CHECK_FALSE(mw_multiplicity_hypothesis_check(aug, 3).satisfied);
}

TEST_CASE("golden values for the cyclotomic lattice") {
  LatticeDesc l = zeta5_lattice();
  CHECK(rational_fixed_rank(l) == 0);
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    CHECK(fixed_dim_mod_p(l, p) == 0);
    CHECK(h1_p_torsion_dim(l, p) == 0);
  }
  CHECK_FALSE(mw_multiplicity_hypothesis_check(l, 5).satisfied);
}

TEST_CASE("trivial actions fix everything") {
  LatticeDesc triv{3, {IntMat::identity(3)}};
  CHECK(rational_fixed_rank(triv) == 3);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    CHECK(fixed_dim_mod_p(triv, p) == 3);
    CHECK(h1_p_torsion_dim(triv, p) == 0);
  }
  auto hyp = mw_multiplicity_hypothesis_check(triv, 7);
  CHECK(hyp.satisfied);
  CHECK(hyp.dim == 3);
  CHECK_THROWS_AS(fixed_dim_mod_p(triv, 6), input_error);
}

TEST_CASE("rational fixed rank counts orbits on permutation modules") {
  for (const auto& entry : catalog()) {
    // all catalog actions are transitive: one orbit
    CHECK_MESSAGE(rational_fixed_rank(natural_perm_lattice(entry.perms)) == 1,
                  entry.name);
    CHECK_MESSAGE(rational_fixed_rank(augmentation_lattice(entry.perms)) == 0,
                  entry.name);
  }
  // three orbits: {0,1}, {2}, {3}
  LatticeDesc nat = natural_perm_lattice({{1, 0, 2, 3}});
  CHECK(rational_fixed_rank(nat) == 3);
}

TEST_CASE("a p-group fixes a line mod p") {
  struct Case {
    std::vector<Permutation> perms;
    unsigned p;
  };
  const Case cases[] = {
      {{{1, 0}}, 2},
      {{{1, 2, 3, 0}}, 2},
      {{{1, 0, 3, 2}, {2, 3, 0, 1}}, 2},
      {{{1, 2, 0}}, 3},
      {{kFiveCycle}, 5},
  };
  for (const auto& c : cases) {
    CHECK(fixed_dim_mod_p(natural_perm_lattice(c.perms), c.p) >= 1);
    CHECK(fixed_dim_mod_p(augmentation_lattice(c.perms), c.p) >= 1);
  }
}

TEST_CASE("mod-p fixed dimension dominates the rational fixed rank") {
  for (const auto& entry : catalog()) {
    for (LatticeDesc l : {natural_perm_lattice(entry.perms),
                          augmentation_lattice(entry.perms)}) {
      const unsigned rat = rational_fixed_rank(l);
      for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
        CHECK_MESSAGE(fixed_dim_mod_p(l, p) >= rat, entry.name);
    }
  }
}

TEST_CASE("the 2-cycle augmentation carries 2-torsion cohomology") {
  LatticeDesc aug = augmentation_lattice({{1, 0}});
  CHECK(fixed_dim_mod_p(aug, 2) == 1);
  CHECK(rational_fixed_rank(aug) == 0);
  CHECK(h1_p_torsion_dim(aug, 2) == 1);
  CHECK(h1_p_torsion_dim(aug, 3) == 0);
  CHECK(h1_p_torsion_dim_oracle(aug, 2) == 1);
  CHECK(h1_p_torsion_dim_oracle(aug, 3) == 0);
}

TEST_CASE("cocycle oracle agrees across the catalog") {
  for (const auto& entry : catalog()) {
    for (LatticeDesc l : {natural_perm_lattice(entry.perms),
                          augmentation_lattice(entry.perms)}) {
      for (unsigned p : {2u, 3u, 5u, 7u}) {
        CHECK_MESSAGE(h1_p_torsion_dim(l, p) == h1_p_torsion_dim_oracle(l, p),
                      entry.name << " p=" << p << " rank=" << l.rank);
      }
    }
  }
  // and on the one non-permutation lattice in the suite
  for (unsigned p : {2u, 3u, 5u, 7u})
    CHECK(h1_p_torsion_dim_oracle(zeta5_lattice(), p) == 0);
}

}  // TEST_SUITE
