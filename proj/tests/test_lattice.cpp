#include "doctest.h"
#include "support.hpp"

#include "crystcoh/catalog.hpp"
#include "crystcoh/cohomology.hpp"
#include "crystcoh/errors.hpp"
#include "crystcoh/exterior.hpp"

using namespace crystcoh;
using testing::Rng;

TEST_CASE("validate_lattice") {
  SUBCASE("xi_1 for N = 3") {
    Lattice L(make_matrix({{0, 1}, {-1, -1}}), 3);
    LatticeReport r = validate_lattice(L);
    CHECK(r.order == 3);
    CHECK(r.faithful);
    CHECK(L.T == augmentation_ideal(3).T);
  }
  SUBCASE("non-faithful trivial action is flagged, not rejected") {
    LatticeReport r = validate_lattice(Lattice(make_matrix({{1}}), 2));
    CHECK(r.order == 1);
    CHECK_FALSE(r.faithful);
  }
  SUBCASE("infinite order is rejected") {
    for (std::int64_t N : {1, 2, 3, 4, 6, 12})
      CHECK_THROWS_AS(validate_lattice(Lattice(make_matrix({{0, 1}, {1, 1}}), N)),
                      InvalidLattice);
  }
  SUBCASE("wrong order or determinant") {
    CHECK_THROWS_AS(validate_lattice(Lattice(make_matrix({{-1}}), 3)), InvalidLattice);
    CHECK_THROWS_AS(validate_lattice(Lattice(make_matrix({{2}}), 1)), InvalidLattice);
    CHECK_THROWS_AS(validate_lattice(Lattice(make_matrix({{1, 0}}), 1)), InvalidLattice);
    CHECK_THROWS_AS(validate_lattice(Lattice(make_matrix({{1}}), 0)), InvalidLattice);
  }
}

TEST_CASE("dual") {
  Lattice perm = regular_module(4);
  CHECK(dual(perm).T == perm.T);
  CHECK(dual(Lattice(make_matrix({{-1}}), 2)).T == make_matrix({{-1}}));
  CHECK(dual(augmentation_ideal(3)).T == make_matrix({{-1, 1}, {-1, 0}}));

  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t N = std::vector<std::int64_t>{2, 3, 4, 6, 8, 12}[trial % 6];
    Lattice L = testing::random_finite_order(rng, N, 5);
    CHECK(dual(dual(L)) == L);
    CHECK(dual(L).T * L.T.transpose() == identity_matrix(L.T.rows()));
    for (int j = 0; j <= L.rank(); ++j)
      CHECK(dual(exterior_power(L, j)) == exterior_power(dual(L), j));
  }
}

TEST_CASE("exterior_power") {
  Lattice rho4 = preset("rho4").lattice;
  CHECK(exterior_power(rho4, 0).T == identity_matrix(1));
  CHECK(exterior_power(rho4, 2).T == make_matrix({{1}}));
  Lattice L = preset("z8_4").lattice;
  CHECK(exterior_power(L, 4).T == make_matrix({{determinant(L.T).get_si()}}));
  CHECK(exterior_power(L, 2).rank() == 6);
  CHECK_THROWS_AS(exterior_power(rho4, 3), std::invalid_argument);
  CHECK_THROWS_AS(exterior_power(rho4, -1), std::invalid_argument);
}

TEST_CASE("direct_sum and lift") {
  CHECK(direct_sum(trivial_lattice(1), trivial_lattice(1)).T == identity_matrix(2));
  Lattice s = direct_sum(preset("rho2").lattice, preset("rho1").lattice);
  CHECK(s.T == make_matrix({{-1, 0}, {0, 1}}));
  CHECK(direct_sum(augmentation_ideal(3), trivial_lattice(1, 3)).rank() == 3);
  CHECK_THROWS_AS(direct_sum(augmentation_ideal(3), trivial_lattice(1, 2)),
                  std::invalid_argument);
  Lattice lifted = lift(augmentation_ideal(3), 6);
  CHECK(lifted.N == 6);
  CHECK(lifted.T == augmentation_ideal(3).T);
  CHECK_THROWS_AS(lift(augmentation_ideal(3), 4), std::invalid_argument);
}

TEST_CASE("restrict_to_sylow") {
  Lattice z12 = preset("z12_4").lattice;
  Lattice R2 = restrict_to_sylow(z12, 2);
  CHECK(R2.N == 4);
  CHECK(R2.T == power(z12.T, 3));
  CHECK(R2.T * R2.T == negate(identity_matrix(4)));
  Lattice R3 = restrict_to_sylow(z12, 3);
  CHECK(R3.N == 3);
  CHECK(R3.T == power(z12.T, 4));
  Lattice ig5 = augmentation_ideal(5);
  CHECK(restrict_to_sylow(ig5, 5).T == ig5.T);
  CHECK_THROWS_AS(restrict_to_sylow(ig5, 2), std::invalid_argument);

  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Lattice L = testing::random_finite_order(rng, 12, 6);
    for (std::int64_t p : {2, 3}) {
      Lattice R = restrict_to_sylow(L, p);
      CHECK(R.rank() == L.rank());
      CHECK(is_identity(power(R.T, static_cast<std::size_t>(R.N))));
    }
  }
}

TEST_CASE("decompose_p_type") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    CAPTURE(p);
    for (int r = 1; r <= 3; ++r)
      CHECK(decompose_p_type(trivial_lattice(r, p)) == PTypeDecomposition{r, 0, 0, p});
    CHECK(decompose_p_type(regular_module(p)) == PTypeDecomposition{0, 1, 0, p});
    CHECK(decompose_p_type(augmentation_ideal(p)) == PTypeDecomposition{0, 0, 1, p});
  }
  CHECK(decompose_p_type(Lattice(make_matrix({{-1}}), 2)) == PTypeDecomposition{0, 0, 1, 2});
  CHECK_THROWS_AS(decompose_p_type(preset("rho4").lattice), std::invalid_argument);

  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[trial % 3];
    Lattice L = testing::random_finite_order(rng, p, 8);
    PTypeDecomposition d = decompose_p_type(L);
    CHECK(d.r + d.s * p + d.t * (p - 1) == L.rank());
  }
}

TEST_CASE("find_conjugator") {
  Rng rng(41);
  for (const char* name : {"rho4", "rho5", "z4_3", "z8_4"}) {
    Lattice L = preset(name).lattice;
    Lattice M = testing::random_conjugate(rng, L, 4);
    auto P = find_conjugator(L.T, M.T);
    REQUIRE(P.has_value());
    CHECK(abs(determinant(*P)) == 1);
    CHECK(L.T * *P == *P * M.T);
  }
  // rho2 + rho2 (-I) is not conjugate to rho3 (swap)
  CHECK_FALSE(find_conjugator(negate(identity_matrix(2)), preset("rho3").lattice.T).has_value());
}

TEST_CASE("as_permutation") {
  auto p = as_permutation(regular_module(3).T);
  REQUIRE(p.has_value());
  CHECK(*p == std::vector<int>{1, 2, 0});
  CHECK_FALSE(as_permutation(augmentation_ideal(3).T).has_value());
  CHECK_FALSE(as_permutation(make_matrix({{-1}})).has_value());
}
