#include <doctest.h>

#include <algorithm>

#include "orbitcheck/outcomes.hpp"
#include "orbitcheck/rng.hpp"
#include "support/sampling_oracle.hpp"

using namespace orbitcheck;
using orbitcheck::testing::sampling_oracle;

namespace {

VecSet basis_set(std::size_t d, std::initializer_list<std::size_t> idx) {
  VecSet xs;
  for (std::size_t i : idx) xs.push_back(basis(d, i));
  return canonical_set(std::move(xs));
}

}  // namespace

TEST_CASE("verify_copies accepts the two-copy certificate") {
  VecSet A = basis_set(3, {0});
  VecSet B = basis_set(3, {1, 2});
  CopyCertificate cert;
  cert.involutions = {Permutation::transposition(3, 0, 1),
                      Permutation::transposition(3, 0, 2)};
  cert.images = {basis_set(3, {1}), basis_set(3, {2})};
  CHECK(verify_copies(A, B, cert));
}

TEST_CASE("verify_copies: A contains n copies of A via identities") {
  VecSet A = basis_set(4, {0, 2});
  CopyCertificate cert;
  for (int i = 0; i < 3; ++i) {
    cert.involutions.push_back(Permutation::identity(4));
    cert.images.push_back(A);
  }
  CHECK(verify_copies(A, A, cert));
}

TEST_CASE("verify_copies rejects a non-embedding") {
  VecSet A = basis_set(4, {0});
  VecSet B = basis_set(4, {1});
  CopyCertificate cert;
  cert.involutions = {Permutation::transposition(4, 0, 2)};
  cert.images = {basis_set(4, {2})};
  CHECK_FALSE(verify_copies(A, B, cert));
}

TEST_CASE("find_copies on the three-outcome example") {
  VecSet A = basis_set(3, {0});
  VecSet B = basis_set(3, {1, 2});
  auto cert = find_copies(A, B, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->n() == 2);
  CHECK(verify_copies(A, B, *cert));
  CHECK(cert->involutions[0] == Permutation::transposition(3, 0, 1));
  CHECK(cert->involutions[1] == Permutation::transposition(3, 0, 2));
}

TEST_CASE("find_copies embeds one basis vector four ways") {
  VecSet A = basis_set(5, {0});
  VecSet B = basis_set(5, {1, 2, 3, 4});
  auto cert = find_copies(A, B, 4);
  REQUIRE(cert.has_value());
  CHECK(verify_copies(A, B, *cert));
}

TEST_CASE("find_copies fails when B is too small") {
  CHECK_FALSE(find_copies(basis_set(4, {0, 1}), basis_set(4, {2}), 1).has_value());
}

TEST_CASE("found certificates always verify") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.uniform_int(3, 5));
    VecSet all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(basis(d, i));
    VecSet A = {all[0]};
    VecSet B;
    for (std::size_t i = 1; i < d; ++i) {
      if (rng.uniform01() < 0.7) B.push_back(all[i]);
    }
    B = canonical_set(std::move(B));
    if (B.empty()) continue;
    int n = rng.uniform_int(1, 3);
    auto cert = find_copies(A, B, n);
    if (cert) CHECK(verify_copies(A, B, *cert));
  }
}

TEST_CASE("disjoint copies imply |B| >= |A|") {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.uniform_int(3, 5));
    VecSet A, B;
    for (std::size_t i = 0; i < d; ++i) {
      double roll = rng.uniform01();
      if (roll < 0.3) A.push_back(basis(d, i));
      if (roll >= 0.3 && roll < 0.8) B.push_back(basis(d, i));
    }
    A = canonical_set(std::move(A));
    B = canonical_set(std::move(B));
    if (A.empty() || B.empty()) continue;
    auto cert = find_copies(A, B, 1);
    if (cert && set_intersect(cert->images[0], A).empty()) {
      CHECK(B.size() >= A.size());
    }
  }
}

TEST_CASE("verify_superset_copies") {
  VecSet A = basis_set(3, {0});
  VecSet B = basis_set(3, {1, 2});
  std::vector<Permutation> phis = {Permutation::transposition(3, 0, 1),
                                   Permutation::transposition(3, 0, 2)};

  SUBCASE("copies reinterpreted with B_i_star = phi_i.A") {
    std::vector<VecSet> b_star = {basis_set(3, {1}), basis_set(3, {2})};
    CHECK(verify_superset_copies(A, B, b_star, phis));
  }
  SUBCASE("B_i_star = B breaks the setwise fixing condition") {
    std::vector<VecSet> b_star = {B, B};
    // phi_1 . B = {e0, e2} != B.
    CHECK_FALSE(verify_superset_copies(A, B, b_star, phis));
  }
  SUBCASE("single superset copy has no cross conditions") {
    VecSet B2 = basis_set(3, {1, 2});
    CHECK(verify_superset_copies(A, B2, {B2},
                                 {Permutation::transposition(3, 0, 1)}));
  }
}

TEST_CASE("nondominated basics") {
  SUBCASE("singleton") {
    VecSet X = {Vec{0.3, 0.7}};
    CHECK(nondominated(X) == X);
  }
  SUBCASE("midpoint of two basis vectors is dominated") {
    VecSet X = canonical_set({Vec{1, 0}, Vec{0, 1}, Vec{0.5, 0.5}});
    VecSet expected = canonical_set({Vec{1, 0}, Vec{0, 1}});
    CHECK(nondominated(X) == expected);
  }
  SUBCASE("basis vectors are all strictly optimal somewhere") {
    VecSet X = basis_set(3, {0, 1, 2});
    CHECK(nondominated(X) == X);
  }
  SUBCASE("duplicates are rejected") {
    VecSet raw = {Vec{1, 0}, Vec{1, 0}};
    CHECK_THROWS_AS(nondominated(raw), std::invalid_argument);
  }
}

TEST_CASE("nondominated is idempotent and agrees with the sampling oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.uniform_int(2, 4));
    std::size_t count = static_cast<std::size_t>(rng.uniform_int(2, 6));
    VecSet X;
    for (std::size_t i = 0; i < count; ++i) {
      Vec v(d);
      for (double& x : v) {
        x = static_cast<double>(rng.uniform_int(-4, 4)) / 2.0;
      }
      X.push_back(std::move(v));
    }
    X = canonical_set(std::move(X));
    if (X.size() < 2) continue;

    VecSet nd = nondominated(X);
    CHECK(is_subset(nd, X));
    if (!nd.empty()) CHECK(nondominated(nd) == nd);

    // Every oracle-certified strict winner must be kept.
    VecSet oracle = sampling_oracle(X, 20000, 1000 + static_cast<std::uint64_t>(trial));
    CHECK(is_subset(oracle, nd));
  }
}

TEST_CASE("set_similar") {
  CHECK(set_similar(basis_set(3, {1}), basis_set(3, {0})) ==
        Permutation::transposition(3, 0, 1));
  VecSet X = basis_set(3, {0, 1});
  CHECK(set_similar(X, X) == Permutation::identity(3));
  // {e1, e2} -> {e1, e3} via the transposition of coordinates 1 and 2.
  auto phi = set_similar(basis_set(3, {0, 2}), basis_set(3, {0, 1}));
  REQUIRE(phi.has_value());
  CHECK(phi->act(basis_set(3, {0, 1})) == basis_set(3, {0, 2}));
  CHECK(*phi == Permutation::transposition(3, 1, 2));

  CHECK_FALSE(set_similar(basis_set(3, {0}), basis_set(3, {0, 1})).has_value());
  CHECK_FALSE(
      set_similar({Vec{1, 1, 0}}, {Vec{1, 0, 0}}).has_value());
}

TEST_CASE("on_simplex") {
  CHECK(on_simplex(Vec{0.25, 0.75}));
  CHECK_FALSE(on_simplex(Vec{0.5, 0.6}));
  CHECK_FALSE(on_simplex(Vec{-0.1, 1.1}));
}

TEST_CASE("outcome sets merge duplicates at construction") {
  OutcomeSet set("fruit", {basis(3, 1), basis(3, 1), basis(3, 2)});
  CHECK(set.name == "fruit");
  CHECK(set.elements.size() == 2);
  CHECK(set.elements == basis_set(3, {1, 2}));
  CHECK_THROWS_AS(OutcomeSet("bad", {basis(3, 0), basis(2, 0)}),
                  std::invalid_argument);
}
