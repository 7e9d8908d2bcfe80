#include <doctest.h>

#include <algorithm>

#include "orbitcheck/permutation.hpp"
#include "orbitcheck/rng.hpp"

using namespace orbitcheck;

TEST_CASE("compose basics") {
  Permutation id = Permutation::identity(3);
  Permutation swap01 = Permutation::transposition(3, 0, 1);
  Permutation swap12 = Permutation::transposition(3, 1, 2);

  CHECK(compose(id, swap01) == swap01);
  CHECK(compose(swap01, id) == swap01);
  CHECK(compose(swap01, swap01) == id);

  // p(q(j)) with p = (0 1), q = (1 2): 0 -> 1, 1 -> 2 -> 2 stays... evaluate
  // directly: j=0: q(0)=0, p(0)=1; j=1: q(1)=2, p(2)=2; j=2: q(2)=1, p(1)=0.
  Permutation three_cycle = compose(swap01, swap12);
  CHECK(three_cycle.mapping() == std::vector<int>{1, 2, 0});
  CHECK_FALSE(three_cycle.is_involution());
}

TEST_CASE("compose dimension mismatch") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("is_involution") {
  CHECK(Permutation::identity(4).is_involution());
  CHECK(Permutation::transposition(4, 0, 1).is_involution());
  CHECK_FALSE(Permutation({1, 2, 0}).is_involution());
}

TEST_CASE("act_vector row representation") {
  // swap(ghost<->apple) over (10, 5, 0) moves the 10 into slot 1.
  Permutation ghost_apple = Permutation::transposition(3, 0, 1);
  CHECK(ghost_apple.act(Vec{10, 5, 0}) == Vec{5, 10, 0});

  Permutation ghost_cherry = Permutation::transposition(3, 0, 2);
  CHECK(ghost_cherry.act(Vec{10, 5, 0}) == Vec{0, 5, 10});

  CHECK(Permutation::identity(3).act(Vec{1, 2, 3}) == Vec{1, 2, 3});
  CHECK_THROWS_AS(ghost_apple.act(Vec{1, 2}), std::invalid_argument);
}

TEST_CASE("act_set") {
  Permutation swap12 = Permutation::transposition(3, 1, 2);
  CHECK(swap12.act(VecSet{basis(3, 1)}) == VecSet{basis(3, 2)});
  CHECK(swap12.act(VecSet{}) == VecSet{});

  Permutation ghost_apple = Permutation::transposition(3, 0, 1);
  VecSet moved = ghost_apple.act(canonical_set({basis(3, 0), basis(3, 2)}));
  CHECK(moved == canonical_set({basis(3, 1), basis(3, 2)}));
}

TEST_CASE("invalid mappings rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}

TEST_CASE("enumerate_orbit sizes") {
  Orbit six = enumerate_orbit(Vec{10, 5, 0}, ParameterDomain::all());
  CHECK(six.size() == 6);
  // Canonical ascending order, first and last elements pinned.
  CHECK(six.elements.front() == Vec{0, 5, 10});
  CHECK(six.elements.back() == Vec{10, 5, 0});

  CHECK(enumerate_orbit(Vec{1, 1, 1}, ParameterDomain::all()).size() == 1);
  CHECK(enumerate_orbit(Vec{1, 2, -3}, ParameterDomain::positive_orthant()).size() ==
        0);
}

TEST_CASE("enumerate_orbit bound refusal") {
  Vec big(13, 0.0);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = static_cast<double>(i);
  CHECK_THROWS_AS(enumerate_orbit(big, ParameterDomain::all()),
                  EnumerationBoundError);
}

TEST_CASE("enumerate_involutions counts") {
  CHECK(enumerate_involutions(1).size() == 1);
  CHECK(enumerate_involutions(2).size() == 2);
  CHECK(enumerate_involutions(4).size() == 10);  // telephone number T(4)
  CHECK(enumerate_involutions(6).size() == 76);
  for (const Permutation& phi : enumerate_involutions(5)) {
    CHECK(phi.is_involution());
  }
  CHECK_THROWS_AS(enumerate_involutions(11), EnumerationBoundError);
}

TEST_CASE("inverse round-trips vectors") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int d = rng.uniform_int(1, 7);
    std::vector<int> mapping(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) mapping[static_cast<std::size_t>(i)] = i;
    for (int i = d - 1; i > 0; --i) {
      std::swap(mapping[static_cast<std::size_t>(i)],
                mapping[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    }
    Permutation phi{mapping};
    Vec v(static_cast<std::size_t>(d));
    for (double& x : v) x = static_cast<double>(rng.uniform_int(-20, 20));
    CHECK(phi.inverse().act(phi.act(v)) == v);
    CHECK(phi.compose(phi.inverse()).is_identity());
  }
}

TEST_CASE("orbit elements preserve the entry multiset") {
  Orbit orbit = enumerate_orbit(Vec{3, 1, 4, 1}, ParameterDomain::all());
  Vec reference{1, 1, 3, 4};
  for (Vec v : orbit.elements) {
    std::sort(v.begin(), v.end());
    CHECK(v == reference);
  }
}

TEST_CASE("orbit size times stabilizer equals d!") {
  for (const Vec& v : {Vec{3, 1, 4, 1}, Vec{2, 2, 2, 7}, Vec{1, 2, 3, 4}}) {
    Orbit orbit = enumerate_orbit(v, ParameterDomain::all());
    std::size_t stabilizer = 0;
    for (const Permutation& phi : all_permutations(4)) {
      if (phi.act(v) == v) ++stabilizer;
    }
    CHECK(orbit.size() * stabilizer == 24);
  }
}

TEST_CASE("permutation action preserves dot products") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int d = rng.uniform_int(2, 8);
    auto perms = enumerate_involutions(d);
    const Permutation& phi =
        perms[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(perms.size()) - 1))];
    Vec x(static_cast<std::size_t>(d)), u(static_cast<std::size_t>(d));
    for (double& e : x) e = rng.uniform(-2.0, 2.0);
    for (double& e : u) e = rng.uniform(-2.0, 2.0);
    CHECK(dot(phi.act(x), phi.act(u)) == doctest::Approx(dot(x, u)).epsilon(1e-12));
  }
}

TEST_CASE("domain predicates") {
  auto positive_unique = ParameterDomain::positive_and_unique();
  CHECK(positive_unique.contains(Vec{1, 2, 3}));
  CHECK_FALSE(positive_unique.contains(Vec{1, 1, 3}));
  CHECK_FALSE(positive_unique.contains(Vec{0, 1, 2}));

  auto parsed = ParameterDomain::parse("positive-orthant&unique-entries");
  CHECK(parsed.contains(Vec{0.5, 2, 3}));
  CHECK_FALSE(parsed.contains(Vec{2, 2, 3}));
  CHECK(parsed.name() == "positive-orthant&unique-entries");
  CHECK_THROWS_AS(ParameterDomain::parse("bogus"), std::invalid_argument);
}

TEST_CASE("permutation parse/serialize round-trip") {
  Permutation phi({2, 0, 1, 3});
  CHECK(Permutation::parse(phi.to_string()) == phi);
}
