#include <doctest.h>

#include "orbitcheck/linprog.hpp"

using namespace orbitcheck;

TEST_CASE("simple bounded LP") {
  // max x + y s.t. x <= 2, y <= 3, x + y <= 4.
  std::vector<Vec> A = {{1, 0}, {0, 1}, {1, 1}};
  Vec b = {2, 3, 4};
  Vec c = {1, 1};
  LpResult res = solve_lp(A, b, c);
  REQUIRE(res.status == LpResult::Status::kOptimal);
  CHECK(res.value == doctest::Approx(4.0));
}

TEST_CASE("unbounded LP") {
  // max x with y constrained only.
  std::vector<Vec> A = {{0, 1}};
  Vec b = {1};
  Vec c = {1, 0};
  CHECK(solve_lp(A, b, c).status == LpResult::Status::kUnbounded);
}

TEST_CASE("infeasible LP") {
  // x <= -1 with x >= 0 is empty.
  std::vector<Vec> A = {{1}};
  Vec b = {-1};
  Vec c = {1};
  CHECK(solve_lp(A, b, c).status == LpResult::Status::kInfeasible);
}

TEST_CASE("negative-b feasible LP needs phase one") {
  // max -x - y s.t. x + y >= 2 (as -x - y <= -2), x <= 5, y <= 5.
  std::vector<Vec> A = {{-1, -1}, {1, 0}, {0, 1}};
  Vec b = {-2, 5, 5};
  Vec c = {-1, -1};
  LpResult res = solve_lp(A, b, c);
  REQUIRE(res.status == LpResult::Status::kOptimal);
  CHECK(res.value == doctest::Approx(-2.0));
}

TEST_CASE("strict margin of basis vectors") {
  // e1 against e2: (e1 - e2).r maximized at r = (1, -1) giving margin 2.
  CHECK(strict_margin({1, 0}, {{0, 1}}) == doctest::Approx(2.0));
  // The midpoint of e1, e2 can never strictly beat both.
  double margin = strict_margin({0.5, 0.5}, {{1, 0}, {0, 1}});
  CHECK(margin <= 1e-9);
}

TEST_CASE("strict margin requires competitors") {
  CHECK_THROWS_AS(strict_margin({1, 0}, {}), std::invalid_argument);
}
