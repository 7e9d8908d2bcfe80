#pragma once

#include <vector>

#include "orbitcheck/vec.hpp"

namespace orbitcheck {

struct LpResult {
  enum class Status { kOptimal, kUnbounded, kInfeasible };
  Status status = Status::kInfeasible;
  double value = 0.0;
  Vec x;
};

/// Maximize c.x subject to A x <= b, x >= 0. Dense two-phase simplex in the
/// style of the KACTL codebook; adequate for the small feasibility problems
/// this library solves (tens of variables and constraints).
LpResult solve_lp(const std::vector<Vec>& A, const Vec& b, const Vec& c);

/// Maximum strict-domination margin of `x` against `competitors`:
///   max delta  s.t.  (x - x').r >= delta for all x',  |r|_inf <= 1.
/// Returns the optimal margin (0 when `competitors` is empty is not a valid
/// call; callers handle the empty case).
double strict_margin(const Vec& x, const std::vector<Vec>& competitors);

}  // namespace orbitcheck
