#pragma once

#include "orbitcheck/rng.hpp"
#include "orbitcheck/vec.hpp"

namespace orbitcheck::testing {

/// Brute-force oracle for the nondominated set: draws random linear
/// functionals on [-1, 1]^d and records every element that wins a strict
/// argmax. Anything this oracle certifies must be kept by the LP route;
/// it may itself miss winners with tiny witness cones.
inline VecSet sampling_oracle(const VecSet& X, std::size_t num_samples,
                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<bool> winner(X.size(), false);
  const std::size_t d = X.front().size();
  for (std::size_t s = 0; s < num_samples; ++s) {
    Vec r(d);
    for (double& x : r) x = rng.uniform(-1.0, 1.0);
    std::size_t best = 0;
    double best_val = dot(X[0], r);
    bool tie = false;
    for (std::size_t i = 1; i < X.size(); ++i) {
      double v = dot(X[i], r);
      if (v > best_val) {
        best = i;
        best_val = v;
        tie = false;
      } else if (v == best_val) {
        tie = true;
      }
    }
    if (!tie) winner[best] = true;
  }
  VecSet out;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (winner[i]) out.push_back(X[i]);
  }
  return out;
}

}  // namespace orbitcheck::testing
