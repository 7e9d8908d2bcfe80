#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orbitcheck/vec.hpp"

namespace orbitcheck {

inline constexpr int kBanditArms = 5;

/// Epsilon-greedy training on five deterministic arms with learning rate 1
/// (each observation overwrites the arm's value estimate).
struct BanditSpec {
  Vec utilities;                 // length 5, deterministic payoffs
  double epsilon = 0.2;          // in (0, 1)
  int trials = 100;              // T >= 1
  Vec q_init = Vec(kBanditArms, 0.0);

  void validate() const;
};

struct TrainOutcome {
  Vec exploitation_policy;  // greedy over learned values, ties uniform
  Vec learned_values;
};

/// Runs `trials` rounds: with probability 1 - epsilon pull the current greedy
/// arm (uniform among value ties), otherwise pull one of the other four arms
/// uniformly. Returns the greedy-with-uniform-ties exploitation policy.
TrainOutcome train(const BanditSpec& spec, std::uint64_t seed);

struct BanditEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;  // 95% CI
  double ci_high = 0.0;
  std::size_t runs = 0;
};

/// Monte Carlo mean of the exploitation-policy mass on the arm subset X over
/// independently seeded runs.
BanditEstimate p_train_estimate(const BanditSpec& spec,
                                const std::vector<int>& arm_subset,
                                std::size_t num_runs, std::uint64_t seed);

/// Mean per-arm exploitation mass over seeded runs (column i = arm i).
std::array<BanditEstimate, kBanditArms> arm_frequencies(const BanditSpec& spec,
                                                        std::size_t num_runs,
                                                        std::uint64_t seed);

/// Statistical check that training is 4-fold retargetable from A = {arm 1}
/// to B = {arms 2..5} via the swaps arm1 <-> arm_i. Rejects utility vectors
/// without a unique maximum.
struct BanditRetargetReport {
  bool antecedent_holds = false;   // p(A|u) > p(B|u) beyond 3 sigma
  bool flips_all = true;           // every swap makes B win beyond 3 sigma
  bool images_distinct = true;     // retargeted arm distributions pairwise differ
  BanditEstimate p_a;              // mass on A under u
  BanditEstimate p_b;              // mass on B under u
  std::vector<std::array<BanditEstimate, kBanditArms>> retargeted;  // per swap
  std::string witness;

  /// Vacuously true when the antecedent fails.
  bool passes() const {
    return !antecedent_holds || (flips_all && images_distinct);
  }
};

BanditRetargetReport bandit_retarget_check(const BanditSpec& spec,
                                           std::size_t num_runs,
                                           std::uint64_t seed);

}  // namespace orbitcheck
