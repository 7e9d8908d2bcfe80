#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbitcheck/tendency.hpp"
#include "orbitcheck/vec.hpp"

namespace orbitcheck {

/// Finite MDP without a reward function: named states and actions plus a
/// per-(state, action) transition distribution over states.
struct RewardlessMdp {
  std::vector<std::string> state_names;
  std::vector<std::string> action_names;
  /// transition[s][a] is a probability vector over states.
  std::vector<std::vector<Vec>> transition;

  std::size_t num_states() const { return state_names.size(); }
  std::size_t num_actions() const { return action_names.size(); }

  /// Rows must be on the simplex within 1e-12.
  void validate() const;
  int state_index(const std::string& name) const;
  int action_index(const std::string& name) const;

  /// Text fixture format: a `states:` line, an `actions:` line, then one row
  /// per (state, action): `state action -> {state: prob, ...}`.
  static RewardlessMdp parse(std::istream& in);
  static RewardlessMdp parse_string(const std::string& text);
  std::string serialize() const;
};

/// Stationary deterministic policy: one action index per state.
using Policy = std::vector<int>;

struct VisitDistribution {
  int start = 0;
  double gamma = 0.0;
  Vec occupancy;  // sums to 1/(1-gamma)
};

/// Discounted expected state occupancy of `policy` from `s`, solved as the
/// linear fixed point x = e_s + gamma P^T x. The solve residual must be at
/// most 1e-10 (throws otherwise).
VisitDistribution visit_distribution(const RewardlessMdp& mdp, const Policy& policy,
                                     int s, double gamma);

/// Occupancy vectors over all deterministic policies, deduplicated by
/// rounding to 12 decimal digits. Refuses when |A|^|S| exceeds the budget.
VecSet enumerate_visit_set(const RewardlessMdp& mdp, int s, double gamma,
                           std::uint64_t budget = 1'000'000);

/// Long-run average state distribution of `policy` from `s`. Deterministic
/// dynamics follow the policy walk to its cycle (uniform over the cycle);
/// stochastic dynamics solve the stationary distribution of the single
/// reachable recurrent class, refusing multichain cases.
Vec rsd(const RewardlessMdp& mdp, const Policy& policy, int s);

VecSet rsd_set(const RewardlessMdp& mdp, int s, std::uint64_t budget = 1'000'000);

/// The recurrent state distributions that strictly maximize average reward
/// for some reward function: nondominated(rsd_set).
VecSet rsd_nd(const RewardlessMdp& mdp, int s, std::uint64_t budget = 1'000'000);

struct CycleStates {
  std::vector<int> one_cycle;  // states with some self-looping action
  std::vector<int> terminal;   // states where every action self-loops
};

CycleStates one_cycle_states(const RewardlessMdp& mdp);

/// True iff some element of D attains the maximum of rsd.reward over the
/// full RSD set.
bool average_optimal_check(const VecSet& rsd_set_at_s, const VecSet& D,
                           const Vec& reward);

/// IID continuous reward sampler (atomless marginals keep optimality ties
/// measure-zero).
struct RewardSamplerSpec {
  enum class Kind { kIidUniform01, kIidGaussian };
  Kind kind = Kind::kIidUniform01;
  std::uint64_t seed = 0;

  static RewardSamplerSpec uniform01(std::uint64_t seed) {
    return {Kind::kIidUniform01, seed};
  }
  static RewardSamplerSpec gaussian(std::uint64_t seed) {
    return {Kind::kIidGaussian, seed};
  }
};

Vec sample_reward(const RewardSamplerSpec& sampler, std::size_t dim,
                  std::uint64_t sample_index);

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;   // 95% binomial CI
  double ci_high = 0.0;
  std::size_t samples = 0;
  std::size_t ties_discarded = 0;
};

/// Monte Carlo estimate of the probability (over sampled rewards) that D
/// contains an average-optimal RSD at s. Samples where the argmax straddles
/// D and its complement are discarded and counted.
MonteCarloEstimate avg_opt_probability(const RewardlessMdp& mdp, const VecSet& D,
                                       const RewardSamplerSpec& sampler,
                                       std::size_t num_samples, int s);

/// For each sampled reward, enumerates the full S_|S| orbit and counts orbit
/// elements where D (resp. D') contains an average-optimal RSD, checking the
/// n-fold cardinality inequality per orbit. Requires |S| <= 8.
std::vector<OrbitTendencyReport> orbit_avgprob_check(
    const RewardlessMdp& mdp, const VecSet& d_prime, const VecSet& D, long n,
    const RewardSamplerSpec& sampler, std::size_t num_reward_orbits, int s);

}  // namespace orbitcheck
