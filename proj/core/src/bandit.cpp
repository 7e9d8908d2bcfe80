#include "orbitcheck/bandit.hpp"

#include <algorithm>
#include <cmath>

#include "orbitcheck/parallel.hpp"
#include "orbitcheck/permutation.hpp"
#include "orbitcheck/rng.hpp"

namespace orbitcheck {

void BanditSpec::validate() const {
  if (utilities.size() != kBanditArms) {
    throw std::invalid_argument("bandit spec needs exactly 5 arm utilities");
  }
  if (q_init.size() != kBanditArms) {
    throw std::invalid_argument("bandit q_init needs exactly 5 entries");
  }
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  require_finite(utilities, "bandit utilities");
}

namespace {

int pick_uniform_argmax(const Vec& values, Rng& rng) {
  double best = *std::max_element(values.begin(), values.end());
  int ties = 0;
  int chosen = 0;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)] == best) {
      // Reservoir-style uniform pick among ties.
      ++ties;
      if (rng.uniform_int(1, ties) == 1) chosen = i;
    }
  }
  return chosen;
}

}  // namespace

TrainOutcome train(const BanditSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  Vec q = spec.q_init;
  for (int t = 0; t < spec.trials; ++t) {
    int greedy = pick_uniform_argmax(q, rng);
    int arm;
    if (rng.uniform01() < 1.0 - spec.epsilon) {
      arm = greedy;
    } else {
      // Explore uniformly among the four non-greedy arms.
      int slot = rng.uniform_int(0, kBanditArms - 2);
      arm = slot >= greedy ? slot + 1 : slot;
    }
    q[static_cast<std::size_t>(arm)] = spec.utilities[static_cast<std::size_t>(arm)];
  }
  TrainOutcome out;
  out.learned_values = q;
  out.exploitation_policy.assign(kBanditArms, 0.0);
  double best = *std::max_element(q.begin(), q.end());
  int ties = 0;
  for (double v : q) ties += v == best ? 1 : 0;
  for (int i = 0; i < kBanditArms; ++i) {
    if (q[static_cast<std::size_t>(i)] == best) {
      out.exploitation_policy[static_cast<std::size_t>(i)] = 1.0 / ties;
    }
  }
  return out;
}

namespace {

BanditEstimate summarize(const Vec& per_run_mass) {
  BanditEstimate est;
  est.runs = per_run_mass.size();
  double sum = 0.0, sum_sq = 0.0;
  for (double v : per_run_mass) {
    sum += v;
    sum_sq += v * v;
  }
  double n = static_cast<double>(est.runs);
  est.value = sum / n;
  double var = std::max(0.0, sum_sq / n - est.value * est.value);
  est.std_error = std::sqrt(var / n);
  est.ci_low = std::max(0.0, est.value - 1.96 * est.std_error);
  est.ci_high = std::min(1.0, est.value + 1.96 * est.std_error);
  return est;
}

}  // namespace

BanditEstimate p_train_estimate(const BanditSpec& spec,
                                const std::vector<int>& arm_subset,
                                std::size_t num_runs, std::uint64_t seed) {
  spec.validate();
  if (num_runs < 1) throw std::invalid_argument("num_runs must be >= 1");
  for (int arm : arm_subset) {
    if (arm < 0 || arm >= kBanditArms) {
      throw std::invalid_argument("arm index out of range");
    }
  }
  Vec mass(num_runs, 0.0);
  parallel_for(num_runs, [&](std::size_t run) {
    TrainOutcome outcome = train(spec, mix_seed(seed, run));
    double m = 0.0;
    for (int arm : arm_subset) {
      m += outcome.exploitation_policy[static_cast<std::size_t>(arm)];
    }
    mass[run] = m;
  });
  return summarize(mass);
}

std::array<BanditEstimate, kBanditArms> arm_frequencies(const BanditSpec& spec,
                                                        std::size_t num_runs,
                                                        std::uint64_t seed) {
  spec.validate();
  std::vector<Vec> policy(num_runs);
  parallel_for(num_runs, [&](std::size_t run) {
    policy[run] = train(spec, mix_seed(seed, run)).exploitation_policy;
  });
  std::array<BanditEstimate, kBanditArms> out;
  Vec column(num_runs);
  for (int arm = 0; arm < kBanditArms; ++arm) {
    for (std::size_t run = 0; run < num_runs; ++run) {
      column[run] = policy[run][static_cast<std::size_t>(arm)];
    }
    out[static_cast<std::size_t>(arm)] = summarize(column);
  }
  return out;
}

BanditRetargetReport bandit_retarget_check(const BanditSpec& spec,
                                           std::size_t num_runs,
                                           std::uint64_t seed) {
  spec.validate();
  const Vec& u = spec.utilities;
  double top = *std::max_element(u.begin(), u.end());
  if (std::count(u.begin(), u.end(), top) != 1) {
    throw std::invalid_argument(
        "bandit_retarget_check: utilities must have a unique maximum");
  }

  BanditRetargetReport report;
  report.p_a = p_train_estimate(spec, {0}, num_runs, mix_seed(seed, 1000));
  report.p_b = p_train_estimate(spec, {1, 2, 3, 4}, num_runs, mix_seed(seed, 1001));
  report.antecedent_holds =
      report.p_a.value - 3.0 * report.p_a.std_error >
      report.p_b.value + 3.0 * report.p_b.std_error;
  if (!report.antecedent_holds) {
    report.witness = "antecedent p(A|u) > p(B|u) not established; check is vacuous";
    return report;
  }

  // Swaps arm1 <-> arm_i for i = 2..5.
  for (int i = 1; i < kBanditArms; ++i) {
    Permutation phi = Permutation::transposition(kBanditArms, 0, i);
    BanditSpec moved = spec;
    moved.utilities = phi.act(u);
    auto freqs = arm_frequencies(moved, num_runs,
                                 mix_seed(seed, 2000 + static_cast<std::uint64_t>(i)));
    double pa = freqs[0].value;
    double pa_se = freqs[0].std_error;
    double pb = 1.0 - pa;
    if (!(pa + 3.0 * pa_se < pb - 3.0 * pa_se)) {
      report.flips_all = false;
      report.witness = "swap 1<->" + std::to_string(i + 1) +
                       " did not flip the preference to B";
    }
    report.retargeted.push_back(freqs);
  }

  // Distinctness: under swap i the mass concentrates on arm i, so comparing
  // arm-i frequencies across swaps separates every pair.
  for (std::size_t i = 0; i < report.retargeted.size() && report.images_distinct;
       ++i) {
    for (std::size_t j = i + 1; j < report.retargeted.size(); ++j) {
      int arm = static_cast<int>(i) + 1;
      const BanditEstimate& fi = report.retargeted[i][static_cast<std::size_t>(arm)];
      const BanditEstimate& fj = report.retargeted[j][static_cast<std::size_t>(arm)];
      double gap = std::abs(fi.value - fj.value);
      if (!(gap > 3.0 * (fi.std_error + fj.std_error))) {
        report.images_distinct = false;
        report.witness = "retargeted distributions for swaps " +
                         std::to_string(i + 2) + " and " + std::to_string(j + 2) +
                         " are not distinguishable";
        break;
      }
    }
  }
  return report;
}

}  // namespace orbitcheck
