#include <benchmark/benchmark.h>

#include "orbitcheck/bandit.hpp"
#include "orbitcheck/mdp.hpp"
#include "orbitcheck/outcomes.hpp"
#include "orbitcheck/scenario.hpp"
#include "orbitcheck/tendency.hpp"

using namespace orbitcheck;

namespace {

VecSet basis_all(std::size_t d) {
  VecSet xs;
  for (std::size_t i = 0; i < d; ++i) xs.push_back(basis(d, i));
  return canonical_set(std::move(xs));
}

void BM_EnumerateOrbit(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Vec theta(d);
  for (std::size_t i = 0; i < d; ++i) theta[i] = static_cast<double>(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_orbit(theta, ParameterDomain::all()));
  }
}
BENCHMARK(BM_EnumerateOrbit)->Arg(5)->Arg(7)->Arg(8);

void BM_CheckGeqMost(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  VecSet C = basis_all(d);
  VecSet A = {basis(d, 0)};
  VecSet B = set_minus(C, A);
  DecisionFn f = bind_rule(DecisionRule::parse("frac-optimal"), C);
  Vec theta(d);
  for (std::size_t i = 0; i < d; ++i) theta[i] = static_cast<double>(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_geq_most(f, A, B, theta,
                                            ParameterDomain::all(),
                                            static_cast<long>(d) - 1));
  }
}
BENCHMARK(BM_CheckGeqMost)->Arg(3)->Arg(5)->Arg(6);

void BM_Boltzmann(benchmark::State& state) {
  VecSet C = basis_all(6);
  VecSet X = canonical_set({basis(6, 1), basis(6, 3)});
  Vec u{3, 1, 4, 1, 5, 9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(boltzmann(X, C, u, 1.0));
  }
}
BENCHMARK(BM_Boltzmann);

void BM_Quantilize(benchmark::State& state) {
  VecSet C = basis_all(6);
  VecSet X = canonical_set({basis(6, 1), basis(6, 3)});
  Vec u{3, 1, 4, 1, 5, 9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantilize(X, C, u, 0.5));
  }
}
BENCHMARK(BM_Quantilize);

void BM_Nondominated(benchmark::State& state) {
  VecSet X;
  const std::size_t d = 4;
  for (int i = 0; i < 8; ++i) {
    Vec v(d);
    for (std::size_t j = 0; j < d; ++j) {
      v[j] = static_cast<double>((i * 7 + static_cast<int>(j) * 3) % 11) / 2.0;
    }
    X.push_back(std::move(v));
  }
  X = canonical_set(std::move(X));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nondominated(X));
  }
}
BENCHMARK(BM_Nondominated);

void BM_RsdSet(benchmark::State& state) {
  RewardlessMdp mdp = *builtin_scenario("toy-mdp").mdp;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsd_set(mdp, 0));
  }
}
BENCHMARK(BM_RsdSet);

void BM_FindCopies(benchmark::State& state) {
  RewardlessMdp mdp = *builtin_scenario("toy-mdp").mdp;
  VecSet rsds = rsd_set(mdp, 0);
  VecSet d_prime = {basis(7, 1)};
  VecSet D = set_minus(rsds, d_prime);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_copies(d_prime, D, 3));
  }
}
BENCHMARK(BM_FindCopies);

void BM_BanditTrain(benchmark::State& state) {
  BanditSpec spec;
  spec.utilities = {10, 5, 0, 2, 1};
  spec.epsilon = 0.2;
  spec.trials = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(train(spec, seed++));
  }
}
BENCHMARK(BM_BanditTrain)->Arg(100)->Arg(1000);

void BM_RewardOrbitCheck(benchmark::State& state) {
  RewardlessMdp mdp = *builtin_scenario("toy-mdp").mdp;
  VecSet rsds = rsd_set(mdp, 0);
  VecSet d_prime = {basis(7, 1)};
  VecSet D = set_minus(rsds, d_prime);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_avgprob_check(
        mdp, d_prime, D, 3, RewardSamplerSpec::uniform01(1), 5, 0));
  }
}
BENCHMARK(BM_RewardOrbitCheck);

}  // namespace

BENCHMARK_MAIN();
