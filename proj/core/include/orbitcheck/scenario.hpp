#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitcheck/bandit.hpp"
#include "orbitcheck/mdp.hpp"
#include "orbitcheck/tendency.hpp"

namespace orbitcheck {

enum class ScenarioKind { kOrbit, kMdp, kBandit };

/// A reproducible scenario description, loadable from (and serializable back
/// to) a flat sectioned text format. Vectors are written as comma-separated
/// exact decimals so orbit deduplication stays exact.
struct ScenarioConfig {
  std::string id;
  ScenarioKind kind = ScenarioKind::kOrbit;
  std::uint64_t seed = 7;
  long n = 1;
  int dimension = 0;
  ParameterDomain domain = ParameterDomain::all();

  // orbit scenarios
  std::vector<std::pair<std::string, Vec>> outcomes;
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  std::vector<DecisionRule> rules;
  std::optional<Vec> fixed_theta;
  bool use_sampling = false;
  ThetaSampleSpec sampling;
  std::vector<Permutation> certificate;

  // mdp scenarios
  std::optional<RewardlessMdp> mdp;
  std::string mdp_start;
  std::string mdp_dprime;
  std::string mdp_sampler = "iid-uniform-01";
  std::size_t mdp_orbit_samples = 200;
  std::size_t mdp_mc_samples = 10000;

  // bandit scenarios
  std::optional<BanditSpec> bandit;
  std::size_t bandit_runs = 10000;

  static ScenarioConfig parse(std::istream& in);
  static ScenarioConfig parse_string(const std::string& text);
  std::string serialize() const;

  /// Resolves a set name from [sets] into canonical vectors.
  VecSet resolve_set(const std::string& name) const;
  const Vec& outcome(const std::string& name) const;
};

/// Machine-readable result of one scenario run. Serialization is
/// deterministic: identical (config, seed) inputs produce byte-identical
/// JSON regardless of thread count.
struct RunReport {
  int schema_version = 0;
  std::string tool_version;
  std::string scenario_id;
  std::uint64_t seed = 0;
  std::string verdict;  // "holds" | "refuted"
  nlohmann::json checks = nlohmann::json::array();

  bool holds() const { return verdict == "holds"; }
  nlohmann::json to_json() const;
  std::string to_json_string() const;
  static RunReport from_json(const nlohmann::json& j);
};

std::vector<std::string> builtin_scenario_names();
ScenarioConfig builtin_scenario(const std::string& name);

RunReport run_scenario(const ScenarioConfig& config);
RunReport run_scenario(const ScenarioConfig& config, std::uint64_t seed_override);

}  // namespace orbitcheck
