#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitcheck/bandit.hpp"
#include "orbitcheck/mdp.hpp"
#include "orbitcheck/outcomes.hpp"
#include "orbitcheck/scenario.hpp"
#include "orbitcheck/tables.hpp"
#include "orbitcheck/tendency.hpp"
#include "orbitcheck/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;

using orbitcheck::Vec;
using orbitcheck::VecSet;

Vec parse_csv_vector(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
  if (v.empty()) throw std::invalid_argument("empty vector argument");
  return v;
}

std::vector<int> parse_csv_indices(const std::string& text) {
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) idx.push_back(std::stoi(tok));
  return idx;
}

void print_tendency(const orbitcheck::OrbitTendencyReport& rep) {
  std::cout << "orbit of (" << orbitcheck::vec_to_string(rep.source)
            << "): size=" << rep.orbit_size << " B>A=" << rep.count_b_gt_a
            << " A>B=" << rep.count_a_gt_b << " ties=" << rep.count_tie
            << " -> " << (rep.holds ? "holds" : "refuted") << " at n="
            << rep.n_claimed << "\n";
}

int run_scenario_command(const std::string& config_path,
                         const std::string& builtin_name, bool has_seed,
                         std::uint64_t seed, const std::string& json_path) {
  orbitcheck::ScenarioConfig cfg;
  if (!builtin_name.empty()) {
    cfg = orbitcheck::builtin_scenario(builtin_name);
  } else {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file " << config_path << "\n";
      return kExitUsage;
    }
    cfg = orbitcheck::ScenarioConfig::parse(in);
  }
  orbitcheck::RunReport report =
      has_seed ? run_scenario(cfg, seed) : run_scenario(cfg);
  std::string json_text = report.to_json_string();
  if (!json_path.empty()) {
    if (json_path == "-") {
      std::cout << json_text;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << json_path << "\n";
        return kExitUsage;
      }
      out << json_text;
    }
  }
  std::cout << "scenario " << report.scenario_id << " (seed " << report.seed
            << "): " << report.verdict << "\n";
  for (const auto& check : report.checks) {
    std::string label = check.contains("rule")
                            ? check.at("rule").get<std::string>()
                            : check.at("check").get<std::string>();
    std::cout << "  [" << (check.at("holds").get<bool>() ? "ok" : "FAIL")
              << "] " << label << "\n";
  }
  return report.holds() ? kExitOk : kExitRefuted;
}

int run_orbit_check(const std::string& vector_text, const std::string& a_text,
                    const std::string& b_text, const std::string& rule_text,
                    long n, const std::string& domain_name, std::uint64_t seed) {
  Vec theta = parse_csv_vector(vector_text);
  const std::size_t d = theta.size();
  VecSet C;
  for (std::size_t i = 0; i < d; ++i) C.push_back(orbitcheck::basis(d, i));
  C = orbitcheck::canonical_set(std::move(C));
  auto build_set = [&](const std::string& text) {
    VecSet xs;
    for (int idx : parse_csv_indices(text)) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= d) {
        throw std::invalid_argument("outcome index out of range: " +
                                    std::to_string(idx));
      }
      xs.push_back(orbitcheck::basis(d, static_cast<std::size_t>(idx)));
    }
    return orbitcheck::canonical_set(std::move(xs));
  };
  VecSet A = build_set(a_text);
  VecSet B = build_set(b_text);
  orbitcheck::DecisionRule rule = orbitcheck::DecisionRule::parse(rule_text);
  rule.seed = seed;
  orbitcheck::DecisionFn f = rule.kind == orbitcheck::RuleKind::kNumerical
                                 ? orbitcheck::bind_numerical(A)
                                 : orbitcheck::bind_rule(rule, C);
  auto domain = orbitcheck::ParameterDomain::parse(domain_name);
  auto report = orbitcheck::check_geq_most(f, A, B, theta, domain, n);
  print_tendency(report);
  return report.holds ? kExitOk : kExitRefuted;
}

int run_mdp_avgprob(const std::string& fixture_path, std::size_t samples,
                    std::uint64_t seed, std::string dprime_name,
                    std::string start_name, const std::string& sampler_name) {
  std::ifstream in(fixture_path);
  if (!in) {
    std::cerr << "error: cannot open fixture " << fixture_path << "\n";
    return kExitUsage;
  }
  orbitcheck::RewardlessMdp mdp = orbitcheck::RewardlessMdp::parse(in);
  if (start_name.empty()) start_name = mdp.state_names.front();
  if (dprime_name.empty()) {
    auto cycles = orbitcheck::one_cycle_states(mdp);
    if (cycles.terminal.empty()) {
      std::cerr << "error: no terminal state; pass --dprime explicitly\n";
      return kExitUsage;
    }
    dprime_name = mdp.state_names[static_cast<std::size_t>(cycles.terminal[0])];
  }
  int start = mdp.state_index(start_name);
  int dprime = mdp.state_index(dprime_name);
  orbitcheck::RewardSamplerSpec sampler{
      sampler_name == "iid-gaussian"
          ? orbitcheck::RewardSamplerSpec::Kind::kIidGaussian
          : orbitcheck::RewardSamplerSpec::Kind::kIidUniform01,
      seed};
  VecSet D = {orbitcheck::basis(mdp.num_states(),
                                static_cast<std::size_t>(dprime))};
  auto est = orbitcheck::avg_opt_probability(mdp, D, sampler, samples, start);
  std::cout << "avg-opt probability of {" << dprime_name << "} from "
            << start_name << ": " << est.value << " (95% CI [" << est.ci_low
            << ", " << est.ci_high << "], " << est.samples << " samples, "
            << est.ties_discarded << " ties discarded)\n";
  return kExitOk;
}

int run_bandit_verify(double eps, int trials, std::size_t runs,
                      std::uint64_t seed, const std::string& utilities_text) {
  orbitcheck::ScenarioConfig cfg = orbitcheck::builtin_scenario("bandit5");
  cfg.bandit->epsilon = eps;
  cfg.bandit->trials = trials;
  cfg.bandit_runs = runs;
  if (!utilities_text.empty()) {
    cfg.bandit->utilities = parse_csv_vector(utilities_text);
  }
  orbitcheck::RunReport report = run_scenario(cfg, seed);
  std::cout << report.to_json_string();
  return report.holds() ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitcheck: orbit-level decision tendency verifier"};
  app.set_version_flag("--version", orbitcheck::kToolVersion);
  app.require_subcommand(1);

  // scenario run / dump
  auto* scenario = app.add_subcommand("scenario", "run or inspect scenarios");
  scenario->require_subcommand(1);
  auto* run = scenario->add_subcommand("run", "run a scenario and report verdict");
  std::string config_path, builtin_name, json_path;
  std::uint64_t seed = 0;
  bool has_seed = false;
  run->add_option("--config", config_path, "scenario config file");
  run->add_option("--builtin", builtin_name, "builtin scenario name")
      ->check(CLI::IsMember(orbitcheck::builtin_scenario_names()));
  run->add_option("--seed", seed, "seed override")->each([&](const std::string&) {
    has_seed = true;
  });
  run->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* dump = scenario->add_subcommand("dump", "print a builtin scenario config");
  std::string dump_name;
  dump->add_option("--builtin", dump_name, "builtin scenario name")
      ->required()
      ->check(CLI::IsMember(orbitcheck::builtin_scenario_names()));

  // table
  auto* table = app.add_subcommand("table", "reproduce a reference table");
  std::string table_name, table_format = "text";
  table->add_option("id", table_name, "permute-states|rationalities|counterexample")
      ->required();
  table->add_option("--format", table_format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));

  // orbit check
  auto* orbit = app.add_subcommand("orbit", "orbit tendency checks");
  auto* orbit_check = orbit->add_subcommand("check", "check one orbit");
  std::string vec_text, a_text, b_text, rule_text, domain_name = "all";
  long n_claim = 1;
  std::uint64_t orbit_seed = 7;
  orbit_check->add_option("--vector", vec_text, "parameter vector, e.g. 10,5,0")
      ->required();
  orbit_check->add_option("--A", a_text, "A as outcome indices, e.g. 0")->required();
  orbit_check->add_option("--B", b_text, "B as outcome indices, e.g. 1,2")
      ->required();
  orbit_check->add_option("--rule", rule_text, "decision rule, e.g. frac-optimal")
      ->required();
  orbit_check->add_option("--n", n_claim, "claimed multiple")->required();
  orbit_check->add_option("--domain", domain_name, "parameter domain");
  orbit_check->add_option("--seed", orbit_seed, "seed for sampled rules");

  // mdp avgprob
  auto* mdp = app.add_subcommand("mdp", "MDP power-seeking checks");
  auto* avgprob = mdp->add_subcommand("avgprob", "average-optimality probability");
  std::string fixture_path, dprime_name, start_name, sampler_name = "iid-uniform-01";
  std::size_t mdp_samples = 10000;
  std::uint64_t mdp_seed = 7;
  avgprob->add_option("--fixture", fixture_path, "MDP fixture file")->required();
  avgprob->add_option("--samples", mdp_samples, "Monte Carlo samples");
  avgprob->add_option("--seed", mdp_seed, "sampler seed");
  avgprob->add_option("--dprime", dprime_name, "target state (default: first terminal)");
  avgprob->add_option("--start", start_name, "start state (default: first)");
  avgprob->add_option("--sampler", sampler_name, "iid-uniform-01|iid-gaussian")
      ->check(CLI::IsMember({"iid-uniform-01", "iid-gaussian"}));

  // bandit verify
  auto* bandit = app.add_subcommand("bandit", "bandit training checks");
  auto* verify = bandit->add_subcommand("verify", "run the bandit check suite");
  double eps = 0.2;
  int trials = 100;
  std::size_t runs = 10000;
  std::uint64_t bandit_seed = 7;
  std::string utilities_text;
  verify->add_option("--eps", eps, "exploration rate");
  verify->add_option("--trials", trials, "training trials");
  verify->add_option("--runs", runs, "Monte Carlo runs");
  verify->add_option("--seed", bandit_seed, "seed");
  verify->add_option("--utilities", utilities_text, "arm payoffs (default 10,5,0,2,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      if (config_path.empty() == builtin_name.empty()) {
        std::cerr << "error: pass exactly one of --config / --builtin\n";
        return kExitUsage;
      }
      return run_scenario_command(config_path, builtin_name, has_seed, seed,
                                  json_path);
    }
    if (dump->parsed()) {
      std::cout << orbitcheck::builtin_scenario(dump_name).serialize();
      return kExitOk;
    }
    if (table->parsed()) {
      auto id = orbitcheck::parse_table_id(table_name);
      auto format = table_format == "csv" ? orbitcheck::TableFormat::kCsv
                                          : orbitcheck::TableFormat::kText;
      std::cout << orbitcheck::reproduce_table(id, format);
      return kExitOk;
    }
    if (orbit_check->parsed()) {
      return run_orbit_check(vec_text, a_text, b_text, rule_text, n_claim,
                             domain_name, orbit_seed);
    }
    if (avgprob->parsed()) {
      return run_mdp_avgprob(fixture_path, mdp_samples, mdp_seed, dprime_name,
                             start_name, sampler_name);
    }
    if (verify->parsed()) {
      return run_bandit_verify(eps, trials, runs, bandit_seed, utilities_text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
