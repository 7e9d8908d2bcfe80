#include "orbitcheck/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitcheck/outcomes.hpp"
#include "orbitcheck/rng.hpp"
#include "orbitcheck/version.hpp"

namespace orbitcheck {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Vec parse_vec(const std::string& text, int line) {
  Vec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("config line " + std::to_string(line) +
                                  ": bad numeric entry '" + tok + "'");
    }
  }
  if (v.empty()) {
    throw std::invalid_argument("config line " + std::to_string(line) +
                                ": empty vector");
  }
  return v;
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) names.push_back(tok);
  }
  return names;
}

[[noreturn]] void config_fail(int line, const std::string& msg) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

}  // namespace

ScenarioConfig ScenarioConfig::parse(std::istream& in) {
  ScenarioConfig cfg;
  std::string section;
  std::string line;
  int lineno = 0;
  std::vector<std::string> mdp_states, mdp_actions, mdp_rows;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') config_fail(lineno, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) config_fail(lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) config_fail(lineno, "empty key");

    if (section == "scenario") {
      if (key == "id") {
        cfg.id = value;
      } else if (key == "kind") {
        if (value == "orbit") {
          cfg.kind = ScenarioKind::kOrbit;
        } else if (value == "mdp") {
          cfg.kind = ScenarioKind::kMdp;
        } else if (value == "bandit") {
          cfg.kind = ScenarioKind::kBandit;
        } else {
          config_fail(lineno, "unknown kind '" + value + "'");
        }
      } else if (key == "dimension") {
        cfg.dimension = std::stoi(value);
      } else if (key == "domain") {
        try {
          cfg.domain = ParameterDomain::parse(value);
        } catch (const std::invalid_argument& e) {
          config_fail(lineno, e.what());
        }
      } else if (key == "n") {
        cfg.n = std::stol(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else {
        config_fail(lineno, "unknown [scenario] key '" + key + "'");
      }
    } else if (section == "outcomes") {
      cfg.outcomes.emplace_back(key, parse_vec(value, lineno));
    } else if (section == "sets") {
      cfg.sets.emplace_back(key, parse_name_list(value));
    } else if (section == "rules") {
      if (key != "rule") config_fail(lineno, "expected rule = <kind ...>");
      try {
        cfg.rules.push_back(DecisionRule::parse(value));
      } catch (const std::invalid_argument& e) {
        config_fail(lineno, e.what());
      }
    } else if (section == "thetas") {
      if (key == "fixed") {
        cfg.fixed_theta = parse_vec(value, lineno);
      } else if (key == "grid_low") {
        cfg.sampling.grid_low = std::stoi(value);
        cfg.use_sampling = true;
      } else if (key == "grid_high") {
        cfg.sampling.grid_high = std::stoi(value);
        cfg.use_sampling = true;
      } else if (key == "samples") {
        cfg.sampling.count = std::stoull(value);
        cfg.use_sampling = true;
      } else if (key == "curated") {
        cfg.sampling.include_curated = value == "true";
        cfg.use_sampling = true;
      } else {
        config_fail(lineno, "unknown [thetas] key '" + key + "'");
      }
    } else if (section == "certificate") {
      if (key != "phi") config_fail(lineno, "expected phi = <mapping>");
      try {
        cfg.certificate.push_back(Permutation::parse(value));
      } catch (const std::exception& e) {
        config_fail(lineno, e.what());
      }
    } else if (section == "mdp") {
      if (key == "states") {
        std::stringstream ss(value);
        std::string tok;
        while (ss >> tok) mdp_states.push_back(tok);
      } else if (key == "actions") {
        std::stringstream ss(value);
        std::string tok;
        while (ss >> tok) mdp_actions.push_back(tok);
      } else if (key == "row") {
        mdp_rows.push_back(value);
      } else if (key == "start") {
        cfg.mdp_start = value;
      } else if (key == "dprime") {
        cfg.mdp_dprime = value;
      } else if (key == "sampler") {
        if (value != "iid-uniform-01" && value != "iid-gaussian") {
          config_fail(lineno, "unknown sampler '" + value + "'");
        }
        cfg.mdp_sampler = value;
      } else if (key == "orbit_samples") {
        cfg.mdp_orbit_samples = std::stoull(value);
      } else if (key == "mc_samples") {
        cfg.mdp_mc_samples = std::stoull(value);
      } else {
        config_fail(lineno, "unknown [mdp] key '" + key + "'");
      }
    } else if (section == "bandit") {
      if (!cfg.bandit) cfg.bandit.emplace();
      if (key == "utilities") {
        cfg.bandit->utilities = parse_vec(value, lineno);
      } else if (key == "epsilon") {
        cfg.bandit->epsilon = std::stod(value);
      } else if (key == "trials") {
        cfg.bandit->trials = std::stoi(value);
      } else if (key == "q_init") {
        cfg.bandit->q_init = parse_vec(value, lineno);
      } else if (key == "runs") {
        cfg.bandit_runs = std::stoull(value);
      } else {
        config_fail(lineno, "unknown [bandit] key '" + key + "'");
      }
    } else if (section.empty()) {
      config_fail(lineno, "key outside of any section");
    } else {
      config_fail(lineno, "unknown section [" + section + "]");
    }
  }

  if (!mdp_states.empty() || !mdp_actions.empty() || !mdp_rows.empty()) {
    std::string text = "states:";
    for (const auto& s : mdp_states) text += " " + s;
    text += "\nactions:";
    for (const auto& a : mdp_actions) text += " " + a;
    text += "\n";
    for (const auto& r : mdp_rows) text += r + "\n";
    cfg.mdp = RewardlessMdp::parse_string(text);
  }
  if (cfg.id.empty()) throw std::invalid_argument("config: missing scenario id");
  if (cfg.kind == ScenarioKind::kOrbit && cfg.outcomes.empty()) {
    throw std::invalid_argument("config: orbit scenario needs [outcomes]");
  }
  if (cfg.kind == ScenarioKind::kMdp && !cfg.mdp) {
    throw std::invalid_argument("config: mdp scenario needs [mdp]");
  }
  if (cfg.kind == ScenarioKind::kBandit && !cfg.bandit) {
    throw std::invalid_argument("config: bandit scenario needs [bandit]");
  }
  // Referenced set names must resolve.
  for (const auto& [name, members] : cfg.sets) {
    for (const auto& member : members) cfg.outcome(member);
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string ScenarioConfig::serialize() const {
  std::string out = "[scenario]\n";
  out += "id = " + id + "\n";
  out += "kind = ";
  out += kind == ScenarioKind::kOrbit ? "orbit"
         : kind == ScenarioKind::kMdp ? "mdp"
                                      : "bandit";
  out += "\n";
  if (dimension > 0) out += "dimension = " + std::to_string(dimension) + "\n";
  out += "domain = " + domain.name() + "\n";
  out += "n = " + std::to_string(n) + "\n";
  out += "seed = " + std::to_string(seed) + "\n";

  if (!outcomes.empty()) {
    out += "\n[outcomes]\n";
    for (const auto& [name, vec] : outcomes) {
      out += name + " = " + vec_to_string(vec) + "\n";
    }
  }
  if (!sets.empty()) {
    out += "\n[sets]\n";
    for (const auto& [name, members] : sets) {
      out += name + " = ";
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ", ";
        out += members[i];
      }
      out += "\n";
    }
  }
  if (!rules.empty()) {
    out += "\n[rules]\n";
    for (const DecisionRule& rule : rules) {
      out += "rule = " + rule.to_string() + "\n";
    }
  }
  if (fixed_theta || use_sampling) {
    out += "\n[thetas]\n";
    if (fixed_theta) out += "fixed = " + vec_to_string(*fixed_theta) + "\n";
    if (use_sampling) {
      out += "grid_low = " + std::to_string(sampling.grid_low) + "\n";
      out += "grid_high = " + std::to_string(sampling.grid_high) + "\n";
      out += "samples = " + std::to_string(sampling.count) + "\n";
      out += std::string("curated = ") +
             (sampling.include_curated ? "true" : "false") + "\n";
    }
  }
  if (!certificate.empty()) {
    out += "\n[certificate]\n";
    for (const Permutation& phi : certificate) {
      out += "phi = " + phi.to_string() + "\n";
    }
  }
  if (mdp) {
    out += "\n[mdp]\n";
    out += "states =";
    for (const auto& s : mdp->state_names) out += " " + s;
    out += "\nactions =";
    for (const auto& a : mdp->action_names) out += " " + a;
    out += "\n";
    for (std::size_t s = 0; s < mdp->num_states(); ++s) {
      for (std::size_t a = 0; a < mdp->num_actions(); ++a) {
        out += "row = " + mdp->state_names[s] + " " + mdp->action_names[a] + " -> {";
        bool first = true;
        for (std::size_t t = 0; t < mdp->num_states(); ++t) {
          double p = mdp->transition[s][a][t];
          if (p == 0.0) continue;
          if (!first) out += ", ";
          out += mdp->state_names[t] + ": " + format_double(p);
          first = false;
        }
        out += "}\n";
      }
    }
    if (!mdp_start.empty()) out += "start = " + mdp_start + "\n";
    out += "dprime = " + mdp_dprime + "\n";
    out += "sampler = " + mdp_sampler + "\n";
    out += "orbit_samples = " + std::to_string(mdp_orbit_samples) + "\n";
    out += "mc_samples = " + std::to_string(mdp_mc_samples) + "\n";
  }
  if (bandit) {
    out += "\n[bandit]\n";
    out += "utilities = " + vec_to_string(bandit->utilities) + "\n";
    out += "epsilon = " + format_double(bandit->epsilon) + "\n";
    out += "trials = " + std::to_string(bandit->trials) + "\n";
    out += "q_init = " + vec_to_string(bandit->q_init) + "\n";
    out += "runs = " + std::to_string(bandit_runs) + "\n";
  }
  return out;
}

const Vec& ScenarioConfig::outcome(const std::string& name) const {
  for (const auto& [outcome_name, vec] : outcomes) {
    if (outcome_name == name) return vec;
  }
  throw std::invalid_argument("unresolved outcome name: " + name);
}

VecSet ScenarioConfig::resolve_set(const std::string& name) const {
  for (const auto& [set_name, members] : sets) {
    if (set_name != name) continue;
    VecSet xs;
    for (const auto& member : members) xs.push_back(outcome(member));
    return canonical_set(std::move(xs));
  }
  throw std::invalid_argument("unresolved set name: " + name);
}

json RunReport::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["tool_version"] = tool_version;
  j["scenario"] = scenario_id;
  j["seed"] = seed;
  j["verdict"] = verdict;
  j["checks"] = checks;
  return j;
}

std::string RunReport::to_json_string() const { return to_json().dump(2) + "\n"; }

RunReport RunReport::from_json(const json& j) {
  RunReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.scenario_id = j.at("scenario").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.verdict = j.at("verdict").get<std::string>();
  r.checks = j.at("checks");
  return r;
}

namespace {

json tendency_json(const OrbitTendencyReport& r) {
  return json{{"theta", r.source},
              {"orbit_size", r.orbit_size},
              {"b_gt_a", r.count_b_gt_a},
              {"a_gt_b", r.count_a_gt_b},
              {"ties", r.count_tie},
              {"n", r.n_claimed},
              {"agreement", {r.agreement_num(), r.agreement_den()}},
              {"holds", r.holds}};
}

json estimate_json(const BanditEstimate& e) {
  return json{{"value", e.value},
              {"std_error", e.std_error},
              {"ci", {e.ci_low, e.ci_high}},
              {"runs", e.runs}};
}

RunReport run_orbit_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  RunReport report;
  const VecSet A = cfg.resolve_set("A");
  const VecSet B = cfg.resolve_set("B");
  const VecSet C = cfg.resolve_set("C");
  bool all_hold = true;

  for (const DecisionRule& base_rule : cfg.rules) {
    DecisionRule rule = base_rule;
    rule.seed = seed;
    DecisionFn f = rule.kind == RuleKind::kNumerical ? bind_numerical(A)
                                                     : bind_rule(rule, C);
    json entry;
    entry["rule"] = rule.to_string();
    entry["n"] = cfg.n;
    bool rule_holds = true;

    if (cfg.fixed_theta) {
      OrbitTendencyReport rep =
          check_geq_most(f, A, B, *cfg.fixed_theta, cfg.domain, cfg.n);
      entry["fixed"] = tendency_json(rep);
      rule_holds = rule_holds && rep.holds;
    }
    if (cfg.use_sampling) {
      SampledTendencyResult res = check_geq_most_sampled(
          f, A, B, cfg.domain, cfg.n, cfg.dimension, cfg.sampling, seed);
      json sampled;
      sampled["orbits"] = res.reports.size();
      sampled["violations"] = res.violations.size();
      sampled["all_hold"] = res.all_hold;
      if (!res.all_hold) {
        sampled["first_violation"] = tendency_json(res.reports[res.violations[0]]);
      }
      entry["sampled"] = sampled;
      rule_holds = rule_holds && res.all_hold;
    }
    if (!cfg.certificate.empty()) {
      RetargetCertificate cert(cfg.certificate);
      std::vector<Vec> cert_thetas;
      if (cfg.fixed_theta) cert_thetas.push_back(*cfg.fixed_theta);
      if (cfg.use_sampling) {
        ThetaSampleSpec capped = cfg.sampling;
        capped.count = std::min<std::size_t>(capped.count, 20);
        for (Vec& t : sample_thetas(cfg.dimension, capped, seed)) {
          cert_thetas.push_back(std::move(t));
        }
      }
      bool conditions_ok = true, theorem_ok = true;
      std::string witness;
      for (const Vec& theta : cert_thetas) {
        MultiRetargetReport mr =
            check_multi_retargetable(f, A, B, theta, cfg.domain, cert);
        if (!mr.all()) {
          conditions_ok = false;
          witness = mr.witness;
          break;
        }
        if (!verify_counting_theorem(f, A, B, theta, cfg.domain, cert)) {
          theorem_ok = false;
          witness = "counting conclusion failed at theta=" + vec_to_string(theta);
          break;
        }
      }
      json cert_entry;
      cert_entry["n"] = cert.n();
      cert_entry["thetas_checked"] = cert_thetas.size();
      cert_entry["conditions_hold"] = conditions_ok;
      cert_entry["theorem_holds"] = theorem_ok;
      if (!witness.empty()) cert_entry["witness"] = witness;
      entry["certificate"] = cert_entry;
      rule_holds = rule_holds && conditions_ok && theorem_ok;
    }
    entry["holds"] = rule_holds;
    all_hold = all_hold && rule_holds;
    report.checks.push_back(entry);
  }
  report.verdict = all_hold ? "holds" : "refuted";
  return report;
}

RunReport run_mdp_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  RunReport report;
  const RewardlessMdp& mdp = *cfg.mdp;
  mdp.validate();
  int start = mdp.state_index(cfg.mdp_start.empty() ? mdp.state_names.front()
                                                    : cfg.mdp_start);
  int dprime_state = mdp.state_index(cfg.mdp_dprime);
  VecSet rsds = rsd_set(mdp, start);
  Vec dprime_vec = basis(mdp.num_states(), static_cast<std::size_t>(dprime_state));
  if (!set_contains(rsds, dprime_vec)) {
    throw std::invalid_argument("dprime state does not induce a recurrent "
                                "state distribution from the start state");
  }
  VecSet d_prime = {dprime_vec};
  VecSet D = set_minus(rsds, d_prime);
  auto sampler_kind = cfg.mdp_sampler == "iid-gaussian"
                          ? RewardSamplerSpec::Kind::kIidGaussian
                          : RewardSamplerSpec::Kind::kIidUniform01;
  bool all_hold = true;

  {
    auto cert = find_copies(d_prime, D, static_cast<int>(cfg.n));
    bool ok = cert.has_value() && verify_copies(d_prime, D, *cert);
    json entry;
    entry["check"] = "copy-certificate";
    entry["n"] = cfg.n;
    entry["found"] = cert.has_value();
    if (cert) {
      json phis = json::array();
      for (const Permutation& phi : cert->involutions) phis.push_back(phi.to_string());
      entry["involutions"] = phis;
    }
    entry["holds"] = ok;
    report.checks.push_back(entry);
    all_hold = all_hold && ok;
  }
  {
    RewardSamplerSpec sampler{sampler_kind, mix_seed(seed, 1)};
    auto reports = orbit_avgprob_check(mdp, d_prime, D, cfg.n, sampler,
                                       cfg.mdp_orbit_samples, start);
    std::size_t violations = 0;
    json first_violation;
    for (const auto& r : reports) {
      if (!r.holds) {
        if (violations == 0) first_violation = tendency_json(r);
        ++violations;
      }
    }
    json entry;
    entry["check"] = "orbit-counting";
    entry["n"] = cfg.n;
    entry["orbits"] = reports.size();
    entry["violations"] = violations;
    if (violations > 0) entry["first_violation"] = first_violation;
    entry["holds"] = violations == 0;
    report.checks.push_back(entry);
    all_hold = all_hold && violations == 0;
  }
  {
    RewardSamplerSpec sampler{sampler_kind, mix_seed(seed, 2)};
    MonteCarloEstimate est =
        avg_opt_probability(mdp, d_prime, sampler, cfg.mdp_mc_samples, start);
    double bound = 1.0 / static_cast<double>(cfg.n + 1);
    bool ok = est.value <= bound + 3.0 * est.std_error;
    json entry;
    entry["check"] = "avg-opt-probability";
    entry["value"] = est.value;
    entry["std_error"] = est.std_error;
    entry["ci"] = {est.ci_low, est.ci_high};
    entry["bound"] = bound;
    entry["samples"] = est.samples;
    entry["ties_discarded"] = est.ties_discarded;
    entry["holds"] = ok;
    report.checks.push_back(entry);
    all_hold = all_hold && ok;
  }
  report.verdict = all_hold ? "holds" : "refuted";
  return report;
}

RunReport run_bandit_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  RunReport report;
  const BanditSpec& spec = *cfg.bandit;
  spec.validate();
  bool all_hold = true;

  {
    auto best = std::max_element(spec.utilities.begin(), spec.utilities.end());
    int best_arm = static_cast<int>(best - spec.utilities.begin());
    double bound =
        1.0 - std::pow(1.0 - spec.epsilon / 4.0, static_cast<double>(spec.trials));
    BanditEstimate est =
        p_train_estimate(spec, {best_arm}, cfg.bandit_runs, mix_seed(seed, 1));
    bool ok = est.value >= bound - 3.0 * est.std_error;
    json entry;
    entry["check"] = "optimal-arm-frequency";
    entry["arm"] = best_arm;
    entry["bound"] = bound;
    entry["estimate"] = estimate_json(est);
    entry["holds"] = ok;
    report.checks.push_back(entry);
    all_hold = all_hold && ok;
  }
  {
    BanditRetargetReport rep =
        bandit_retarget_check(spec, cfg.bandit_runs, mix_seed(seed, 2));
    json entry;
    entry["check"] = "retargetability";
    entry["antecedent_holds"] = rep.antecedent_holds;
    entry["flips_all"] = rep.flips_all;
    entry["images_distinct"] = rep.images_distinct;
    entry["p_a"] = estimate_json(rep.p_a);
    entry["p_b"] = estimate_json(rep.p_b);
    if (!rep.witness.empty()) entry["witness"] = rep.witness;
    entry["holds"] = rep.passes();
    report.checks.push_back(entry);
    all_hold = all_hold && rep.passes();
  }
  {
    BanditSpec control = spec;
    control.utilities.assign(kBanditArms, 1.0);
    auto freqs = arm_frequencies(control, cfg.bandit_runs, mix_seed(seed, 3));
    bool ok = true;
    json freq_list = json::array();
    for (const BanditEstimate& f : freqs) {
      ok = ok && std::abs(f.value - 0.2) <= 3.0 * f.std_error + 1e-12;
      freq_list.push_back(estimate_json(f));
    }
    json entry;
    entry["check"] = "uniform-control";
    entry["expected"] = 0.2;
    entry["frequencies"] = freq_list;
    entry["holds"] = ok;
    report.checks.push_back(entry);
    all_hold = all_hold && ok;
  }
  report.verdict = all_hold ? "holds" : "refuted";
  return report;
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& config, std::uint64_t seed_override) {
  RunReport report;
  switch (config.kind) {
    case ScenarioKind::kOrbit:
      report = run_orbit_scenario(config, seed_override);
      break;
    case ScenarioKind::kMdp:
      report = run_mdp_scenario(config, seed_override);
      break;
    case ScenarioKind::kBandit:
      report = run_bandit_scenario(config, seed_override);
      break;
  }
  report.schema_version = kReportSchemaVersion;
  report.tool_version = kToolVersion;
  report.scenario_id = config.id;
  report.seed = seed_override;
  return report;
}

RunReport run_scenario(const ScenarioConfig& config) {
  return run_scenario(config, config.seed);
}

namespace {

ScenarioConfig make_pacman3() {
  ScenarioConfig cfg;
  cfg.id = "pacman3";
  cfg.kind = ScenarioKind::kOrbit;
  cfg.dimension = 3;
  cfg.domain = ParameterDomain::all();
  cfg.n = 2;
  cfg.seed = 7;
  cfg.outcomes = {{"ghost", {1, 0, 0}}, {"apple", {0, 1, 0}}, {"cherry", {0, 0, 1}}};
  cfg.sets = {{"A", {"ghost"}},
              {"B", {"apple", "cherry"}},
              {"C", {"ghost", "apple", "cherry"}}};
  for (const char* text :
       {"optimal-indicator", "frac-optimal", "anti-optimal-indicator",
        "boltzmann T=0.1", "boltzmann T=1", "boltzmann T=10", "satisficer t=-1",
        "satisficer t=3", "satisficer t=9", "best-of-k k=1", "best-of-k k=2",
        "best-of-k k=3", "quantilizer q=0.25", "quantilizer q=0.5",
        "quantilizer q=1"}) {
    cfg.rules.push_back(DecisionRule::parse(text));
  }
  cfg.fixed_theta = Vec{10, 5, 0};
  cfg.use_sampling = true;
  cfg.sampling = ThetaSampleSpec{-3, 10, 1000, true};
  return cfg;
}

ScenarioConfig make_mr_actions5() {
  ScenarioConfig cfg;
  cfg.id = "mr-actions5";
  cfg.kind = ScenarioKind::kOrbit;
  cfg.dimension = 5;
  cfg.domain = ParameterDomain::all();
  cfg.n = 4;
  cfg.seed = 7;
  cfg.outcomes = {{"down", {1, 0, 0, 0, 0}},
                  {"up", {0, 1, 0, 0, 0}},
                  {"left", {0, 0, 1, 0, 0}},
                  {"right", {0, 0, 0, 1, 0}},
                  {"jump", {0, 0, 0, 0, 1}}};
  cfg.sets = {{"A", {"down"}},
              {"B", {"up", "left", "right", "jump"}},
              {"C", {"down", "up", "left", "right", "jump"}}};
  cfg.rules.push_back(DecisionRule::parse("frac-optimal"));
  cfg.fixed_theta = Vec{10, 5, 0, 2, 1};
  cfg.use_sampling = true;
  cfg.sampling = ThetaSampleSpec{-3, 10, 300, true};
  for (int i = 1; i < 5; ++i) {
    cfg.certificate.push_back(Permutation::transposition(5, 0, i));
  }
  return cfg;
}

ScenarioConfig make_featurized4() {
  ScenarioConfig cfg;
  cfg.id = "featurized4";
  cfg.kind = ScenarioKind::kOrbit;
  cfg.dimension = 4;
  cfg.domain = ParameterDomain::positive_and_unique();
  cfg.n = 3;
  cfg.seed = 7;
  cfg.outcomes = {{"empty", {0, 0, 0, 0}},
                  {"key", {1, 0, 0, 0}},
                  {"sword", {0, 1, 0, 0}},
                  {"torch", {0, 0, 1, 0}},
                  {"amulet", {0, 0, 0, 1}}};
  cfg.sets = {{"A", {"key", "empty"}},
              {"B", {"sword", "torch", "amulet"}},
              {"C", {"empty", "key", "sword", "torch", "amulet"}}};
  cfg.rules.push_back(DecisionRule::parse("frac-optimal"));
  cfg.fixed_theta = Vec{4, 3, 2, 1};
  cfg.use_sampling = true;
  cfg.sampling = ThetaSampleSpec{1, 10, 300, true};
  return cfg;
}

ScenarioConfig make_toy_mdp() {
  ScenarioConfig cfg;
  cfg.id = "toy-mdp";
  cfg.kind = ScenarioKind::kMdp;
  cfg.n = 3;
  cfg.seed = 7;
  cfg.mdp = RewardlessMdp::parse_string(R"(
states: start up_stop left_mid left_stop right_mid right_stop_a right_stop_b
actions: a0 a1 a2
start a0 -> {up_stop: 1}
start a1 -> {left_mid: 1}
start a2 -> {right_mid: 1}
up_stop a0 -> {up_stop: 1}
up_stop a1 -> {up_stop: 1}
up_stop a2 -> {up_stop: 1}
left_mid a0 -> {left_stop: 1}
left_mid a1 -> {left_stop: 1}
left_mid a2 -> {left_stop: 1}
left_stop a0 -> {left_stop: 1}
left_stop a1 -> {left_stop: 1}
left_stop a2 -> {left_stop: 1}
right_mid a0 -> {right_stop_a: 1}
right_mid a1 -> {right_stop_b: 1}
right_mid a2 -> {right_stop_b: 1}
right_stop_a a0 -> {right_stop_a: 1}
right_stop_a a1 -> {right_stop_a: 1}
right_stop_a a2 -> {right_stop_a: 1}
right_stop_b a0 -> {right_stop_b: 1}
right_stop_b a1 -> {right_stop_b: 1}
right_stop_b a2 -> {right_stop_b: 1}
)");
  cfg.mdp_start = "start";
  cfg.mdp_dprime = "up_stop";
  cfg.mdp_sampler = "iid-uniform-01";
  cfg.mdp_orbit_samples = 200;
  cfg.mdp_mc_samples = 10000;
  return cfg;
}

ScenarioConfig make_bandit5() {
  ScenarioConfig cfg;
  cfg.id = "bandit5";
  cfg.kind = ScenarioKind::kBandit;
  cfg.seed = 7;
  cfg.bandit.emplace();
  cfg.bandit->utilities = {10, 5, 0, 2, 1};
  cfg.bandit->epsilon = 0.2;
  cfg.bandit->trials = 100;
  cfg.bandit_runs = 10000;
  return cfg;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  return {"pacman3", "mr-actions5", "featurized4", "toy-mdp", "bandit5"};
}

ScenarioConfig builtin_scenario(const std::string& name) {
  if (name == "pacman3") return make_pacman3();
  if (name == "mr-actions5") return make_mr_actions5();
  if (name == "featurized4") return make_featurized4();
  if (name == "toy-mdp") return make_toy_mdp();
  if (name == "bandit5") return make_bandit5();
  throw std::invalid_argument("unknown builtin scenario: " + name);
}

}  // namespace orbitcheck
