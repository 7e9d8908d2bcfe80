#include "orbitcheck/mdp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitcheck/outcomes.hpp"
#include "orbitcheck/parallel.hpp"
#include "orbitcheck/rng.hpp"

namespace orbitcheck {

namespace {

constexpr double kRowTol = 1e-12;

Vec round12(Vec v) {
  for (double& x : v) x = std::round(x * 1e12) / 1e12;
  return v;
}

void require_state(const RewardlessMdp& mdp, int s) {
  if (s < 0 || static_cast<std::size_t>(s) >= mdp.num_states()) {
    throw std::invalid_argument("state index out of range");
  }
}

void require_policy(const RewardlessMdp& mdp, const Policy& policy) {
  if (policy.size() != mdp.num_states()) {
    throw std::invalid_argument("policy must map every state");
  }
  for (int a : policy) {
    if (a < 0 || static_cast<std::size_t>(a) >= mdp.num_actions()) {
      throw std::invalid_argument("policy action index out of range");
    }
  }
}

std::uint64_t checked_policy_count(const RewardlessMdp& mdp, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t s = 0; s < mdp.num_states(); ++s) {
    count *= mdp.num_actions();
    if (count > budget) {
      throw EnumerationBoundError("policy enumeration budget exceeded");
    }
  }
  return count;
}

Policy nth_policy(const RewardlessMdp& mdp, std::uint64_t index) {
  Policy policy(mdp.num_states());
  for (std::size_t s = 0; s < mdp.num_states(); ++s) {
    policy[s] = static_cast<int>(index % mdp.num_actions());
    index /= mdp.num_actions();
  }
  return policy;
}

bool row_deterministic(const Vec& row, int* target) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] >= 1.0 - kRowTol) {
      *target = static_cast<int>(j);
      return true;
    }
  }
  return false;
}

}  // namespace

void RewardlessMdp::validate() const {
  if (state_names.empty() || action_names.empty()) {
    throw std::invalid_argument("MDP needs at least one state and action");
  }
  if (transition.size() != num_states()) {
    throw std::invalid_argument("transition table must cover every state");
  }
  for (std::size_t s = 0; s < num_states(); ++s) {
    if (transition[s].size() != num_actions()) {
      throw std::invalid_argument("transition table must cover every action of " +
                                  state_names[s]);
    }
    for (const Vec& row : transition[s]) {
      if (row.size() != num_states()) {
        throw std::invalid_argument("transition row has wrong dimension");
      }
      double sum = 0.0;
      for (double p : row) {
        if (p < -kRowTol) throw std::invalid_argument("negative probability");
        sum += p;
      }
      if (std::abs(sum - 1.0) > kRowTol) {
        throw std::invalid_argument("transition row does not sum to 1");
      }
    }
  }
}

int RewardlessMdp::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < state_names.size(); ++i) {
    if (state_names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown state: " + name);
}

int RewardlessMdp::action_index(const std::string& name) const {
  for (std::size_t i = 0; i < action_names.size(); ++i) {
    if (action_names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown action: " + name);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

RewardlessMdp RewardlessMdp::parse(std::istream& in) {
  RewardlessMdp mdp;
  std::string line;
  int lineno = 0;
  auto fail = [&lineno](const std::string& msg) {
    throw std::invalid_argument("mdp fixture line " + std::to_string(lineno) +
                                ": " + msg);
  };
  std::vector<std::vector<bool>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;

    if (line.rfind("states:", first) == first) {
      mdp.state_names = split_ws(line.substr(first + 7));
      if (mdp.state_names.empty()) fail("empty state list");
      continue;
    }
    if (line.rfind("actions:", first) == first) {
      mdp.action_names = split_ws(line.substr(first + 8));
      if (mdp.action_names.empty()) fail("empty action list");
      mdp.transition.assign(mdp.num_states(),
                            std::vector<Vec>(mdp.num_actions(),
                                             Vec(mdp.num_states(), 0.0)));
      seen.assign(mdp.num_states(),
                  std::vector<bool>(mdp.num_actions(), false));
      continue;
    }
    // Transition row: `state action -> {state: prob, ...}`.
    if (mdp.transition.empty()) fail("transition row before states:/actions:");
    auto arrow = line.find("->");
    if (arrow == std::string::npos) fail("expected `->`");
    auto head = split_ws(line.substr(0, arrow));
    if (head.size() != 2) fail("expected `state action` before `->`");
    int s, a;
    try {
      s = mdp.state_index(head[0]);
      a = mdp.action_index(head[1]);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
      throw;  // unreachable
    }
    auto open = line.find('{', arrow);
    auto close = line.find('}', arrow);
    if (open == std::string::npos || close == std::string::npos || close < open) {
      fail("expected `{state: prob, ...}`");
    }
    std::string body = line.substr(open + 1, close - open - 1);
    std::stringstream entries(body);
    std::string entry;
    Vec row(mdp.num_states(), 0.0);
    while (std::getline(entries, entry, ',')) {
      auto colon = entry.find(':');
      if (colon == std::string::npos) fail("expected `state: prob` in row body");
      auto name_toks = split_ws(entry.substr(0, colon));
      if (name_toks.size() != 1) fail("bad state name in row body");
      int target;
      try {
        target = mdp.state_index(name_toks[0]);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
        throw;
      }
      try {
        row[static_cast<std::size_t>(target)] = std::stod(entry.substr(colon + 1));
      } catch (const std::exception&) {
        fail("bad probability value");
      }
    }
    if (seen[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)]) {
      fail("duplicate transition row");
    }
    seen[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)] = true;
    mdp.transition[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)] =
        std::move(row);
  }
  for (std::size_t s = 0; s < seen.size(); ++s) {
    for (std::size_t a = 0; a < (seen.empty() ? 0 : seen[s].size()); ++a) {
      if (!seen[s][a]) {
        throw std::invalid_argument("missing transition row for " +
                                    mdp.state_names[s] + " " +
                                    mdp.action_names[a]);
      }
    }
  }
  mdp.validate();
  return mdp;
}

RewardlessMdp RewardlessMdp::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string RewardlessMdp::serialize() const {
  std::string out = "states:";
  for (const auto& s : state_names) out += " " + s;
  out += "\nactions:";
  for (const auto& a : action_names) out += " " + a;
  out += "\n";
  for (std::size_t s = 0; s < num_states(); ++s) {
    for (std::size_t a = 0; a < num_actions(); ++a) {
      out += state_names[s] + " " + action_names[a] + " -> {";
      bool first = true;
      for (std::size_t target = 0; target < num_states(); ++target) {
        double p = transition[s][a][target];
        if (p == 0.0) continue;
        if (!first) out += ", ";
        out += state_names[target] + ": " + format_double(p);
        first = false;
      }
      out += "}\n";
    }
  }
  return out;
}

VisitDistribution visit_distribution(const RewardlessMdp& mdp, const Policy& policy,
                                     int s, double gamma) {
  require_state(mdp, s);
  require_policy(mdp, policy);
  if (!(gamma >= 0.0) || gamma >= 1.0) {
    throw std::invalid_argument("gamma must be in [0, 1)");
  }
  const auto n = static_cast<Eigen::Index>(mdp.num_states());
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index from = 0; from < n; ++from) {
    const Vec& row =
        mdp.transition[static_cast<std::size_t>(from)]
                      [static_cast<std::size_t>(policy[static_cast<std::size_t>(from)])];
    for (Eigen::Index to = 0; to < n; ++to) {
      system(to, from) -= gamma * row[static_cast<std::size_t>(to)];
    }
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(s) = 1.0;
  Eigen::VectorXd x = system.partialPivLu().solve(rhs);
  double residual = (system * x - rhs).lpNorm<Eigen::Infinity>();
  if (residual > 1e-10) {
    throw std::runtime_error("visit distribution solve residual too large");
  }
  VisitDistribution out;
  out.start = s;
  out.gamma = gamma;
  out.occupancy.assign(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.occupancy[static_cast<std::size_t>(i)] = x(i);
  }
  return out;
}

VecSet enumerate_visit_set(const RewardlessMdp& mdp, int s, double gamma,
                           std::uint64_t budget) {
  mdp.validate();
  std::uint64_t count = checked_policy_count(mdp, budget);
  VecSet out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    out.push_back(
        round12(visit_distribution(mdp, nth_policy(mdp, idx), s, gamma).occupancy));
  }
  return canonical_set(std::move(out));
}

namespace {

// Recurrent classes of the policy chain restricted to states reachable from
// s: strongly-connected components with no outgoing edge.
std::vector<std::vector<int>> reachable_recurrent_classes(const RewardlessMdp& mdp,
                                                          const Policy& policy,
                                                          int s) {
  const int n = static_cast<int>(mdp.num_states());
  auto edge = [&](int from, int to) {
    return mdp.transition[static_cast<std::size_t>(from)]
                         [static_cast<std::size_t>(policy[static_cast<std::size_t>(from)])]
                         [static_cast<std::size_t>(to)] > kRowTol;
  };
  // Reachability closure.
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    std::vector<int> stack{i};
    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int to = 0; to < n; ++to) {
        if (edge(cur, to) && !reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(to)]) {
          reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(to)] = true;
          stack.push_back(to);
        }
      }
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (!reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]) continue;
    if (assigned[static_cast<std::size_t>(i)]) continue;
    // SCC containing i.
    std::vector<int> component;
    for (int j = 0; j < n; ++j) {
      if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        component.push_back(j);
      }
    }
    bool closed = true;
    for (int from : component) {
      for (int to = 0; to < n; ++to) {
        if (edge(from, to) &&
            !reach[static_cast<std::size_t>(to)][static_cast<std::size_t>(from)]) {
          closed = false;
        }
      }
    }
    for (int j : component) assigned[static_cast<std::size_t>(j)] = true;
    if (closed) classes.push_back(std::move(component));
  }
  return classes;
}

}  // namespace

Vec rsd(const RewardlessMdp& mdp, const Policy& policy, int s) {
  require_state(mdp, s);
  require_policy(mdp, policy);
  const std::size_t n = mdp.num_states();

  // Deterministic fast path: follow the walk to its cycle.
  bool deterministic = true;
  std::vector<int> next(n, -1);
  for (std::size_t from = 0; from < n; ++from) {
    int target;
    if (!row_deterministic(mdp.transition[from][static_cast<std::size_t>(policy[from])],
                           &target)) {
      deterministic = false;
      break;
    }
    next[from] = target;
  }
  if (deterministic) {
    std::vector<int> visit_order(n, -1);
    int step = 0;
    int cur = s;
    while (visit_order[static_cast<std::size_t>(cur)] < 0) {
      visit_order[static_cast<std::size_t>(cur)] = step++;
      cur = next[static_cast<std::size_t>(cur)];
    }
    // `cur` starts the cycle.
    Vec out(n, 0.0);
    int cycle_len = step - visit_order[static_cast<std::size_t>(cur)];
    int state = cur;
    for (int i = 0; i < cycle_len; ++i) {
      out[static_cast<std::size_t>(state)] = 1.0 / cycle_len;
      state = next[static_cast<std::size_t>(state)];
    }
    return out;
  }

  auto classes = reachable_recurrent_classes(mdp, policy, s);
  if (classes.size() != 1) {
    throw std::runtime_error(
        "rsd: multiple recurrent classes reachable from start state; only "
        "unichain policies are supported");
  }
  const std::vector<int>& cls = classes.front();
  const auto m = static_cast<Eigen::Index>(cls.size());
  // Stationary distribution: x^T P = x^T with sum(x) = 1 on the class.
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index col = 0; col < m; ++col) {
    const Vec& row = mdp.transition[static_cast<std::size_t>(cls[static_cast<std::size_t>(col)])]
                                   [static_cast<std::size_t>(policy[static_cast<std::size_t>(cls[static_cast<std::size_t>(col)])])];
    for (Eigen::Index r = 0; r < m; ++r) {
      system(r, col) = row[static_cast<std::size_t>(cls[static_cast<std::size_t>(r)])];
    }
    system(col, col) -= 1.0;
  }
  for (Eigen::Index col = 0; col < m; ++col) system(m - 1, col) = 1.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  rhs(m - 1) = 1.0;
  Eigen::VectorXd x = system.partialPivLu().solve(rhs);
  Vec out(n, 0.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])] =
        std::max(0.0, x(i));
  }
  return out;
}

VecSet rsd_set(const RewardlessMdp& mdp, int s, std::uint64_t budget) {
  mdp.validate();
  std::uint64_t count = checked_policy_count(mdp, budget);
  VecSet out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    out.push_back(round12(rsd(mdp, nth_policy(mdp, idx), s)));
  }
  return canonical_set(std::move(out));
}

VecSet rsd_nd(const RewardlessMdp& mdp, int s, std::uint64_t budget) {
  return nondominated(rsd_set(mdp, s, budget));
}

CycleStates one_cycle_states(const RewardlessMdp& mdp) {
  CycleStates out;
  for (std::size_t s = 0; s < mdp.num_states(); ++s) {
    bool any_loop = false, all_loop = true;
    for (std::size_t a = 0; a < mdp.num_actions(); ++a) {
      bool loops = mdp.transition[s][a][s] >= 1.0 - kRowTol;
      any_loop = any_loop || loops;
      all_loop = all_loop && loops;
    }
    if (any_loop) out.one_cycle.push_back(static_cast<int>(s));
    if (all_loop) out.terminal.push_back(static_cast<int>(s));
  }
  return out;
}

bool average_optimal_check(const VecSet& rsd_set_at_s, const VecSet& D,
                           const Vec& reward) {
  if (rsd_set_at_s.empty()) {
    throw std::invalid_argument("average_optimal_check: empty RSD set");
  }
  double best = dot(rsd_set_at_s.front(), reward);
  for (const Vec& r : rsd_set_at_s) best = std::max(best, dot(r, reward));
  for (const Vec& d : D) {
    if (dot(d, reward) == best) return true;
  }
  return false;
}

Vec sample_reward(const RewardSamplerSpec& sampler, std::size_t dim,
                  std::uint64_t sample_index) {
  Rng rng = Rng::derived(sampler.seed, sample_index);
  Vec r(dim);
  for (double& x : r) {
    x = sampler.kind == RewardSamplerSpec::Kind::kIidUniform01 ? rng.uniform01()
                                                               : rng.normal();
  }
  return r;
}

MonteCarloEstimate avg_opt_probability(const RewardlessMdp& mdp, const VecSet& D,
                                       const RewardSamplerSpec& sampler,
                                       std::size_t num_samples, int s) {
  require_state(mdp, s);
  VecSet rsds = rsd_set(mdp, s);
  VecSet complement = set_minus(rsds, D);

  // 1 = D optimal, 0 = not, -1 = straddling tie (discarded).
  std::vector<int> outcome(num_samples);
  parallel_for(num_samples, [&](std::size_t i) {
    Vec reward = sample_reward(sampler, mdp.num_states(), i);
    double best = dot(rsds.front(), reward);
    for (const Vec& r : rsds) best = std::max(best, dot(r, reward));
    bool in_d = false, outside_d = false;
    for (const Vec& r : D) in_d = in_d || dot(r, reward) == best;
    for (const Vec& r : complement) outside_d = outside_d || dot(r, reward) == best;
    outcome[i] = (in_d && outside_d) ? -1 : (in_d ? 1 : 0);
  });

  MonteCarloEstimate est;
  std::size_t hits = 0, kept = 0;
  for (int o : outcome) {
    if (o < 0) {
      ++est.ties_discarded;
    } else {
      ++kept;
      hits += static_cast<std::size_t>(o);
    }
  }
  est.samples = kept;
  if (kept > 0) {
    double p = static_cast<double>(hits) / static_cast<double>(kept);
    est.value = p;
    est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(kept));
    est.ci_low = std::max(0.0, p - 1.96 * est.std_error);
    est.ci_high = std::min(1.0, p + 1.96 * est.std_error);
  }
  return est;
}

std::vector<OrbitTendencyReport> orbit_avgprob_check(
    const RewardlessMdp& mdp, const VecSet& d_prime, const VecSet& D, long n,
    const RewardSamplerSpec& sampler, std::size_t num_reward_orbits, int s) {
  require_state(mdp, s);
  if (mdp.num_states() > 8) {
    throw EnumerationBoundError(
        "orbit_avgprob_check: reward orbits enumerable only up to 8 states");
  }
  VecSet rsds = rsd_set(mdp, s);
  DecisionFn optimal_in = [rsds](const VecSet& X, const Vec& reward) {
    double best = dot(rsds.front(), reward);
    for (const Vec& r : rsds) best = std::max(best, dot(r, reward));
    for (const Vec& x : X) {
      if (dot(x, reward) == best) return 1.0;
    }
    return 0.0;
  };

  std::vector<OrbitTendencyReport> reports(num_reward_orbits);
  ParameterDomain all = ParameterDomain::all();
  parallel_for(num_reward_orbits, [&](std::size_t i) {
    Vec reward = sample_reward(sampler, mdp.num_states(), i);
    reports[i] = check_geq_most(optimal_in, d_prime, D, reward, all, n,
                                /*tol=*/0.0);
  });
  return reports;
}

}  // namespace orbitcheck
