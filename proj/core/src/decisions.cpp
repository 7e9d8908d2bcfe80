#include "orbitcheck/decisions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "orbitcheck/rng.hpp"

namespace orbitcheck {

namespace {

void require_subset(const VecSet& X, const VecSet& C, const char* op) {
  if (C.empty()) throw std::invalid_argument(std::string(op) + ": C is empty");
  if (!is_subset(X, C)) {
    throw std::invalid_argument(std::string(op) + ": X must be a subset of C");
  }
}

Vec utilities(const VecSet& xs, const Vec& u) {
  Vec vals;
  vals.reserve(xs.size());
  for (const Vec& x : xs) vals.push_back(dot(x, u));
  return vals;
}

}  // namespace

double is_optimal(const VecSet& X, const VecSet& C, const Vec& u, double tol) {
  require_subset(X, C, "is_optimal");
  if (X.empty()) return 0.0;
  Vec vx = utilities(X, u);
  Vec vc = utilities(C, u);
  double mx = *std::max_element(vx.begin(), vx.end());
  double mc = *std::max_element(vc.begin(), vc.end());
  return mx >= mc - tol ? 1.0 : 0.0;
}

double frac_optimal(const VecSet& X, const VecSet& C, const Vec& u, double tol) {
  require_subset(X, C, "frac_optimal");
  Vec vc = utilities(C, u);
  double mc = *std::max_element(vc.begin(), vc.end());
  std::size_t argmax_total = 0;
  for (double v : vc) {
    if (v >= mc - tol) ++argmax_total;
  }
  std::size_t argmax_in_x = 0;
  for (const Vec& x : X) {
    if (dot(x, u) >= mc - tol) ++argmax_in_x;
  }
  return static_cast<double>(argmax_in_x) / static_cast<double>(argmax_total);
}

double is_anti_optimal(const VecSet& X, const VecSet& C, const Vec& u, double tol) {
  require_subset(X, C, "is_anti_optimal");
  if (X.empty()) return 0.0;
  Vec vx = utilities(X, u);
  Vec vc = utilities(C, u);
  double mx = *std::min_element(vx.begin(), vx.end());
  double mc = *std::min_element(vc.begin(), vc.end());
  return mx <= mc + tol ? 1.0 : 0.0;
}

double boltzmann(const VecSet& X, const VecSet& C, const Vec& u,
                 double temperature) {
  require_subset(X, C, "boltzmann");
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("boltzmann: temperature must be positive");
  }
  Vec vc = utilities(C, u);
  double shift = *std::max_element(vc.begin(), vc.end());
  double denom = 0.0;
  for (double v : vc) denom += std::exp((v - shift) / temperature);
  double numer = 0.0;
  for (const Vec& x : X) numer += std::exp((dot(x, u) - shift) / temperature);
  return numer / denom;
}

double satisfice(const VecSet& X, const VecSet& C, const Vec& u, double threshold,
                 double tol) {
  require_subset(X, C, "satisfice");
  std::size_t denom = 0;
  for (const Vec& c : C) {
    if (dot(c, u) >= threshold - tol) ++denom;
  }
  if (denom == 0) return 0.0;
  std::size_t numer = 0;
  for (const Vec& x : X) {
    if (dot(x, u) >= threshold - tol) ++numer;
  }
  return static_cast<double>(numer) / static_cast<double>(denom);
}

namespace {

// fracOpt over the set of distinct indices in one draw, as an exact fraction.
std::pair<std::int64_t, std::int64_t> tuple_frac(const std::vector<int>& draw,
                                                 const Vec& util_by_index,
                                                 const std::vector<bool>& in_x,
                                                 double tol) {
  double best = util_by_index[static_cast<std::size_t>(draw[0])];
  for (int idx : draw) {
    best = std::max(best, util_by_index[static_cast<std::size_t>(idx)]);
  }
  std::int64_t denom = 0, numer = 0;
  for (std::size_t p = 0; p < draw.size(); ++p) {
    int idx = draw[p];
    bool repeat = false;
    for (std::size_t q = 0; q < p; ++q) {
      if (draw[q] == idx) {
        repeat = true;
        break;
      }
    }
    if (repeat) continue;
    if (util_by_index[static_cast<std::size_t>(idx)] >= best - tol) {
      ++denom;
      if (in_x[static_cast<std::size_t>(idx)]) ++numer;
    }
  }
  return {numer, denom};
}

}  // namespace

SampledValue best_of_k(const VecSet& X, const VecSet& C, const Vec& u, int k,
                       std::uint64_t budget, std::uint64_t seed,
                       std::size_t mc_samples, double tol) {
  require_subset(X, C, "best_of_k");
  if (k < 1) throw std::invalid_argument("best_of_k: k must be >= 1");
  const std::size_t m = C.size();
  Vec util_by_index = utilities(C, u);
  std::vector<bool> in_x(m, false);
  for (std::size_t i = 0; i < m; ++i) in_x[i] = set_contains(X, C[i]);

  // Common denominator for the per-draw fractions a/b with b <= k.
  std::int64_t lcm = 1;
  for (int b = 2; b <= std::min<int>(k, static_cast<int>(m)); ++b) {
    lcm = std::lcm(lcm, static_cast<std::int64_t>(b));
  }

  double total_draws = std::pow(static_cast<double>(m), k);
  SampledValue out;
  if (total_draws <= static_cast<double>(budget)) {
    // Exact expectation over all ordered draws, accumulated in integers.
    std::vector<int> draw(static_cast<std::size_t>(k), 0);
    std::int64_t acc = 0;
    std::uint64_t count = 0;
    for (;;) {
      auto [a, b] = tuple_frac(draw, util_by_index, in_x, tol);
      acc += a * (lcm / b);
      ++count;
      int pos = k - 1;
      while (pos >= 0) {
        if (++draw[static_cast<std::size_t>(pos)] <
            static_cast<int>(m)) {
          break;
        }
        draw[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    out.value = static_cast<double>(acc) /
                (static_cast<double>(lcm) * static_cast<double>(count));
    out.std_error = 0.0;
    out.exact = true;
    return out;
  }

  Rng rng = Rng::derived(seed, 0x6265737431ULL);
  double sum = 0.0, sum_sq = 0.0;
  std::vector<int> draw(static_cast<std::size_t>(k));
  for (std::size_t s = 0; s < mc_samples; ++s) {
    for (int p = 0; p < k; ++p) {
      draw[static_cast<std::size_t>(p)] =
          rng.uniform_int(0, static_cast<int>(m) - 1);
    }
    auto [a, b] = tuple_frac(draw, util_by_index, in_x, tol);
    double v = static_cast<double>(a) / static_cast<double>(b);
    sum += v;
    sum_sq += v * v;
  }
  double n = static_cast<double>(mc_samples);
  double mean = sum / n;
  double var = std::max(0.0, sum_sq / n - mean * mean);
  out.value = mean;
  out.std_error = std::sqrt(var / n);
  out.exact = false;
  return out;
}

double quantile_threshold(const VecSet& C, const Vec& u, double q) {
  if (C.empty()) throw std::invalid_argument("quantile_threshold: C is empty");
  if (!(q > 0.0) || q > 1.0) {
    throw std::invalid_argument("quantile_threshold: q must be in (0, 1]");
  }
  Vec vals = utilities(C, u);
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  const double m = static_cast<double>(vals.size());
  const double mass_limit = q * m + 1e-9;
  if (m <= mass_limit) {
    // q = 1: every threshold qualifies, so the infimum lies below the whole
    // support. Return a sentinel strictly below all utilities.
    return vals.back() - 1.0;
  }
  // Walk distinct values in descending order; the threshold is the lowest
  // value v whose strictly-above count still fits in the q-quantile.
  std::size_t above = 0;
  std::size_t i = 0;
  double threshold = vals.front();
  while (i < vals.size()) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    if (static_cast<double>(above) <= mass_limit) {
      threshold = vals[i];
    } else {
      break;
    }
    above = j;
    i = j;
  }
  return threshold;
}

double quantilize(const VecSet& X, const VecSet& C, const Vec& u, double q,
                  double tol) {
  require_subset(X, C, "quantilize");
  if (!(q > 0.0) || q > 1.0) {
    throw std::invalid_argument("quantilize: q must be in (0, 1]");
  }
  const double m = static_cast<double>(C.size());
  const double px = 1.0 / m;  // uniform base distribution
  const double threshold = quantile_threshold(C, u, q);

  std::size_t count_above = 0, count_at = 0;
  for (const Vec& c : C) {
    double v = dot(c, u);
    if (v > threshold + tol) {
      ++count_above;
    } else if (std::abs(v - threshold) <= tol) {
      ++count_at;
    }
  }
  const double p_above = static_cast<double>(count_above) / m;
  const double p_at = static_cast<double>(count_at) / m;
  const double spill = std::max(0.0, q - p_above);

  double mass = 0.0;
  for (const Vec& x : X) {
    double v = dot(x, u);
    if (v > threshold + tol) {
      mass += px / q;
    } else if (std::abs(v - threshold) <= tol && count_at > 0) {
      mass += px / q * spill / p_at;
    }
  }
  return mass;
}

double numerical_rule(bool x_is_a, int theta) {
  if (theta < 1 || theta > 6) {
    throw std::invalid_argument("numerical_rule: theta must be in {1..6}");
  }
  double pa = theta == 1 ? 1.0 : 0.0;
  return x_is_a ? pa : 1.0 - pa;
}

bool frac_optimal_inequalities_check(const VecSet& X, const VecSet& Yp,
                                     const VecSet& Y, const Vec& u, double tol) {
  if (!is_subset(X, Yp) || !is_subset(Yp, Y)) {
    throw std::invalid_argument(
        "frac_optimal_inequalities_check: need X subseteq Y' subseteq Y");
  }
  double lo = frac_optimal(X, Y, u, tol);
  double mid = frac_optimal(X, Yp, u, tol);
  double hi = frac_optimal(set_union(X, set_minus(Y, Yp)), Y, u, tol);
  return lo <= mid && mid <= hi;
}

double DecisionRule::evaluate(const VecSet& X, const VecSet& C,
                              const Vec& theta) const {
  switch (kind) {
    case RuleKind::kOptimalIndicator:
      return is_optimal(X, C, theta, tie_tol);
    case RuleKind::kFracOptimal:
      return frac_optimal(X, C, theta, tie_tol);
    case RuleKind::kAntiOptimalIndicator:
      return is_anti_optimal(X, C, theta, tie_tol);
    case RuleKind::kBoltzmann:
      return boltzmann(X, C, theta, temperature);
    case RuleKind::kBestOfK:
      return best_of_k(X, C, theta, k, sample_budget, seed, 100'000, tie_tol)
          .value;
    case RuleKind::kSatisficer:
      return satisfice(X, C, theta, threshold, tie_tol);
    case RuleKind::kQuantilizer:
      return quantilize(X, C, theta, quantile, tie_tol);
    case RuleKind::kRand:
      require_subset(X, C, "rand");
      return static_cast<double>(X.size()) / static_cast<double>(C.size());
    case RuleKind::kStubborn:
      require_subset(X, C, "stubborn");
      if (stubborn_outcome.empty()) {
        throw std::invalid_argument("stubborn rule has no outcome configured");
      }
      return set_contains(X, stubborn_outcome) ? 1.0 : 0.0;
    case RuleKind::kNumerical:
      throw std::logic_error(
          "numerical rule is label-indexed; bind it with set labels");
  }
  throw std::logic_error("unknown rule kind");
}

bool DecisionRule::eu_determined() const {
  switch (kind) {
    case RuleKind::kOptimalIndicator:
    case RuleKind::kFracOptimal:
    case RuleKind::kAntiOptimalIndicator:
    case RuleKind::kBoltzmann:
    case RuleKind::kBestOfK:
    case RuleKind::kSatisficer:
    case RuleKind::kQuantilizer:
      return true;
    default:
      return false;
  }
}

std::string DecisionRule::to_string() const {
  switch (kind) {
    case RuleKind::kOptimalIndicator: return "optimal-indicator";
    case RuleKind::kFracOptimal: return "frac-optimal";
    case RuleKind::kAntiOptimalIndicator: return "anti-optimal-indicator";
    case RuleKind::kBoltzmann: return "boltzmann T=" + format_double(temperature);
    case RuleKind::kBestOfK: return "best-of-k k=" + std::to_string(k);
    case RuleKind::kSatisficer: return "satisficer t=" + format_double(threshold);
    case RuleKind::kQuantilizer: return "quantilizer q=" + format_double(quantile);
    case RuleKind::kRand: return "rand";
    case RuleKind::kStubborn: {
      std::string s = "stubborn outcome=";
      for (std::size_t i = 0; i < stubborn_outcome.size(); ++i) {
        if (i) s += ";";
        s += format_double(stubborn_outcome[i]);
      }
      return s;
    }
    case RuleKind::kNumerical: return "numerical";
  }
  return "?";
}

DecisionRule DecisionRule::parse(const std::string& text) {
  std::stringstream ss(text);
  std::string kind_name;
  ss >> kind_name;
  DecisionRule rule;
  if (kind_name == "optimal-indicator") {
    rule.kind = RuleKind::kOptimalIndicator;
  } else if (kind_name == "frac-optimal") {
    rule.kind = RuleKind::kFracOptimal;
  } else if (kind_name == "anti-optimal-indicator") {
    rule.kind = RuleKind::kAntiOptimalIndicator;
  } else if (kind_name == "boltzmann") {
    rule.kind = RuleKind::kBoltzmann;
  } else if (kind_name == "best-of-k") {
    rule.kind = RuleKind::kBestOfK;
  } else if (kind_name == "satisficer") {
    rule.kind = RuleKind::kSatisficer;
  } else if (kind_name == "quantilizer") {
    rule.kind = RuleKind::kQuantilizer;
  } else if (kind_name == "rand") {
    rule.kind = RuleKind::kRand;
  } else if (kind_name == "stubborn") {
    rule.kind = RuleKind::kStubborn;
  } else if (kind_name == "numerical") {
    rule.kind = RuleKind::kNumerical;
  } else {
    throw std::invalid_argument("unknown rule kind: " + kind_name);
  }
  std::string param;
  while (ss >> param) {
    auto eq = param.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("bad rule parameter: " + param);
    }
    std::string key = param.substr(0, eq);
    std::string value = param.substr(eq + 1);
    if (key == "T") {
      rule.temperature = std::stod(value);
    } else if (key == "t") {
      rule.threshold = std::stod(value);
    } else if (key == "q") {
      rule.quantile = std::stod(value);
    } else if (key == "k") {
      rule.k = std::stoi(value);
    } else if (key == "outcome") {
      Vec v;
      std::stringstream vs(value);
      std::string tok;
      while (std::getline(vs, tok, ';')) v.push_back(std::stod(tok));
      rule.stubborn_outcome = std::move(v);
    } else {
      throw std::invalid_argument("unknown rule parameter: " + key);
    }
  }
  return rule;
}

bool eu_invariance_check(const DecisionRule& rule, const VecSet& X,
                         const VecSet& C, const Vec& u, const Permutation& phi,
                         double tol) {
  double direct = rule.evaluate(X, C, u);
  double permuted = rule.evaluate(phi.act(X), phi.act(C), phi.act(u));
  return std::abs(direct - permuted) <= tol;
}

}  // namespace orbitcheck
