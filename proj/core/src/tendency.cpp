#include "orbitcheck/tendency.hpp"

#include <algorithm>

#include "orbitcheck/parallel.hpp"
#include "orbitcheck/rng.hpp"

namespace orbitcheck {

DecisionFn bind_rule(const DecisionRule& rule, const VecSet& C) {
  if (rule.kind == RuleKind::kNumerical) {
    throw std::invalid_argument("bind_rule: numerical rule needs bind_numerical");
  }
  return [rule, C](const VecSet& X, const Vec& theta) {
    return rule.evaluate(X, C, theta);
  };
}

DecisionFn bind_numerical(const VecSet& A) {
  return [A](const VecSet& X, const Vec& theta) {
    auto it = std::max_element(theta.begin(), theta.end());
    int param = static_cast<int>(it - theta.begin()) + 1;
    return numerical_rule(set_equal(X, A), param);
  };
}

OrbitTendencyReport check_geq_most(const DecisionFn& f, const VecSet& A,
                                   const VecSet& B, const Vec& theta,
                                   const ParameterDomain& domain, long n,
                                   double tol) {
  if (n < 1) throw std::invalid_argument("check_geq_most: n must be >= 1");
  Orbit orbit = enumerate_orbit(theta, domain);
  OrbitTendencyReport report;
  report.source = theta;
  report.orbit_size = orbit.size();
  report.n_claimed = n;
  for (const Vec& t : orbit.elements) {
    double fa = f(A, t);
    double fb = f(B, t);
    if (fb > fa + tol) {
      ++report.count_b_gt_a;
    } else if (fa > fb + tol) {
      ++report.count_a_gt_b;
    } else {
      ++report.count_tie;
    }
  }
  report.holds = report.count_b_gt_a >=
                 static_cast<std::size_t>(n) * report.count_a_gt_b;
  return report;
}

std::vector<Vec> sample_thetas(int dim, const ThetaSampleSpec& spec,
                               std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("sample_thetas: dim must be >= 1");
  if (spec.grid_low > spec.grid_high) {
    throw std::invalid_argument("sample_thetas: empty grid range");
  }
  std::vector<Vec> out;
  auto push_unique = [&out](Vec v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(std::move(v));
    }
  };

  if (spec.include_curated) {
    const std::size_t d = static_cast<std::size_t>(dim);
    push_unique(Vec(d, 0.0));
    push_unique(Vec(d, 1.0));
    // One repeated pair at the top, rest strictly descending.
    Vec pair(d, static_cast<double>(spec.grid_high));
    for (std::size_t i = 2; i < d; ++i) {
      pair[i] = pair[0] - static_cast<double>(i - 1);
    }
    push_unique(pair);
    if (dim == 3) {
      push_unique(Vec{10, 5, 0});
      push_unique(Vec{3, 2, 1});
    }
    if (dim == 5) {
      push_unique(Vec{10, 5, 0, 2, 1});
    }
  }

  Rng rng = Rng::derived(seed, 0x7468657461ULL);
  for (std::size_t s = 0; s < spec.count; ++s) {
    Vec v(static_cast<std::size_t>(dim));
    for (double& x : v) {
      x = static_cast<double>(rng.uniform_int(spec.grid_low, spec.grid_high));
    }
    out.push_back(std::move(v));
  }
  return out;
}

SampledTendencyResult check_geq_most_sampled(const DecisionFn& f, const VecSet& A,
                                             const VecSet& B,
                                             const ParameterDomain& domain,
                                             long n, int theta_dim,
                                             const ThetaSampleSpec& spec,
                                             std::uint64_t seed, double tol) {
  std::vector<Vec> thetas = sample_thetas(theta_dim, spec, seed);
  SampledTendencyResult result;
  result.reports.resize(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) {
    result.reports[i] = check_geq_most(f, A, B, thetas[i], domain, n, tol);
  });
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    if (!result.reports[i].holds) {
      result.all_hold = false;
      result.violations.push_back(i);
    }
  }
  return result;
}

bool check_simple_retargetable(const DecisionFn& f, const VecSet& A,
                               const VecSet& B, const ParameterDomain& domain,
                               const Permutation& phi,
                               const std::vector<Vec>& thetas, double tol) {
  for (const Vec& theta : thetas) {
    if (!domain.contains(theta)) continue;
    Vec moved = phi.act(theta);
    if (!domain.contains(moved)) {
      throw std::invalid_argument(
          "check_simple_retargetable: domain is not closed under phi at theta=" +
          vec_to_string(theta));
    }
    if (f(B, theta) < f(A, theta) - tol) {
      if (!(f(A, moved) < f(B, moved) - tol)) return false;
    }
  }
  return true;
}

std::optional<Permutation> find_simple_retarget(const DecisionFn& f,
                                                const VecSet& A, const VecSet& B,
                                                const ParameterDomain& domain,
                                                int theta_dim,
                                                const std::vector<Vec>& thetas,
                                                double tol) {
  if (theta_dim > 7) {
    throw EnumerationBoundError("find_simple_retarget: search requires d <= 7");
  }
  for (const Permutation& phi : all_permutations(theta_dim)) {
    if (check_simple_retargetable(f, A, B, domain, phi, thetas, tol)) return phi;
  }
  return std::nullopt;
}

RetargetCertificate::RetargetCertificate(std::vector<Permutation> constant_choice)
    : n_(static_cast<int>(constant_choice.size())),
      constant_(std::move(constant_choice)) {
  if (n_ < 1) throw std::invalid_argument("certificate needs >= 1 permutation");
}

RetargetCertificate::RetargetCertificate(
    int n, std::function<std::vector<Permutation>(const Vec&)> chooser)
    : n_(n), chooser_(std::move(chooser)) {
  if (n_ < 1) throw std::invalid_argument("certificate needs >= 1 permutation");
}

std::vector<Permutation> RetargetCertificate::choose(const Vec& base_theta) const {
  if (chooser_) {
    auto phis = chooser_(base_theta);
    if (static_cast<int>(phis.size()) != n_) {
      throw std::invalid_argument("certificate chooser returned wrong count");
    }
    return phis;
  }
  return constant_;
}

MultiRetargetReport check_multi_retargetable(const DecisionFn& f, const VecSet& A,
                                             const VecSet& B, const Vec& theta,
                                             const ParameterDomain& domain,
                                             const RetargetCertificate& cert,
                                             double tol) {
  Orbit orbit = enumerate_orbit(theta, domain);
  std::vector<Permutation> phis = cert.choose(theta);
  MultiRetargetReport report;

  VecSet prefers_a;
  for (const Vec& t : orbit.elements) {
    if (f(A, t) > f(B, t) + tol) prefers_a.push_back(t);
  }

  for (const Vec& t : prefers_a) {
    for (std::size_t i = 0; i < phis.size(); ++i) {
      Vec moved = phis[i].act(t);
      if (!(f(A, moved) < f(B, moved) - tol)) {
        if (report.flips_all) {
          report.witness = "phi_" + std::to_string(i + 1) +
                           " fails to flip theta=" + vec_to_string(t);
        }
        report.flips_all = false;
      }
      if (!domain.contains(moved)) {
        if (report.stays_in_domain) {
          report.witness = "phi_" + std::to_string(i + 1) +
                           " leaves the domain at theta=" + vec_to_string(t);
        }
        report.stays_in_domain = false;
      }
    }
  }

  // Condition 3: the images phi_i . {A-preferring elements} must be pairwise
  // disjoint across i != j.
  std::vector<VecSet> images(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    VecSet img;
    img.reserve(prefers_a.size());
    for (const Vec& t : prefers_a) img.push_back(phis[i].act(t));
    images[i] = canonical_set(std::move(img));
  }
  for (std::size_t i = 0; i < phis.size() && report.images_distinct; ++i) {
    for (std::size_t j = i + 1; j < phis.size(); ++j) {
      VecSet overlap = set_intersect(images[i], images[j]);
      if (!overlap.empty()) {
        report.images_distinct = false;
        report.witness = "phi_" + std::to_string(i + 1) + " and phi_" +
                         std::to_string(j + 1) +
                         " collide at image=" + vec_to_string(overlap.front());
        break;
      }
    }
  }
  return report;
}

bool verify_counting_theorem(const DecisionFn& f, const VecSet& A, const VecSet& B,
                             const Vec& theta, const ParameterDomain& domain,
                             const RetargetCertificate& cert, double tol) {
  MultiRetargetReport pre = check_multi_retargetable(f, A, B, theta, domain, cert, tol);
  if (!pre.all()) {
    throw std::invalid_argument("verify_counting_theorem: certificate invalid: " +
                                pre.witness);
  }
  OrbitTendencyReport report =
      check_geq_most(f, A, B, theta, domain, cert.n(), tol);
  return report.holds;
}

GeneralOrbitReport check_general_orbit_conditions(
    const DecisionFn& f, const VecSet& A, const VecSet& B,
    const std::vector<VecSet>& b_stars, const std::vector<Permutation>& phis,
    const Vec& theta, const ParameterDomain& domain, double tol) {
  if (b_stars.size() != phis.size()) {
    throw std::invalid_argument("b_stars/phis count mismatch");
  }
  for (const Permutation& phi : phis) {
    if (!phi.is_involution()) {
      throw std::invalid_argument("general orbit conditions require involutions");
    }
  }
  const std::size_t n = phis.size();
  Orbit orbit = enumerate_orbit(theta, domain);
  GeneralOrbitReport report;
  auto note = [&report](std::string msg) {
    if (report.witness.empty()) report.witness = std::move(msg);
  };

  for (const Vec& t : orbit.elements) {
    const double fa = f(A, t);
    const double fb = f(B, t);
    const bool a_preferred = fb < fa - tol;
    const bool b_preferred = fa < fb - tol;
    for (std::size_t i = 0; i < n; ++i) {
      Vec moved = phis[i].act(t);
      if (a_preferred) {
        // Item 1: retargetable under parameter permutation.
        if (!(fa <= f(b_stars[i], moved) + tol)) {
          report.retargetable_under_permutation = false;
          note("item 1 fails at theta=" + vec_to_string(t) + ", i=" +
               std::to_string(i + 1));
        }
        // Item 2: domain closure where it matters.
        if (!domain.contains(moved)) {
          report.domain_closed = false;
          note("item 2 fails at theta=" + vec_to_string(t));
        }
      }
      // Item 3: f increasing from B_i_star to B.
      if (!(f(b_stars[i], t) <= fb + tol)) {
        report.increasing_to_b = false;
        note("item 3 fails at theta=" + vec_to_string(t) + ", i=" +
             std::to_string(i + 1));
      }
      // Item 4: alternate symmetries do not decrease f(B_j_star | .).
      if (b_preferred) {
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          if (!(f(b_stars[j], t) <= f(b_stars[j], moved) + tol)) {
            report.increasing_under_alternate = false;
            note("item 4 fails: f(B_" + std::to_string(j + 1) +
                 "*|phi_" + std::to_string(i + 1) + " theta) < f(B_" +
                 std::to_string(j + 1) + "*|theta) at theta=" + vec_to_string(t));
          }
        }
      }
    }
  }

  report.tendency =
      check_geq_most(f, A, B, theta, domain, static_cast<long>(n), tol);
  if (report.all_items() && !report.tendency.holds) {
    throw std::logic_error(
        "general orbit conditions all hold but the counting conclusion failed");
  }
  return report;
}

void TabularDecisionFunction::define(const VecSet& X, const Vec& theta,
                                     double value) {
  table_[key(X, theta)] = value;
}

double TabularDecisionFunction::operator()(const VecSet& X, const Vec& theta) const {
  auto it = table_.find(key(X, theta));
  if (it == table_.end()) {
    throw std::out_of_range("tabular decision function undefined at X=" +
                            set_to_string(X) + ", theta=" + vec_to_string(theta));
  }
  return it->second;
}

DecisionFn TabularDecisionFunction::fn() const {
  return [table = *this](const VecSet& X, const Vec& theta) {
    return table(X, theta);
  };
}

std::string TabularDecisionFunction::key(const VecSet& X, const Vec& theta) {
  return set_to_string(X) + "|" + vec_to_string(theta);
}

}  // namespace orbitcheck
