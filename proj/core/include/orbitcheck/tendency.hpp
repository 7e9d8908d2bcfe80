#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcheck/decisions.hpp"
#include "orbitcheck/permutation.hpp"
#include "orbitcheck/vec.hpp"

namespace orbitcheck {

/// A decision function f(X | theta) with the candidate set C (if any) baked
/// in. Tendency checks only ever compare f across outcome sets at permuted
/// parameters.
using DecisionFn = std::function<double(const VecSet&, const Vec&)>;

/// Binds rule.evaluate(X, C, .) for the content-based rule kinds.
DecisionFn bind_rule(const DecisionRule& rule, const VecSet& C);

/// Binds the label-indexed numerical rule: X is compared against A (the
/// B side is its complement) and theta is a basis vector of R^6 whose hot
/// index selects the integer parameter.
DecisionFn bind_numerical(const VecSet& A);

/// Exhaustive strict-inequality counts of f(B|.) vs f(A|.) over one orbit
/// inside the parameter domain.
struct OrbitTendencyReport {
  Vec source;
  std::size_t orbit_size = 0;
  std::size_t count_b_gt_a = 0;
  std::size_t count_a_gt_b = 0;
  std::size_t count_tie = 0;
  long n_claimed = 1;
  bool holds = false;

  /// Fraction of the orbit with f(B) >= f(A), as an exact rational.
  std::uint64_t agreement_num() const { return count_b_gt_a + count_tie; }
  std::uint64_t agreement_den() const { return orbit_size; }

  /// agreement_num/agreement_den >= num/den, compared by cross-multiplication.
  bool agreement_at_least(std::uint64_t num, std::uint64_t den) const {
    return agreement_num() * den >= num * agreement_den();
  }
};

OrbitTendencyReport check_geq_most(const DecisionFn& f, const VecSet& A,
                                   const VecSet& B, const Vec& theta,
                                   const ParameterDomain& domain, long n,
                                   double tol = kTieTol);

/// Integer-grid parameter samples plus curated tie cases (constant vectors,
/// one repeated pair, small descending fixtures).
struct ThetaSampleSpec {
  int grid_low = -3;
  int grid_high = 10;
  std::size_t count = 1000;
  bool include_curated = true;
};

std::vector<Vec> sample_thetas(int dim, const ThetaSampleSpec& spec,
                               std::uint64_t seed);

struct SampledTendencyResult {
  std::vector<OrbitTendencyReport> reports;
  bool all_hold = true;
  std::vector<std::size_t> violations;  // indices into reports
};

SampledTendencyResult check_geq_most_sampled(const DecisionFn& f, const VecSet& A,
                                             const VecSet& B,
                                             const ParameterDomain& domain,
                                             long n, int theta_dim,
                                             const ThetaSampleSpec& spec,
                                             std::uint64_t seed,
                                             double tol = kTieTol);

/// Checks that for every sampled theta inside the domain with
/// f(B|theta) < f(A|theta), the permuted parameter flips the preference.
/// Verifies on the samples that the domain is closed under phi (the
/// definition presumes it) and throws if not.
bool check_simple_retargetable(const DecisionFn& f, const VecSet& A,
                               const VecSet& B, const ParameterDomain& domain,
                               const Permutation& phi,
                               const std::vector<Vec>& thetas,
                               double tol = kTieTol);

/// Searches all phi in S_d (d <= 7) and returns the first witness, if any.
std::optional<Permutation> find_simple_retarget(const DecisionFn& f,
                                                const VecSet& A, const VecSet& B,
                                                const ParameterDomain& domain,
                                                int theta_dim,
                                                const std::vector<Vec>& thetas,
                                                double tol = kTieTol);

/// n retargeting permutations, either one constant list or chosen per base
/// parameter (the paper's examples all use constant choices).
class RetargetCertificate {
 public:
  explicit RetargetCertificate(std::vector<Permutation> constant_choice);
  RetargetCertificate(int n,
                      std::function<std::vector<Permutation>(const Vec&)> chooser);

  int n() const { return n_; }
  std::vector<Permutation> choose(const Vec& base_theta) const;

 private:
  int n_;
  std::vector<Permutation> constant_;
  std::function<std::vector<Permutation>(const Vec&)> chooser_;
};

struct MultiRetargetReport {
  bool flips_all = true;        // each phi_i flips every A-preferring element
  bool stays_in_domain = true;  // phi_i images remain in the domain
  bool images_distinct = true;  // phi_i and phi_j images never collide (i != j)
  std::string witness;

  bool all() const { return flips_all && stays_in_domain && images_distinct; }
};

/// Evaluates the three multi-retargetability conditions over the full orbit
/// of theta inside the domain.
MultiRetargetReport check_multi_retargetable(const DecisionFn& f, const VecSet& A,
                                             const VecSet& B, const Vec& theta,
                                             const ParameterDomain& domain,
                                             const RetargetCertificate& cert,
                                             double tol = kTieTol);

/// Cross-check of the counting theorem: a valid certificate must yield a
/// holding report at n = cert.n(). Throws std::invalid_argument when the
/// certificate itself fails its conditions.
bool verify_counting_theorem(const DecisionFn& f, const VecSet& A, const VecSet& B,
                             const Vec& theta, const ParameterDomain& domain,
                             const RetargetCertificate& cert,
                             double tol = kTieTol);

/// Item-by-item evaluation of the general orbit conditions for involutions
/// phi_i and intermediate sets B_i_star.
struct GeneralOrbitReport {
  bool retargetable_under_permutation = true;  // item 1
  bool domain_closed = true;                   // item 2
  bool increasing_to_b = true;                 // item 3
  bool increasing_under_alternate = true;      // item 4
  std::string witness;
  OrbitTendencyReport tendency;

  bool all_items() const {
    return retargetable_under_permutation && domain_closed && increasing_to_b &&
           increasing_under_alternate;
  }
};

/// When every item holds the n-fold tendency conclusion is implied; the
/// operation asserts it (throws std::logic_error if the exhaustive count were
/// to disagree, which would indicate an implementation bug).
GeneralOrbitReport check_general_orbit_conditions(
    const DecisionFn& f, const VecSet& A, const VecSet& B,
    const std::vector<VecSet>& b_stars, const std::vector<Permutation>& phis,
    const Vec& theta, const ParameterDomain& domain, double tol = kTieTol);

/// Explicit (set, parameter) -> value table; used for counterexample fixtures
/// and randomized lemma tests. Lookup is exact on both keys.
class TabularDecisionFunction {
 public:
  void define(const VecSet& X, const Vec& theta, double value);
  double operator()(const VecSet& X, const Vec& theta) const;
  DecisionFn fn() const;
  std::size_t size() const { return table_.size(); }

 private:
  static std::string key(const VecSet& X, const Vec& theta);
  std::map<std::string, double> table_;
};

}  // namespace orbitcheck
