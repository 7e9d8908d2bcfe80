#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "orbitcheck/permutation.hpp"
#include "orbitcheck/vec.hpp"

namespace orbitcheck {

/// Probability that some element of X is selected from C, for the various
/// decision-making procedures. All operations require X subseteq C (exact
/// membership) and return values in [0, 1].

/// 1 iff max over X of x.u >= max over C.
double is_optimal(const VecSet& X, const VecSet& C, const Vec& u,
                  double tol = kTieTol);

/// |argmax(C) intersect X| / |argmax(C)|, with ties detected at `tol`.
double frac_optimal(const VecSet& X, const VecSet& C, const Vec& u,
                    double tol = kTieTol);

/// 1 iff min over X of x.u <= min over C.
double is_anti_optimal(const VecSet& X, const VecSet& C, const Vec& u,
                       double tol = kTieTol);

/// Sum over X of exp(x.u / T) over the same sum over C, computed with a
/// max-shift so large utilities cannot overflow.
double boltzmann(const VecSet& X, const VecSet& C, const Vec& u,
                 double temperature);

/// |{x in X : x.u >= t}| / |{c in C : c.u >= t}|, and 0 when the denominator
/// is empty.
double satisfice(const VecSet& X, const VecSet& C, const Vec& u, double threshold,
                 double tol = kTieTol);

struct SampledValue {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = true;
};

/// Expected fraction-optimal mass of X among k outcome lotteries drawn
/// uniformly (ordered, with replacement) from C. Exact enumeration of all
/// |C|^k draws when that count fits the budget (the exact path accumulates in
/// integer arithmetic, so it is invariant to enumeration order); otherwise a
/// seeded Monte Carlo estimate with its standard error.
SampledValue best_of_k(const VecSet& X, const VecSet& C, const Vec& u, int k,
                       std::uint64_t budget = 1'000'000, std::uint64_t seed = 0,
                       std::size_t mc_samples = 100'000, double tol = kTieTol);

/// Expected-utility q-quantile threshold inf{M : P[x.u > M] <= q} for the
/// uniform base distribution over C, computed by sorting the finitely many
/// utilities. q = 1 returns a sentinel strictly below all utilities (so the
/// whole support counts as strictly above it).
double quantile_threshold(const VecSet& C, const Vec& u, double q);

/// Closed-form quantilizer mass on X: elements strictly above the threshold
/// contribute P(x)/q; elements on the threshold share the remaining
/// q - P(C_above) proportionally to base mass.
double quantilize(const VecSet& X, const VecSet& C, const Vec& u, double q,
                  double tol = kTieTol);

/// The parameter-indexed rule over a 6-element parameter space: the A-side
/// probability is 1 exactly when theta = 1.
double numerical_rule(bool x_is_a, int theta);

/// Checks fracOpt(X|Y,u) <= fracOpt(X|Y',u) <= fracOpt(X u (Y \ Y')|Y,u)
/// for a chain X subseteq Y' subseteq Y.
bool frac_optimal_inequalities_check(const VecSet& X, const VecSet& Yp,
                                     const VecSet& Y, const Vec& u,
                                     double tol = kTieTol);

enum class RuleKind {
  kOptimalIndicator,
  kFracOptimal,
  kAntiOptimalIndicator,
  kBoltzmann,
  kBestOfK,
  kSatisficer,
  kQuantilizer,
  kRand,
  kStubborn,
  kNumerical,
};

/// A decision-making function f(X | C, theta) -> [0,1] plus its parameters.
/// The first seven kinds are EU-determined (they depend only on the multisets
/// of expected utilities); rand, stubborn and numerical are plumbing rules
/// used by the retargetability counterexamples.
struct DecisionRule {
  RuleKind kind = RuleKind::kFracOptimal;
  double temperature = 1.0;       // boltzmann, > 0
  double threshold = 0.0;         // satisficer
  double quantile = 1.0;          // quantilizer, in (0, 1]
  int k = 1;                      // best-of-k, >= 1
  std::uint64_t sample_budget = 1'000'000;
  std::uint64_t seed = 0;
  Vec stubborn_outcome;           // stubborn: the always-chosen lottery
  double tie_tol = kTieTol;

  /// Point evaluation. The numerical kind cannot be evaluated contentwise and
  /// throws; bind it with set labels via tendency helpers instead.
  double evaluate(const VecSet& X, const VecSet& C, const Vec& theta) const;

  bool eu_determined() const;
  /// e.g. "boltzmann T=1", "satisficer t=3"; parse accepts the same syntax.
  std::string to_string() const;
  static DecisionRule parse(const std::string& text);
};

/// |f(X|C,u) - f(phi.X | phi.C, phi.u)| <= tol. Meaningful for the seven
/// EU-determined kinds; rules that key on concrete outcomes (stubborn) fail
/// whenever phi moves what they track.
bool eu_invariance_check(const DecisionRule& rule, const VecSet& X,
                         const VecSet& C, const Vec& u, const Permutation& phi,
                         double tol = 1e-12);

}  // namespace orbitcheck
