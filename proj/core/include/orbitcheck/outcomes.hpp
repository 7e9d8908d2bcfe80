#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitcheck/permutation.hpp"
#include "orbitcheck/vec.hpp"

namespace orbitcheck {

/// A named finite set of outcome lotteries (vectors over d outcomes).
/// Elements are stored in canonical form (sorted, exact duplicates merged).
struct OutcomeSet {
  std::string name;
  VecSet elements;

  OutcomeSet() = default;
  OutcomeSet(std::string set_name, VecSet xs)
      : name(std::move(set_name)), elements(canonical_set(std::move(xs))) {
    require_uniform_dim(elements);
  }
};

/// True when entries are non-negative and sum to 1 within tol.
bool on_simplex(const Vec& v, double tol = 1e-9);

/// Witness that B contains n copies of A: involutions phi_i with
/// phi_i.A = B_i subseteq B and phi_i.B_j = B_j for j != i.
struct CopyCertificate {
  std::vector<Permutation> involutions;
  std::vector<VecSet> images;

  int n() const { return static_cast<int>(involutions.size()); }
};

/// Checks the three copy-containment conditions exactly.
bool verify_copies(const VecSet& A, const VecSet& B, const CopyCertificate& cert);

/// Searches the full involution space of S_d for a certificate that B
/// contains n copies of A. Candidates are tried in increasing support size
/// then lexicographic order, so the first certificate found is deterministic.
/// Absence of a result means no certificate exists. Requires d <= 10.
std::optional<CopyCertificate> find_copies(const VecSet& A, const VecSet& B, int n);

/// Superset-of-copy containment: phi_i.A subseteq B_i_star subseteq B, and
/// phi_i.B_j_star = B_j_star for j != i.
bool verify_superset_copies(const VecSet& A, const VecSet& B,
                            const std::vector<VecSet>& b_star,
                            const std::vector<Permutation>& involutions);

/// The subset of X whose elements strictly maximize x.r for some linear
/// functional r. Decided per element by maximizing the domination margin
/// delta subject to (x - x').r >= delta and |r|_inf <= 1; x is kept iff the
/// optimal margin exceeds `margin_tol`. X must be duplicate-free.
VecSet nondominated(const VecSet& X, double margin_tol = 1e-9);

/// Some phi with phi.Xp = X, or nullopt. First match in lexicographic
/// mapping order. Requires d <= 10.
std::optional<Permutation> set_similar(const VecSet& X, const VecSet& Xp);

}  // namespace orbitcheck
