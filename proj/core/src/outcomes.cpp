#include "orbitcheck/outcomes.hpp"

#include <algorithm>
#include <cmath>

#include "orbitcheck/linprog.hpp"

namespace orbitcheck {

bool on_simplex(const Vec& v, double tol) {
  double sum = 0.0;
  for (double x : v) {
    if (x < -tol) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= tol;
}

bool verify_copies(const VecSet& A, const VecSet& B, const CopyCertificate& cert) {
  if (cert.involutions.size() != cert.images.size()) return false;
  const int n = cert.n();
  for (int i = 0; i < n; ++i) {
    const Permutation& phi = cert.involutions[static_cast<std::size_t>(i)];
    if (!phi.is_involution()) return false;
    VecSet image = phi.act(A);
    if (!set_equal(image, cert.images[static_cast<std::size_t>(i)])) return false;
    if (!is_subset(image, B)) return false;
  }
  for (int i = 0; i < n; ++i) {
    const Permutation& phi = cert.involutions[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const VecSet& bj = cert.images[static_cast<std::size_t>(j)];
      if (!set_equal(phi.act(bj), bj)) return false;
    }
  }
  return true;
}

namespace {

// Depth-first search over candidate involutions in non-decreasing index
// order (repeats allowed; the footnote case "A contains n copies of A via the
// identity" is legitimate). Pairwise fixing conditions are checked
// incrementally.
bool extend_certificate(const VecSet& A, const std::vector<Permutation>& candidates,
                        const std::vector<VecSet>& candidate_images, int n,
                        std::size_t start, std::vector<std::size_t>& chosen) {
  if (static_cast<int>(chosen.size()) == n) return true;
  for (std::size_t c = start; c < candidates.size(); ++c) {
    bool ok = true;
    for (std::size_t prev : chosen) {
      const VecSet& bi = candidate_images[prev];
      const VecSet& bc = candidate_images[c];
      if (!set_equal(candidates[c].act(bi), bi) ||
          !set_equal(candidates[prev].act(bc), bc)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    if (extend_certificate(A, candidates, candidate_images, n, c, chosen)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<CopyCertificate> find_copies(const VecSet& A, const VecSet& B, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (A.empty()) throw std::invalid_argument("A must be nonempty");
  require_uniform_dim(A);
  require_uniform_dim(B);
  const int d = static_cast<int>(A.front().size());

  std::vector<Permutation> candidates;
  std::vector<VecSet> candidate_images;
  for (const Permutation& phi : enumerate_involutions(d)) {
    VecSet image = phi.act(A);
    if (is_subset(image, B)) {
      candidates.push_back(phi);
      candidate_images.push_back(std::move(image));
    }
  }
  std::vector<std::size_t> chosen;
  if (!extend_certificate(A, candidates, candidate_images, n, 0, chosen)) {
    return std::nullopt;
  }
  CopyCertificate cert;
  for (std::size_t c : chosen) {
    cert.involutions.push_back(candidates[c]);
    cert.images.push_back(candidate_images[c]);
  }
  return cert;
}

bool verify_superset_copies(const VecSet& A, const VecSet& B,
                            const std::vector<VecSet>& b_star,
                            const std::vector<Permutation>& involutions) {
  if (b_star.size() != involutions.size()) {
    throw std::invalid_argument("b_star/involution count mismatch");
  }
  const std::size_t n = involutions.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!involutions[i].is_involution()) return false;
    VecSet image = involutions[i].act(A);
    if (!is_subset(image, b_star[i])) return false;
    if (!is_subset(b_star[i], B)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!set_equal(involutions[i].act(b_star[j]), b_star[j])) return false;
    }
  }
  return true;
}

VecSet nondominated(const VecSet& X, double margin_tol) {
  if (X.empty()) throw std::invalid_argument("nondominated: empty set");
  require_uniform_dim(X);
  for (std::size_t i = 1; i < X.size(); ++i) {
    if (X[i] == X[i - 1]) {
      throw std::invalid_argument(
          "nondominated: duplicate vectors must be merged first");
    }
  }
  if (X.size() == 1) return X;

  VecSet out;
  for (std::size_t i = 0; i < X.size(); ++i) {
    std::vector<Vec> competitors;
    competitors.reserve(X.size() - 1);
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (j != i) competitors.push_back(X[j]);
    }
    if (strict_margin(X[i], competitors) > margin_tol) {
      out.push_back(X[i]);
    }
  }
  return out;
}

std::optional<Permutation> set_similar(const VecSet& X, const VecSet& Xp) {
  if (X.size() != Xp.size()) return std::nullopt;
  if (X.empty()) return std::nullopt;
  require_uniform_dim(X);
  require_uniform_dim(Xp);
  if (X.front().size() != Xp.front().size()) return std::nullopt;
  const int d = static_cast<int>(X.front().size());

  // Necessary condition: coordinate permutations preserve each vector's
  // multiset of entries, so the two sets must agree on those multisets.
  auto entry_multisets = [](const VecSet& xs) {
    std::vector<Vec> keys;
    for (Vec v : xs) {
      std::sort(v.begin(), v.end());
      keys.push_back(std::move(v));
    }
    std::sort(keys.begin(), keys.end(), lex_less);
    return keys;
  };
  if (entry_multisets(X) != entry_multisets(Xp)) return std::nullopt;

  for (const Permutation& phi : all_permutations(d)) {
    if (set_equal(phi.act(Xp), X)) return phi;
  }
  return std::nullopt;
}

}  // namespace orbitcheck
