#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitcheck/vec.hpp"

namespace orbitcheck {

/// Element of the symmetric group S_d, stored as a mapping array with
/// mapping[j] = phi(j). Acts on vectors in row representation: the entry at
/// position j moves to position phi(j).
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int d);
  /// Transposition i <-> j (i == j yields the identity).
  static Permutation transposition(int d, int i, int j);
  static Permutation parse(const std::string& csv_mapping);

  int degree() const { return static_cast<int>(mapping_.size()); }
  int operator()(int j) const { return mapping_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& mapping() const { return mapping_; }

  /// compose(p, q)(j) = p(q(j)): apply q first, then p.
  Permutation compose(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  /// Number of non-fixed points.
  int support_size() const;

  /// result[phi(j)] = v[j].
  Vec act(const Vec& v) const;
  /// Elementwise action, duplicates merged, canonical order.
  VecSet act(const VecSet& xs) const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.mapping_ == b.mapping_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.mapping_ < b.mapping_;
  }

 private:
  std::vector<int> mapping_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
  return p.compose(q);
}
inline bool is_involution(const Permutation& p) { return p.is_involution(); }
inline Vec act_vector(const Permutation& p, const Vec& v) { return p.act(v); }
inline VecSet act_set(const Permutation& p, const VecSet& xs) {
  return p.act(xs);
}

/// Default enumeration bound: 10! permutations.
inline constexpr std::uint64_t kEnumerationBound = 3'628'800;

std::uint64_t factorial_checked(int d);

/// All of S_d in lexicographic mapping order. Refuses when d! exceeds the
/// bound.
std::vector<Permutation> all_permutations(
    int d, std::uint64_t bound = kEnumerationBound);

/// All phi in S_d with phi^2 = identity, including the identity. The count is
/// the telephone number T(d). Ordered by (support size, mapping) so searches
/// over involutions are deterministic. Requires d <= 10.
std::vector<Permutation> enumerate_involutions(int d);

/// Named membership predicates for the targeting-parameter set. Restricted to
/// built-ins (plus conjunctions) so reports are reproducible from config
/// files alone. All built-ins are closed under permutation.
class ParameterDomain {
 public:
  enum class Kind { kAll, kPositiveOrthant, kUniqueEntries, kPositiveAndUnique };

  ParameterDomain() : ParameterDomain(Kind::kAll) {}
  explicit ParameterDomain(Kind kind);
  explicit ParameterDomain(std::vector<Kind> conjuncts);

  static ParameterDomain all() { return ParameterDomain(Kind::kAll); }
  static ParameterDomain positive_orthant() {
    return ParameterDomain(Kind::kPositiveOrthant);
  }
  static ParameterDomain unique_entries() {
    return ParameterDomain(Kind::kUniqueEntries);
  }
  static ParameterDomain positive_and_unique() {
    return ParameterDomain(Kind::kPositiveAndUnique);
  }
  /// Parses a name, or a '&'-joined conjunction of names.
  static ParameterDomain parse(const std::string& name);

  bool contains(const Vec& v) const;
  std::string name() const;

  friend bool operator==(const ParameterDomain& a, const ParameterDomain& b) {
    return a.conjuncts_ == b.conjuncts_;
  }

 private:
  std::vector<Kind> conjuncts_;
};

/// The set of permuted variants of a parameter vector that satisfy the domain
/// predicate, in ascending lexicographic order with exact-equality dedup.
struct Orbit {
  Vec source;
  ParameterDomain domain;
  VecSet elements;

  std::size_t size() const { return elements.size(); }
};

/// Enumerates the orbit of v inside the domain. Refuses when d! exceeds the
/// bound; callers needing larger d must use sampled modes instead.
Orbit enumerate_orbit(const Vec& v, const ParameterDomain& domain,
                      std::uint64_t bound = kEnumerationBound);

}  // namespace orbitcheck
