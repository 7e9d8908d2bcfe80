#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitcheck {

/// Parameter vectors and outcome lotteries are plain real vectors. Values fed
/// into orbit enumeration are expected to be exactly representable (integers
/// or dyadic rationals) so that deduplication by exact equality is sound.
using Vec = std::vector<double>;

/// A finite set of vectors in canonical form: lexicographically sorted with
/// exact-equality duplicates removed. All set-level operations in the library
/// assume (and preserve) this form.
using VecSet = std::vector<Vec>;

/// Absolute tolerance for strict/tie comparisons of expected utilities.
/// Integer-valued fixtures compare exactly; the tolerance only matters for
/// generic real inputs.
inline constexpr double kTieTol = 1e-9;

/// Thrown when an operation would exceed its configured enumeration bound.
class EnumerationBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void require_finite(const Vec& v, const char* what = "vector") {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + " has non-finite entry");
    }
  }
}

inline void require_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
}

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec basis(std::size_t d, std::size_t i) {
  Vec v(d, 0.0);
  v.at(i) = 1.0;
  return v;
}

inline Vec zeros(std::size_t d) { return Vec(d, 0.0); }

inline Vec negate(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

/// Sorts and removes exact duplicates, establishing the canonical set form.
inline VecSet canonical_set(VecSet xs) {
  std::sort(xs.begin(), xs.end(), lex_less);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline bool set_contains(const VecSet& xs, const Vec& v) {
  return std::binary_search(xs.begin(), xs.end(), v, lex_less);
}

inline bool is_subset(const VecSet& a, const VecSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end(), lex_less);
}

inline bool set_equal(const VecSet& a, const VecSet& b) { return a == b; }

inline VecSet set_union(const VecSet& a, const VecSet& b) {
  VecSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out), lex_less);
  return out;
}

inline VecSet set_minus(const VecSet& a, const VecSet& b) {
  VecSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out), lex_less);
  return out;
}

inline VecSet set_intersect(const VecSet& a, const VecSet& b) {
  VecSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out), lex_less);
  return out;
}

inline void require_uniform_dim(const VecSet& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    require_same_dim(xs[0], xs[i]);
  }
}

/// Shortest round-trip decimal form of a double ("10", "0.1", "-2.5").
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

inline std::string vec_to_string(const Vec& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += format_double(v[i]);
  }
  return s;
}

inline std::string set_to_string(const VecSet& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += "; ";
    s += vec_to_string(xs[i]);
  }
  s += "}";
  return s;
}

}  // namespace orbitcheck
