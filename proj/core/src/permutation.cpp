#include "orbitcheck/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitcheck {

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  const int d = degree();
  if (d == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int image : mapping_) {
    if (image < 0 || image >= d || seen[static_cast<std::size_t>(image)]) {
      throw std::invalid_argument("mapping is not a bijection on {0..d-1}");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> m(static_cast<std::size_t>(d));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(int d, int i, int j) {
  Permutation p = identity(d);
  if (i < 0 || j < 0 || i >= d || j >= d) {
    throw std::invalid_argument("transposition index out of range");
  }
  std::swap(p.mapping_[static_cast<std::size_t>(i)],
            p.mapping_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::parse(const std::string& csv_mapping) {
  std::vector<int> m;
  std::stringstream ss(csv_mapping);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    m.push_back(v);
  }
  return Permutation(std::move(m));
}

Permutation Permutation::compose(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("dimension mismatch");
  std::vector<int> m(mapping_.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    m[j] = mapping_[static_cast<std::size_t>(q.mapping_[j])];
  }
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> m(mapping_.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    m[static_cast<std::size_t>(mapping_[j])] = static_cast<int>(j);
  }
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < mapping_.size(); ++j) {
    if (mapping_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t j = 0; j < mapping_.size(); ++j) {
    if (mapping_[static_cast<std::size_t>(mapping_[j])] != static_cast<int>(j)) {
      return false;
    }
  }
  return true;
}

int Permutation::support_size() const {
  int n = 0;
  for (std::size_t j = 0; j < mapping_.size(); ++j) {
    if (mapping_[j] != static_cast<int>(j)) ++n;
  }
  return n;
}

Vec Permutation::act(const Vec& v) const {
  if (static_cast<int>(v.size()) != degree()) {
    throw std::invalid_argument("dimension mismatch");
  }
  Vec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[static_cast<std::size_t>(mapping_[j])] = v[j];
  }
  return out;
}

VecSet Permutation::act(const VecSet& xs) const {
  VecSet out;
  out.reserve(xs.size());
  for (const Vec& x : xs) out.push_back(act(x));
  return canonical_set(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < mapping_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(mapping_[j]);
  }
  return s;
}

std::uint64_t factorial_checked(int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  std::uint64_t f = 1;
  for (int i = 2; i <= d; ++i) {
    if (f > UINT64_MAX / static_cast<std::uint64_t>(i)) {
      throw EnumerationBoundError("factorial overflow");
    }
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

std::vector<Permutation> all_permutations(int d, std::uint64_t bound) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  std::uint64_t count;
  try {
    count = factorial_checked(d);
  } catch (const EnumerationBoundError&) {
    throw EnumerationBoundError("permutation enumeration bound exceeded");
  }
  if (count > bound) {
    throw EnumerationBoundError("permutation enumeration bound exceeded: d=" +
                                std::to_string(d));
  }
  std::vector<int> m(static_cast<std::size_t>(d));
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(count));
  do {
    out.push_back(Permutation(m));
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

namespace {

void build_involutions(std::vector<int>& m, std::vector<bool>& used, int next,
                       std::vector<std::vector<int>>& out) {
  const int d = static_cast<int>(m.size());
  while (next < d && used[static_cast<std::size_t>(next)]) ++next;
  if (next == d) {
    out.push_back(m);
    return;
  }
  // Fix `next`.
  used[static_cast<std::size_t>(next)] = true;
  m[static_cast<std::size_t>(next)] = next;
  build_involutions(m, used, next + 1, out);
  used[static_cast<std::size_t>(next)] = false;
  // Or pair it with a later free point.
  for (int j = next + 1; j < d; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(next)] = true;
    used[static_cast<std::size_t>(j)] = true;
    m[static_cast<std::size_t>(next)] = j;
    m[static_cast<std::size_t>(j)] = next;
    build_involutions(m, used, next + 1, out);
    used[static_cast<std::size_t>(next)] = false;
    used[static_cast<std::size_t>(j)] = false;
  }
}

}  // namespace

std::vector<Permutation> enumerate_involutions(int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d > 10) {
    throw EnumerationBoundError("involution enumeration requires d <= 10");
  }
  std::vector<std::vector<int>> raw;
  std::vector<int> m(static_cast<std::size_t>(d));
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  build_involutions(m, used, 0, raw);

  std::vector<Permutation> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.push_back(Permutation(std::move(v)));
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    int sa = a.support_size(), sb = b.support_size();
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

ParameterDomain::ParameterDomain(Kind kind) : conjuncts_{kind} {}

ParameterDomain::ParameterDomain(std::vector<Kind> conjuncts)
    : conjuncts_(std::move(conjuncts)) {
  if (conjuncts_.empty()) conjuncts_.push_back(Kind::kAll);
}

namespace {

bool all_positive(const Vec& v) {
  for (double x : v) {
    if (!(x > 0.0)) return false;
  }
  return true;
}

bool all_unique(const Vec& v) {
  Vec sorted = v;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool ParameterDomain::contains(const Vec& v) const {
  for (Kind k : conjuncts_) {
    switch (k) {
      case Kind::kAll:
        break;
      case Kind::kPositiveOrthant:
        if (!all_positive(v)) return false;
        break;
      case Kind::kUniqueEntries:
        if (!all_unique(v)) return false;
        break;
      case Kind::kPositiveAndUnique:
        if (!all_positive(v) || !all_unique(v)) return false;
        break;
    }
  }
  return true;
}

std::string ParameterDomain::name() const {
  auto kind_name = [](Kind k) -> std::string {
    switch (k) {
      case Kind::kAll: return "all";
      case Kind::kPositiveOrthant: return "positive-orthant";
      case Kind::kUniqueEntries: return "unique-entries";
      case Kind::kPositiveAndUnique: return "positive-and-unique";
    }
    return "?";
  };
  std::string s;
  for (std::size_t i = 0; i < conjuncts_.size(); ++i) {
    if (i) s += "&";
    s += kind_name(conjuncts_[i]);
  }
  return s;
}

ParameterDomain ParameterDomain::parse(const std::string& name) {
  std::vector<Kind> kinds;
  std::stringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, '&')) {
    // trim
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    if (tok == "all") {
      kinds.push_back(Kind::kAll);
    } else if (tok == "positive-orthant") {
      kinds.push_back(Kind::kPositiveOrthant);
    } else if (tok == "unique-entries") {
      kinds.push_back(Kind::kUniqueEntries);
    } else if (tok == "positive-and-unique") {
      kinds.push_back(Kind::kPositiveAndUnique);
    } else {
      throw std::invalid_argument("unknown domain predicate: " + tok);
    }
  }
  if (kinds.empty()) throw std::invalid_argument("empty domain name");
  return ParameterDomain(std::move(kinds));
}

Orbit enumerate_orbit(const Vec& v, const ParameterDomain& domain,
                      std::uint64_t bound) {
  require_finite(v, "parameter vector");
  const int d = static_cast<int>(v.size());
  if (d < 1) throw std::invalid_argument("empty parameter vector");
  std::uint64_t count;
  try {
    count = factorial_checked(d);
  } catch (const EnumerationBoundError&) {
    count = bound + 1;
  }
  if (count > bound) {
    throw EnumerationBoundError(
        "orbit enumeration bound exceeded: d=" + std::to_string(d) +
        "; use a sampled mode instead");
  }
  Orbit orbit;
  orbit.source = v;
  orbit.domain = domain;
  // Iterating next_permutation from the sorted arrangement yields every
  // distinct rearrangement exactly once, in ascending lexicographic order, so
  // duplicate entries deduplicate for free.
  Vec cur = v;
  std::sort(cur.begin(), cur.end());
  do {
    if (domain.contains(cur)) orbit.elements.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  return orbit;
}

}  // namespace orbitcheck
