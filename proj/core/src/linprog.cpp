#include "orbitcheck/linprog.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace orbitcheck {

namespace {

constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense tableau simplex (Bland-style tie-breaking on labels), after the
// KACTL codebook solver.
class Simplex {
 public:
  Simplex(const std::vector<Vec>& A, const Vec& b, const Vec& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        nonbasic_(static_cast<std::size_t>(n_) + 1),
        basic_(static_cast<std::size_t>(m_)),
        tab_(static_cast<std::size_t>(m_) + 2,
             Vec(static_cast<std::size_t>(n_) + 2)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) tab_[i][j] = A[i][j];
    }
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      tab_[i][n_] = -1;
      tab_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      tab_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    tab_[m_ + 1][n_] = 1;
  }

  double solve(Vec& x) {
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (tab_[i][n_ + 1] < tab_[r][n_ + 1]) r = i;
    }
    if (tab_[r][n_ + 1] < -kEps) {
      pivot(r, n_);
      if (!iterate(2) || tab_[m_ + 1][n_ + 1] < -kEps) return -kInf;
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] == -1) {
          int s = 0;
          for (int j = 1; j <= n_; ++j) {
            if (better(i, j, s)) s = j;
          }
          pivot(i, s);
        }
      }
    }
    bool bounded = iterate(1);
    x.assign(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[static_cast<std::size_t>(basic_[i])] = tab_[i][n_ + 1];
    }
    return bounded ? tab_[m_][n_ + 1] : kInf;
  }

 private:
  bool better(int row, int j, int s) const {
    return std::pair(tab_[row][j], nonbasic_[j]) <
           std::pair(tab_[row][s], nonbasic_[s]);
  }

  void pivot(int r, int s) {
    Vec& row = tab_[static_cast<std::size_t>(r)];
    double inv = 1.0 / row[s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(tab_[i][s]) <= kEps) continue;
      Vec& other = tab_[static_cast<std::size_t>(i)];
      double factor = other[s] * inv;
      for (int j = 0; j < n_ + 2; ++j) other[j] -= row[j] * factor;
      other[s] = row[s] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) row[j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) tab_[i][s] *= -inv;
    }
    row[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  bool iterate(int phase) {
    int obj = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (s == -1 || better(obj, j, s)) s = j;
      }
      if (tab_[obj][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][s] <= kEps) continue;
        if (r == -1 ||
            std::pair(tab_[i][n_ + 1] / tab_[i][s], basic_[i]) <
                std::pair(tab_[r][n_ + 1] / tab_[r][s], basic_[r])) {
          r = i;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_, n_;
  std::vector<int> nonbasic_, basic_;
  std::vector<Vec> tab_;
};

}  // namespace

LpResult solve_lp(const std::vector<Vec>& A, const Vec& b, const Vec& c) {
  if (A.size() != b.size()) throw std::invalid_argument("A/b size mismatch");
  for (const Vec& row : A) {
    if (row.size() != c.size()) throw std::invalid_argument("A/c size mismatch");
  }
  LpResult res;
  if (A.empty()) {
    // No constraints: optimum is 0 iff c <= 0, else unbounded.
    res.x.assign(c.size(), 0.0);
    for (double cj : c) {
      if (cj > kEps) {
        res.status = LpResult::Status::kUnbounded;
        return res;
      }
    }
    res.status = LpResult::Status::kOptimal;
    res.value = 0.0;
    return res;
  }
  Simplex solver(A, b, c);
  Vec x;
  double value = solver.solve(x);
  if (value == -kInf) {
    res.status = LpResult::Status::kInfeasible;
  } else if (value == kInf) {
    res.status = LpResult::Status::kUnbounded;
  } else {
    res.status = LpResult::Status::kOptimal;
    res.value = value;
    res.x = std::move(x);
  }
  return res;
}

double strict_margin(const Vec& x, const std::vector<Vec>& competitors) {
  if (competitors.empty()) {
    throw std::invalid_argument("strict_margin requires competitors");
  }
  const std::size_t d = x.size();
  // Variables: p (d), q (d), dp, dm with r = p - q, delta = dp - dm.
  // Constraints: (x' - x).p + (x - x').q + dp - dm <= 0  for each competitor,
  // and p_j <= 1, q_j <= 1 which bound |r|_inf by 1.
  const std::size_t nvars = 2 * d + 2;
  std::vector<Vec> A;
  Vec b;
  for (const Vec& other : competitors) {
    require_same_dim(x, other);
    Vec row(nvars, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = other[j] - x[j];
      row[d + j] = x[j] - other[j];
    }
    row[2 * d] = 1.0;
    row[2 * d + 1] = -1.0;
    A.push_back(std::move(row));
    b.push_back(0.0);
  }
  for (std::size_t j = 0; j < 2 * d; ++j) {
    Vec row(nvars, 0.0);
    row[j] = 1.0;
    A.push_back(std::move(row));
    b.push_back(1.0);
  }
  Vec c(nvars, 0.0);
  c[2 * d] = 1.0;
  c[2 * d + 1] = -1.0;

  LpResult res = solve_lp(A, b, c);
  if (res.status != LpResult::Status::kOptimal) {
    throw std::runtime_error("strict_margin: solver failed (status != optimal)");
  }
  return res.value;
}

}  // namespace orbitcheck
