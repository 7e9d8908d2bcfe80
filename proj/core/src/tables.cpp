#include "orbitcheck/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "orbitcheck/decisions.hpp"

namespace orbitcheck {

TableId parse_table_id(const std::string& name) {
  if (name == "permute-states") return TableId::kPermuteStates;
  if (name == "rationalities") return TableId::kRationalities;
  if (name == "counterexample") return TableId::kCounterexample;
  throw std::invalid_argument("unknown table id: " + name);
}

std::string table_id_name(TableId id) {
  switch (id) {
    case TableId::kPermuteStates: return "permute-states";
    case TableId::kRationalities: return "rationalities";
    case TableId::kCounterexample: return "counterexample";
  }
  return "?";
}

std::vector<Vec> reference_orbit_columns() {
  std::vector<Vec> cols;
  Vec v{0, 5, 10};
  do {
    cols.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::reverse(cols.begin(), cols.end());
  return cols;
}

namespace {

// Cell format used by the probability tables: integers print bare, other
// values print to three decimals with the leading zero stripped (".993",
// ".5"); sub-half-milli values keep the explicit ".000".
std::string format_cell(double v) {
  double r3 = std::round(v * 1000.0) / 1000.0;
  if (r3 == 1.0) return "1";
  if (v == 0.0) return "0";
  if (r3 == 0.0) return ".000";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s.rfind("0.", 0) == 0) s = s.substr(1);
  return s;
}

std::string format_exact(double v) {
  if (v == std::round(v)) return std::to_string(static_cast<long long>(v));
  return format_cell(v);
}

struct TableWriter {
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

  std::string render(TableFormat format) const {
    if (format == TableFormat::kCsv) {
      std::string out;
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out += ",";
          if (row[i].find(',') != std::string::npos) {
            out += "\"" + row[i] + "\"";
          } else {
            out += row[i];
          }
        }
        out += "\n";
      }
      return out;
    }
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
      if (widths.size() < row.size()) widths.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        widths[i] = std::max(widths[i], row[i].size());
      }
    }
    std::string out;
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += "  ";
        std::size_t pad = widths[i] - row[i].size();
        if (i == 0) {
          out += row[i] + std::string(pad, ' ');
        } else {
          out += std::string(pad, ' ') + row[i];
        }
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      out += "\n";
    }
    return out;
  }
};

std::string column_label(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_exact(v[i]);
  }
  return s + ")";
}

std::string permute_states_table(TableFormat format) {
  const Vec u{10, 5, 0};
  const Vec u_prime{10, 0, 5};
  const Permutation ghost_apple = Permutation::transposition(3, 0, 1);
  const Permutation ghost_cherry = Permutation::transposition(3, 0, 2);
  const std::vector<std::pair<std::string, Vec>> rows = {
      {"u", u},
      {"ghost<->apple . u", ghost_apple.act(u)},
      {"ghost<->cherry . u", ghost_cherry.act(u)},
      {"u'", u_prime},
      {"ghost<->apple . u'", ghost_apple.act(u_prime)},
      {"ghost<->cherry . u'", ghost_cherry.act(u_prime)},
  };
  const std::vector<std::string> outcome_names = {"ghost", "apple", "cherry"};

  TableWriter table;
  table.add_row({"utility function", "ghost", "apple", "cherry", "argmax"});
  for (const auto& [label, vec] : rows) {
    auto arg = static_cast<std::size_t>(
        std::max_element(vec.begin(), vec.end()) - vec.begin());
    table.add_row({label, format_exact(vec[0]), format_exact(vec[1]),
                   format_exact(vec[2]), outcome_names[arg]});
  }
  return table.render(format);
}

std::string rationalities_table(TableFormat format) {
  const VecSet C = canonical_set({basis(3, 0), basis(3, 1), basis(3, 2)});
  const VecSet ghost_apple = canonical_set({basis(3, 0), basis(3, 1)});
  const VecSet cherry = {basis(3, 2)};
  const std::vector<Vec> cols = reference_orbit_columns();

  TableWriter table;
  std::vector<std::string> header = {"f"};
  for (const Vec& c : cols) header.push_back(column_label(c));
  table.add_row(header);

  auto add_rows = [&](const std::string& name,
                      const std::function<double(const VecSet&, const Vec&)>& f) {
    std::vector<std::string> row1 = {name + "[ghost+apple]"};
    std::vector<std::string> row2 = {name + "[cherry]"};
    for (const Vec& u : cols) {
      row1.push_back(format_cell(f(ghost_apple, u)));
      row2.push_back(format_cell(f(cherry, u)));
    }
    table.add_row(row1);
    table.add_row(row2);
  };

  add_rows("optimal", [&](const VecSet& X, const Vec& u) {
    return is_optimal(X, C, u);
  });
  add_rows("anti-optimal", [&](const VecSet& X, const Vec& u) {
    return is_anti_optimal(X, C, u);
  });
  add_rows("boltzmann(T=1)", [&](const VecSet& X, const Vec& u) {
    return boltzmann(X, C, u, 1.0);
  });
  add_rows("satisficer(t=3)", [&](const VecSet& X, const Vec& u) {
    return satisfice(X, C, u, 3.0);
  });
  return table.render(format);
}

std::string counterexample_table(TableFormat format) {
  CounterexampleFixture fx = counterexample_fixture();
  const std::vector<std::string> row_labels = {
      "theta'  = (1,3,2)", "phi1.theta' = (3,1,2)", "phi2.theta' = (2,3,1)",
      "theta'' = (2,1,3)", "phi1.theta'' = (1,2,3)", "theta*  = (3,2,1)",
  };
  TableWriter table;
  table.add_row({"parameter", "f[ghost]", "f[apple]", "f[cherry]",
                 "f[apple+cherry]"});
  for (std::size_t i = 0; i < fx.row_order.size(); ++i) {
    const Vec& theta = fx.row_order[i];
    table.add_row({row_labels[i], format_exact(fx.f(fx.A, theta)),
                   format_exact(fx.f(fx.b_stars[0], theta)),
                   format_exact(fx.f(fx.b_stars[1], theta)),
                   format_exact(fx.f(fx.B, theta))});
  }
  return table.render(format);
}

}  // namespace

std::string reproduce_table(TableId id, TableFormat format) {
  switch (id) {
    case TableId::kPermuteStates: return permute_states_table(format);
    case TableId::kRationalities: return rationalities_table(format);
    case TableId::kCounterexample: return counterexample_table(format);
  }
  throw std::logic_error("unknown table id");
}

CounterexampleFixture counterexample_fixture() {
  CounterexampleFixture fx;
  fx.A = {basis(3, 0)};
  fx.b_stars = {{basis(3, 1)}, {basis(3, 2)}};
  fx.B = canonical_set({basis(3, 1), basis(3, 2)});
  fx.phis = {Permutation::transposition(3, 0, 1),
             Permutation::transposition(3, 0, 2)};
  fx.theta_star = Vec{3, 2, 1};
  fx.row_order = {Vec{1, 3, 2}, Vec{3, 1, 2}, Vec{2, 3, 1},
                  Vec{2, 1, 3}, Vec{1, 2, 3}, Vec{3, 2, 1}};
  // Rows preferring A score (1, 0, 0, 0); the rest score (0, 2, 2, 2).
  const std::vector<bool> prefers_a = {true, false, false, true, false, true};
  for (std::size_t i = 0; i < fx.row_order.size(); ++i) {
    const Vec& theta = fx.row_order[i];
    double a_val = prefers_a[i] ? 1.0 : 0.0;
    double rest = prefers_a[i] ? 0.0 : 2.0;
    fx.f.define(fx.A, theta, a_val);
    fx.f.define(fx.b_stars[0], theta, rest);
    fx.f.define(fx.b_stars[1], theta, rest);
    fx.f.define(fx.B, theta, rest);
  }
  return fx;
}

}  // namespace orbitcheck
