#pragma once

#include <string>
#include <vector>

#include "orbitcheck/tendency.hpp"
#include "orbitcheck/vec.hpp"

namespace orbitcheck {

enum class TableId { kPermuteStates, kRationalities, kCounterexample };
enum class TableFormat { kText, kCsv };

TableId parse_table_id(const std::string& name);
std::string table_id_name(TableId id);

/// Regenerates one of the reference tables (golden-file compared in tests).
std::string reproduce_table(TableId id, TableFormat format = TableFormat::kText);

/// The six parameter columns shared by the reference tables: the orbit of
/// (10, 5, 0) in descending lexicographic order.
std::vector<Vec> reference_orbit_columns();

/// The tabular counterexample fixture: a function on four outcome sets over a
/// six-element orbit that satisfies the first three general orbit conditions
/// but violates the fourth, so its n=2 counting claim fails while n=1 holds.
struct CounterexampleFixture {
  TabularDecisionFunction f;
  VecSet A;                      // {e1}
  VecSet B;                      // {e2, e3}
  std::vector<VecSet> b_stars;   // {e2}, {e3}
  std::vector<Permutation> phis; // swaps 0<->1 and 0<->2
  std::vector<Vec> row_order;    // orbit elements in presentation order
  Vec theta_star;                // (3, 2, 1)
};

CounterexampleFixture counterexample_fixture();

}  // namespace orbitcheck
