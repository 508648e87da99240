// One-command reproduction of the benchmark grids as machine-readable
// output:
//   table 1 - exact minimum coverage of classically designed intervals
//             under contamination, over an (n, eps) grid at two levels;
//   tables 2 and 3 - exact coverage plus simulated expected lengths for
//             the robust design at ~95% and ~90% levels;
//   table 4 - analytic length comparison of the parametric and
//             nonparametric robust intervals.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robustmedian/monte_carlo.hpp"

namespace robmed {

enum class TableFormat { Text, Csv, Json };

TableFormat table_format_from_name(const std::string& name);

struct TableRequest {
  int which = 1;
  std::vector<std::int64_t> n_grid;  // empty -> table defaults
  std::vector<double> eps_grid;      // empty -> table defaults
  std::vector<double> levels;        // empty -> table defaults
  std::int64_t reps = 8000;
  std::uint64_t seed = 1;
  double contamination_value = std::numeric_limits<double>::quiet_NaN();
  int workers = 1;
};

struct Table1Row {
  std::int64_t n = 0;
  double alpha_target = 0.0;
  double eps = 0.0;
  std::int64_t k = 0;  // chosen by the classical (eps = 0) rule
  double min_coverage = 0.0;
};

struct Table23Row {
  std::int64_t n = 0;
  double eps = 0.0;
  std::int64_t k = 0;  // chosen at the design eps
  double alpha_achieved = 0.0;
  double cp_exact = 0.0;
  double elu_mean = 0.0;
  double elu_se = 0.0;
  bool has_elc = false;  // delta = eps run is skipped when eps = 0
  double elc_mean = 0.0;
  double elc_se = 0.0;
  std::int64_t elc_infinite = 0;
};

struct Table4Row {
  double eps = 0.0;
  double parametric = 0.0;
  double np_standard_normal = 0.0;
  double np_least_favorable = 0.0;
};

std::vector<Table1Row> table1(const TableRequest& req);
// alpha comes from req.which: 2 -> 0.05, 3 -> 0.10 (or req.levels[0]).
std::vector<Table23Row> table23(const TableRequest& req);
std::vector<Table4Row> table4(const TableRequest& req);

std::string render_table1(const std::vector<Table1Row>& rows,
                          TableFormat format);
std::string render_table23(const std::vector<Table23Row>& rows,
                           TableFormat format, double alpha_target);
std::string render_table4(const std::vector<Table4Row>& rows,
                          TableFormat format);

// Runs the requested table and renders it; the single CLI entry point.
std::string run_table(const TableRequest& req, TableFormat format);

}  // namespace robmed
