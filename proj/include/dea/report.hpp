#pragma once

#include "dea/io.hpp"

#include <string>
#include <vector>

namespace dea {

/// Writes the per-procedure tables, the head-to-head comparison, and the
/// long-format sweep files under `out_dir`:
///   buildhull_table.csv, ehd_table.csv, comparison.csv,
///   plot_time_vs_density.csv, plot_time_vs_cardinality.csv,
///   plot_time_vs_dimension.csv
/// Returns the number of records used.
int write_reports(const std::vector<RunRecord>& records,
                  const std::string& out_dir);

}  // namespace dea
