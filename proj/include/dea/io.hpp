#pragma once

#include "dea/dataset.hpp"
#include "dea/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dea {

/// Sidecar metadata written next to a dataset file as "key: value" lines.
struct Manifest {
  std::string name;
  Index n = 0;
  Index m1 = 0;
  Index m2 = 0;
  uint64_t seed = 0;
  Real target_density = 0;
  std::optional<Index> frame_size;  // realized |F| when measured
  std::optional<Real> realized_density;
};

/// UTF-8 CSV with header x1..x{m1},y1..y{m2}, one DMU per line. Values are
/// rendered shortest-round-trip, so write -> read reproduces the dataset
/// bit-exactly.
void write_dataset_csv(const Dataset& dataset, const std::string& path);
Dataset read_dataset_csv(const std::string& path,
                         const std::string& name_hint = "");

std::string manifest_path_for(const std::string& dataset_path);
void write_manifest(const Manifest& manifest, const std::string& path);
std::optional<Manifest> read_manifest(const std::string& path);

/// One benchmark run; appended to a results file as a JSON line.
struct RunRecord {
  std::string dataset;
  std::string procedure;   // buildhull | ehd | oracle
  std::string pivot_rule;  // primal | dual
  Index n = 0, m1 = 0, m2 = 0;
  Index m_hat = 0;
  Index p = 0;  // ehd initializing-subset cardinality
  uint64_t seed = 0;
  std::string timestamp;  // ISO 8601 UTC
  Real preprocess_time = 0;
  Real phase1_time = 0;
  Real phase2_time = 0;
  Real total_time = 0;
  Index frame_size = 0;     // realized |F|
  Index boundary_size = 0;  // |B|
  long total_lps = 0;
  // buildhull metrics
  Real avg_lp_size = 0;
  long hyperplane_translations = 0;
  long inner_products = 0;
  Real translation_time = 0;
  // ehd metrics
  Index lp_size_step2 = 0, lp_size_step3 = 0, lp_size_step4 = 0;
  long lp_count_step2 = 0, lp_count_step3 = 0, num_lps_step4 = 0;
  long aux_lps = 0;
  long productivity = 0;
  // phase 2, when included
  Index phase2_lp_size = 0;
  long phase2_lps = 0;
};

std::string utc_timestamp();
void append_run_record(const RunRecord& record, const std::string& results_path);

/// Reads a results file, skipping malformed lines (count reported through
/// `skipped` when non-null).
std::vector<RunRecord> read_run_records(const std::string& results_path,
                                        int* skipped = nullptr);

}  // namespace dea
