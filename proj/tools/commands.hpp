#pragma once

#include "options.hpp"

namespace eads_cli {

// Each command returns a process exit code: 0 success, 1 validation error,
// 2 i/o error, 3 degenerate-data error.

// entropy_points.csv, node_summary.csv, entropy_scatter.svg
int run_entropy(const CliOptions& opts);

// ellipse_model.csv, point_classification.csv, ellipse_scatter.svg
int run_ellipse(const CliOptions& opts);

// comparison.csv, comparison.txt
int run_compare(const CliOptions& opts);

// ingest_report.txt
int run_ingest_report(const CliOptions& opts);

} // namespace eads_cli
