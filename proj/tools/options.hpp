#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "eads/eads.h"

namespace CLI {
class App;
}

namespace eads_cli {

// One flag per analysis parameter; defaults are the library defaults.
struct CliOptions {
    std::string input;
    std::string out_dir = "eads_out";
    std::string start = "2004-03-01 00:00:00";
    std::string end = "2004-03-01 04:00:00";
    std::int64_t window_seconds = 600;
    std::string temp_bounds = "15.55:18.00";
    std::string hum_bounds = "42.25:45.80";
    std::string exclude_nodes = "5,15";
    double tau = 0.0;
    std::string combinator = "and";
    double confidence = 0.90;
    double log_base = 10.0;
    std::string config_path;
};

void add_common_options(CLI::App& app, CliOptions& opts);

// Looks for "--config PATH" (or --config=PATH) ahead of full parsing so the
// file can seed defaults that explicit flags then override.
std::string find_config_argument(int argc, char** argv);

// key=value lines, '#' comments; keys are the long option names without the
// leading dashes. Unknown keys and unparseable values are errors.
bool apply_config_file(const std::string& path, CliOptions& opts,
                       std::string& error);

struct ConfigDeleter {
    void operator()(eads_config* c) const { eads_config_free(c); }
};
using ConfigHandle = std::unique_ptr<eads_config, ConfigDeleter>;

struct DatasetDeleter {
    void operator()(eads_dataset* d) const { eads_dataset_free(d); }
};
using DatasetHandle = std::unique_ptr<eads_dataset, DatasetDeleter>;

struct AnalysisDeleter {
    void operator()(eads_analysis* a) const { eads_analysis_free(a); }
};
using AnalysisHandle = std::unique_ptr<eads_analysis, AnalysisDeleter>;

// Applies every option through the C API. Returns a null handle and sets
// status on the first rejected value.
ConfigHandle build_config(const CliOptions& opts, eads_status& status,
                          std::string& error);

// 0 success, 1 validation, 2 i/o, 3 degenerate data.
int exit_code_for(eads_status status);

} // namespace eads_cli
