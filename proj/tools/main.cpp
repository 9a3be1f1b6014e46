#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "options.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Entropy-based early anomaly detection for sensor time series"};
    app.require_subcommand(1);

    eads_cli::CliOptions opts;

    CLI::App* entropy = app.add_subcommand(
        "entropy", "Per-window boundary-violation entropies and node flags");
    CLI::App* ellipse = app.add_subcommand(
        "ellipse", "Confidence-ellipse baseline over (temperature, humidity)");
    CLI::App* compare = app.add_subcommand(
        "compare", "Run both methods and compare flagged node sets");
    CLI::App* ingest = app.add_subcommand(
        "ingest-report", "Parse the input and report ingestion counters");

    for (CLI::App* sub : {entropy, ellipse, compare, ingest})
        eads_cli::add_common_options(*sub, opts);

    // config file first, explicit flags second
    if (const std::string config = eads_cli::find_config_argument(argc, argv);
        !config.empty()) {
        std::string error;
        if (!eads_cli::apply_config_file(config, opts, error)) {
            std::cerr << "error: " << error << "\n";
            return 1;
        }
    }

    CLI11_PARSE(app, argc, argv);

    if (entropy->parsed()) return eads_cli::run_entropy(opts);
    if (ellipse->parsed()) return eads_cli::run_ellipse(opts);
    if (compare->parsed()) return eads_cli::run_compare(opts);
    if (ingest->parsed()) return eads_cli::run_ingest_report(opts);

    std::cerr << app.help();
    return 1;
}
