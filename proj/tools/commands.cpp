#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <vector>

#include "csv.hpp"
#include "svg.hpp"
#include "text_format.hpp"

namespace eads_cli {

namespace {

namespace fs = std::filesystem;

// Highlighted nodes in the scatter plots; the remaining nodes share one
// style. These match the evaluation layer's default ground-truth labels.
constexpr int kFullyAnomalousNode = 37;
constexpr int kPartiallyAnomalousNode = 14;

int node_style(int node_id) {
    if (node_id == kFullyAnomalousNode) return 2;   // green
    if (node_id == kPartiallyAnomalousNode) return 1; // red
    return 0;                                         // blue
}

int fail(const char* what, eads_status status) {
    std::cerr << "error: " << what << ": " << eads_status_name(status) << " ("
              << eads_last_error() << ")\n";
    return exit_code_for(status);
}

int fail_message(const char* what, const std::string& message, int code) {
    std::cerr << "error: " << what << ": " << message << "\n";
    return code;
}

std::string iso_time(int64_t seconds) {
    char buf[32];
    if (eads_format_time(seconds, buf, sizeof buf) != EADS_OK)
        return "invalid";
    return buf;
}

bool prepare_out_dir(const std::string& dir, std::string& error) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        error = "cannot create output directory '" + dir + "': " + ec.message();
        return false;
    }
    return true;
}

// Every command drops the effective configuration next to its artifacts.
bool write_config_echo(const eads_config* config, const CliOptions& opts,
                       std::string& error) {
    size_t needed = 0;
    if (eads_config_describe(config, nullptr, 0, &needed) != EADS_OK) {
        error = eads_last_error();
        return false;
    }
    std::string text(needed, '\0');
    if (eads_config_describe(config, text.data(), text.size(), &needed) !=
        EADS_OK) {
        error = eads_last_error();
        return false;
    }
    text.resize(needed - 1);

    const fs::path path = fs::path(opts.out_dir) / "config.txt";
    std::ofstream out(path, std::ios::binary);
    out << "input = " << opts.input << "\n" << text;
    out.flush();
    if (!out) {
        error = "write failure on '" + path.string() + "'";
        return false;
    }
    return true;
}

struct LoadedRun {
    ConfigHandle config;
    DatasetHandle dataset;
    AnalysisHandle analysis;
};

// Shared front half of every command: config, out dir, dataset, analysis.
int setup_run(const CliOptions& opts, unsigned stages, LoadedRun& run) {
    eads_status status = EADS_OK;
    std::string error;
    run.config = build_config(opts, status, error);
    if (!run.config) return fail_message("invalid configuration", error,
                                         exit_code_for(status));
    if (!prepare_out_dir(opts.out_dir, error))
        return fail_message("output", error, 2);

    eads_dataset* dataset = nullptr;
    status = eads_dataset_load_file(run.config.get(), opts.input.c_str(),
                                    &dataset);
    if (status != EADS_OK) return fail("loading input", status);
    run.dataset.reset(dataset);

    eads_ingest_report report{};
    eads_dataset_report(run.dataset.get(), &report);
    std::cout << "ingest: lines_read=" << report.lines_read
              << " lines_malformed=" << report.lines_malformed
              << " records_out_of_period=" << report.records_out_of_period
              << " records_excluded_node=" << report.records_excluded_node
              << " records_kept=" << report.records_kept << "\n";

    if (stages != 0) {
        eads_analysis* analysis = nullptr;
        status = eads_analysis_run(run.dataset.get(), run.config.get(), stages,
                                   &analysis);
        if (status != EADS_OK) return fail("analysis", status);
        run.analysis.reset(analysis);
    }

    if (!write_config_echo(run.config.get(), opts, error))
        return fail_message("output", error, 2);
    return 0;
}

} // namespace

int run_entropy(const CliOptions& opts) {
    LoadedRun run;
    if (int code = setup_run(opts, EADS_STAGE_ENTROPY, run); code != 0)
        return code;

    size_t point_count = 0;
    eads_analysis_entropy_point_count(run.analysis.get(), &point_count);

    try {
        ScatterPlot plot;
        plot.title = "Window entropies per node";
        plot.x_label = "temperature entropy";
        plot.y_label = "humidity entropy";
        plot.legend = {{2, "node 37"}, {1, "node 14"}, {0, "other nodes"}};

        CsvWriter points_csv(
            (fs::path(opts.out_dir) / "entropy_points.csv").string(),
            {"node_id", "window_index", "h_temp", "h_hum", "n_temp", "n_hum",
             "violations_temp", "violations_hum", "decision"});
        for (size_t i = 0; i < point_count; ++i) {
            eads_entropy_point p{};
            eads_analysis_entropy_point(run.analysis.get(), i, &p);
            points_csv.field(p.node_id)
                .field(p.window_index)
                .field(p.h_temp)
                .field(p.h_hum)
                .field(p.n_temp)
                .field(p.n_hum)
                .field(p.violations_temp)
                .field(p.violations_hum)
                .field(std::string(p.anomalous ? "anomalous" : "normal"));
            points_csv.end_row();
            plot.points.push_back({p.h_temp, p.h_hum, node_style(p.node_id)});
        }
        points_csv.close();

        size_t summary_count = 0;
        eads_analysis_node_summary_count(run.analysis.get(), &summary_count);
        CsvWriter summary_csv(
            (fs::path(opts.out_dir) / "node_summary.csv").string(),
            {"node_id", "windows_flagged", "windows_total", "flagged"});
        size_t flagged_nodes = 0;
        for (size_t i = 0; i < summary_count; ++i) {
            eads_node_summary s{};
            eads_analysis_node_summary(run.analysis.get(), i, &s);
            summary_csv.field(s.node_id)
                .field(s.windows_flagged)
                .field(s.windows_total)
                .field(std::string(s.flagged ? "yes" : "no"));
            summary_csv.end_row();
            if (s.flagged) ++flagged_nodes;
        }
        summary_csv.close();

        write_svg((fs::path(opts.out_dir) / "entropy_scatter.svg").string(),
                  plot);

        std::cout << "entropy: " << point_count << " node-windows over "
                  << summary_count << " nodes, " << flagged_nodes
                  << " nodes flagged; artifacts in " << opts.out_dir << "\n";
    } catch (const std::exception& e) {
        return fail_message("output", e.what(), 2);
    }
    return 0;
}

int run_ellipse(const CliOptions& opts) {
    LoadedRun run;
    if (int code = setup_run(opts, EADS_STAGE_ELLIPSE, run); code != 0)
        return code;

    eads_ellipse_model model{};
    eads_analysis_ellipse_model(run.analysis.get(), &model);
    size_t point_count = 0;
    eads_analysis_ellipse_point_count(run.analysis.get(), &point_count);

    try {
        CsvWriter model_csv(
            (fs::path(opts.out_dir) / "ellipse_model.csv").string(),
            {"mean_t", "mean_h", "cov_tt", "cov_th", "cov_hh", "confidence",
             "threshold"});
        model_csv.field(model.mean_t)
            .field(model.mean_h)
            .field(model.cov_tt)
            .field(model.cov_th)
            .field(model.cov_hh)
            .field(model.confidence)
            .field(model.threshold);
        model_csv.end_row();
        model_csv.close();

        ScatterPlot plot;
        plot.title = "Temperature/humidity readings and confidence ellipse";
        plot.x_label = "temperature";
        plot.y_label = "humidity";
        plot.legend = {{2, "node 37"}, {1, "node 14"}, {0, "other nodes"}};

        CsvWriter points_csv(
            (fs::path(opts.out_dir) / "point_classification.csv").string(),
            {"node_id", "timestamp", "temperature", "humidity",
             "mahalanobis_sq", "classification"});
        size_t anomalous_points = 0;
        for (size_t i = 0; i < point_count; ++i) {
            eads_ellipse_point p{};
            eads_analysis_ellipse_point(run.analysis.get(), i, &p);
            points_csv.field(p.node_id)
                .field(iso_time(p.timestamp))
                .field(p.temperature)
                .field(p.humidity)
                .field(p.mahalanobis_sq)
                .field(std::string(p.anomalous ? "anomalous" : "normal"));
            points_csv.end_row();
            plot.points.push_back(
                {p.temperature, p.humidity, node_style(p.node_id)});
            if (p.anomalous) ++anomalous_points;
        }
        points_csv.close();

        constexpr size_t kOutlineVertices = 256;
        std::vector<double> xs(kOutlineVertices), ys(kOutlineVertices);
        eads_analysis_ellipse_boundary(run.analysis.get(), kOutlineVertices,
                                       xs.data(), ys.data());
        for (size_t i = 0; i < kOutlineVertices; ++i)
            plot.outline.emplace_back(xs[i], ys[i]);

        write_svg((fs::path(opts.out_dir) / "ellipse_scatter.svg").string(),
                  plot);

        std::cout << "ellipse: " << point_count << " points, "
                  << anomalous_points << " outside the "
                  << format_double(model.confidence * 100)
                  << "% ellipse; artifacts in " << opts.out_dir << "\n";
    } catch (const std::exception& e) {
        return fail_message("output", e.what(), 2);
    }
    return 0;
}

int run_compare(const CliOptions& opts) {
    LoadedRun run;
    if (int code = setup_run(opts, EADS_STAGE_COMPARE, run); code != 0)
        return code;

    eads_comparison comparison{};
    eads_analysis_comparison(run.analysis.get(), &comparison);
    size_t row_count = 0;
    eads_analysis_comparison_row_count(run.analysis.get(), &row_count);

    auto flagged_set = [&](eads_method method) {
        size_t count = 0;
        eads_analysis_flagged_nodes(run.analysis.get(), method, nullptr, 0,
                                    &count);
        std::vector<int32_t> ids(count);
        if (count > 0)
            eads_analysis_flagged_nodes(run.analysis.get(), method, ids.data(),
                                        ids.size(), &count);
        return ids;
    };
    const std::vector<int32_t> entropy_ids = flagged_set(EADS_METHOD_ENTROPY);
    const std::vector<int32_t> ellipse_ids = flagged_set(EADS_METHOD_ELLIPSE);

    try {
        CsvWriter csv((fs::path(opts.out_dir) / "comparison.csv").string(),
                      {"node_id", "entropy_windows_flagged",
                       "entropy_windows_total", "entropy_flagged",
                       "ellipse_points_flagged", "ellipse_points_total",
                       "ellipse_flagged", "truth_positive"});
        for (size_t i = 0; i < row_count; ++i) {
            eads_comparison_row row{};
            eads_analysis_comparison_row(run.analysis.get(), i, &row);
            csv.field(row.node_id)
                .field(row.entropy_windows_flagged)
                .field(row.entropy_windows_total)
                .field(std::string(row.entropy_flagged ? "yes" : "no"))
                .field(row.ellipse_points_flagged)
                .field(row.ellipse_points_total)
                .field(std::string(row.ellipse_flagged ? "yes" : "no"))
                .field(std::string(row.truth_positive ? "yes" : "no"));
            csv.end_row();
        }
        csv.close();

        auto render_ids = [](const std::vector<int32_t>& ids) {
            if (ids.empty()) return std::string("-");
            std::string text;
            for (int32_t id : ids) {
                if (!text.empty()) text += " ";
                text += std::to_string(id);
            }
            return text;
        };
        std::set<int32_t> ellipse_lookup(ellipse_ids.begin(), ellipse_ids.end());
        std::set<int32_t> entropy_lookup(entropy_ids.begin(), entropy_ids.end());
        std::vector<int32_t> entropy_only, ellipse_only;
        for (int32_t id : entropy_ids)
            if (!ellipse_lookup.contains(id)) entropy_only.push_back(id);
        for (int32_t id : ellipse_ids)
            if (!entropy_lookup.contains(id)) ellipse_only.push_back(id);

        auto confusion_line = [](const eads_confusion& c) {
            return "tp=" + std::to_string(c.true_positives) +
                   " fp=" + std::to_string(c.false_positives) +
                   " tn=" + std::to_string(c.true_negatives) +
                   " fn=" + std::to_string(c.false_negatives);
        };

        std::string text;
        text += "nodes analyzed: " + std::to_string(comparison.nodes_analyzed) + "\n";
        text += "entropy flagged (" + std::to_string(entropy_ids.size()) +
                "): " + render_ids(entropy_ids) + "\n";
        text += "ellipse flagged (" + std::to_string(ellipse_ids.size()) +
                "): " + render_ids(ellipse_ids) + "\n";
        text += "flagged by entropy only (" + std::to_string(entropy_only.size()) +
                "): " + render_ids(entropy_only) + "\n";
        text += "flagged by ellipse only (" + std::to_string(ellipse_only.size()) +
                "): " + render_ids(ellipse_only) + "\n";
        text += "entropy confusion: " + confusion_line(comparison.entropy_confusion) + "\n";
        text += "ellipse confusion: " + confusion_line(comparison.ellipse_confusion) + "\n";
        text += std::string("fully-anomalous nodes completely covered by entropy: ") +
                (comparison.entropy_full_coverage ? "yes" : "no") + "\n";

        const fs::path txt_path = fs::path(opts.out_dir) / "comparison.txt";
        std::ofstream txt(txt_path, std::ios::binary);
        txt << text;
        txt.flush();
        if (!txt)
            return fail_message("output",
                                "write failure on '" + txt_path.string() + "'", 2);
        std::cout << text;
    } catch (const std::exception& e) {
        return fail_message("output", e.what(), 2);
    }
    return 0;
}

int run_ingest_report(const CliOptions& opts) {
    LoadedRun run;
    if (int code = setup_run(opts, 0, run); code != 0) return code;

    eads_ingest_report report{};
    eads_dataset_report(run.dataset.get(), &report);

    const uint64_t categorized = report.lines_malformed +
                                 report.records_out_of_period +
                                 report.records_excluded_node +
                                 report.records_kept;
    if (categorized != report.lines_read)
        return fail_message("ingest",
                            "report categories do not sum to lines_read", 1);

    std::string text;
    text += "lines_read = " + std::to_string(report.lines_read) + "\n";
    text += "lines_malformed = " + std::to_string(report.lines_malformed) + "\n";
    text += "records_out_of_period = " +
            std::to_string(report.records_out_of_period) + "\n";
    text += "records_excluded_node = " +
            std::to_string(report.records_excluded_node) + "\n";
    text += "records_kept = " + std::to_string(report.records_kept) + "\n";

    const fs::path path = fs::path(opts.out_dir) / "ingest_report.txt";
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.flush();
    if (!out)
        return fail_message("output", "write failure on '" + path.string() + "'",
                            2);
    std::cout << text;
    if (report.records_kept == 0)
        std::cerr << "warning: no records kept after filtering\n";
    return 0;
}

} // namespace eads_cli
