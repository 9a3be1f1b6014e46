#include "core/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "core/civil_time.hpp"
#include "core/error.hpp"
#include "core/windowing.hpp"

namespace eads::pipeline {

namespace {

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

struct SeriesWindowStats {
    double h;
    int n;
    int violations;
};

// window_index -> per-window entropy for one (node, series) stream.
std::map<std::int64_t, SeriesWindowStats> window_stats(
    const std::vector<windowing::TimedReading>& readings,
    const windowing::SeriesKey& key, const windowing::WindowSpec& spec,
    const entropy::BoundaryRange& bounds, double log_base) {
    std::map<std::int64_t, SeriesWindowStats> stats;
    auto partitioned = windowing::partition(readings, key, spec);
    for (const auto& window : partitioned.windows) {
        const auto indicators = entropy::classify_window(window.samples, bounds);
        const double h = entropy::entropy(
            entropy::probabilities(
                entropy::accumulate(entropy::cumulative_states(indicators))),
            log_base);
        stats[window.index] = {h, static_cast<int>(window.samples.size()),
                               entropy::count_violations(indicators)};
    }
    return stats;
}

} // namespace

RunConfig::RunConfig()
    : period_start(civil::parse_timestamp("2004-03-01 00:00:00")),
      period_end(civil::parse_timestamp("2004-03-01 04:00:00")) {}

void validate(const RunConfig& config) {
    if (config.period_start >= config.period_end)
        throw_invalid("analysis period start must precede its end");
    if (config.window_seconds <= 0)
        throw_invalid("window width must be positive");
    if (!(config.confidence > 0.0) || !(config.confidence < 1.0))
        throw_invalid("confidence must lie strictly between 0 and 1");
    if (!(config.log_base > 0.0) || config.log_base == 1.0)
        throw_invalid("logarithm base must be positive and != 1");
    if (!std::isfinite(config.rule.tau) || config.rule.tau < 0.0)
        throw_invalid("decision threshold tau must be finite and >= 0");
    if (config.max_node_id < 1)
        throw_invalid("max node id must be at least 1");
    for (int id : config.excluded_nodes)
        if (id < 1 || id > config.max_node_id)
            throw_invalid("excluded node " + std::to_string(id) +
                          " outside [1, " + std::to_string(config.max_node_id) +
                          "]");
    for (int id : config.truth.fully_anomalous)
        if (config.truth.partially_anomalous.contains(id))
            throw_invalid("ground-truth sets must be disjoint");
    // BoundaryRange construction already validated the bounds themselves.
}

ibrl::DatasetFilter dataset_filter(const RunConfig& config) {
    return {config.period_start, config.period_end, config.excluded_nodes,
            config.max_node_id};
}

std::string describe(const RunConfig& config) {
    std::string text;
    auto line = [&](const std::string& key, const std::string& value) {
        text += key + " = " + value + "\n";
    };
    line("period_start", civil::format_timestamp(config.period_start));
    line("period_end", civil::format_timestamp(config.period_end));
    line("window_seconds", std::to_string(config.window_seconds));
    line("temperature_bounds", format_double(config.temp_bounds.lower) + ":" +
                                   format_double(config.temp_bounds.upper));
    line("humidity_bounds", format_double(config.hum_bounds.lower) + ":" +
                                format_double(config.hum_bounds.upper));
    std::string excluded;
    for (int id : config.excluded_nodes) {
        if (!excluded.empty()) excluded += ",";
        excluded += std::to_string(id);
    }
    line("excluded_nodes", excluded);
    line("max_node_id", std::to_string(config.max_node_id));
    line("tau", format_double(config.rule.tau));
    line("combinator", config.rule.combinator == eval::Combinator::both_exceed
                           ? "and"
                           : "or");
    line("confidence", format_double(config.confidence));
    line("log_base", format_double(config.log_base));
    return text;
}

AnalysisResult run_analysis(const std::vector<ibrl::RawRecord>& records,
                            const RunConfig& config, unsigned stages) {
    validate(config);
    AnalysisResult result;
    const windowing::WindowSpec spec(config.period_start, config.period_end,
                                     config.window_seconds);

    if (stages & kStageEntropy) {
        const auto series = ibrl::group_series(records);
        std::set<int> nodes;
        for (const auto& [key, readings] : series)
            nodes.insert(key.node_id);

        for (int node : nodes) {
            using windowing::Series;
            auto temp_it = series.find({node, Series::temperature});
            auto hum_it = series.find({node, Series::humidity});
            if (temp_it == series.end() || hum_it == series.end())
                continue;
            const auto temp_stats =
                window_stats(temp_it->second, temp_it->first, spec,
                             config.temp_bounds, config.log_base);
            const auto hum_stats =
                window_stats(hum_it->second, hum_it->first, spec,
                             config.hum_bounds, config.log_base);
            // A plotted point needs both coordinates, so only window indices
            // present in both series pair up.
            for (const auto& [index, temp] : temp_stats) {
                auto hum = hum_stats.find(index);
                if (hum == hum_stats.end())
                    continue;
                result.entropy_points.push_back(
                    {node, index, temp.h, hum->second.h, temp.n, hum->second.n,
                     temp.violations, hum->second.violations});
            }
        }
        if (result.entropy_points.empty())
            throw_empty("no analyzable windows: no node has temperature and "
                        "humidity data in a common window");
        result.anomalous.reserve(result.entropy_points.size());
        for (const auto& point : result.entropy_points)
            result.anomalous.push_back(decide(point, config.rule) ? 1 : 0);
        result.node_summaries = eval::summarize(result.entropy_points, config.rule);
    }

    if (stages & kStageEllipse) {
        auto points = ibrl::paired_points(records);
        if (points.empty())
            throw_empty("no temperature/humidity point pairs to fit");
        std::stable_sort(points.begin(), points.end(),
                         [](const ibrl::SensorPoint& a, const ibrl::SensorPoint& b) {
                             return a.node_id != b.node_id
                                        ? a.node_id < b.node_id
                                        : a.timestamp < b.timestamp;
                         });
        std::vector<ellipse::Point2> coords;
        coords.reserve(points.size());
        for (const auto& p : points)
            coords.push_back({p.temperature, p.humidity});

        EllipseResult ellipse_result;
        ellipse_result.model = ellipse::fit(coords, config.confidence);
        ellipse_result.threshold = ellipse::threshold(config.confidence);
        ellipse_result.points.reserve(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double d2 = ellipse::mahalanobis_sq(coords[i], ellipse_result.model);
            ellipse_result.points.push_back(
                {points[i].node_id, points[i].timestamp, points[i].temperature,
                 points[i].humidity, d2,
                 ellipse::is_outside(d2, ellipse_result.threshold)});
        }
        result.ellipse = std::move(ellipse_result);
    }

    if ((stages & kStageCompare) == kStageCompare) {
        // compare() requires one common node universe. A node can in
        // principle reach only one method (windows pair across records,
        // ellipse points pair within a record), so the comparison runs on
        // the intersection.
        std::set<int> entropy_nodes, ellipse_nodes;
        for (const auto& s : result.node_summaries)
            entropy_nodes.insert(s.node_id);
        for (const auto& p : result.ellipse->points)
            ellipse_nodes.insert(p.node_id);

        std::vector<eval::NodeSummary> summaries;
        for (const auto& s : result.node_summaries)
            if (ellipse_nodes.contains(s.node_id)) summaries.push_back(s);
        std::vector<eval::ClassifiedPoint> classified;
        classified.reserve(result.ellipse->points.size());
        for (const auto& p : result.ellipse->points)
            if (entropy_nodes.contains(p.node_id))
                classified.push_back({p.node_id, p.anomalous});

        if (summaries.empty())
            throw_empty("no node is analyzable by both methods");
        result.comparison = eval::compare(summaries, classified, config.truth);
    }
    return result;
}

} // namespace eads::pipeline
