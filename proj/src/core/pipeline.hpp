#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/ellipse.hpp"
#include "core/entropy.hpp"
#include "core/eval.hpp"
#include "core/ibrl.hpp"

namespace eads::pipeline {

// Everything one analysis run needs. Defaults are the IBRL study settings:
// 2004-03-01 00:00-04:00, ten-minute windows, the published temperature and
// humidity normal ranges, nodes 5 and 15 dropped.
struct RunConfig {
    std::int64_t period_start;
    std::int64_t period_end;
    std::int64_t window_seconds = 600;
    entropy::BoundaryRange temp_bounds{15.55, 18.00};
    entropy::BoundaryRange hum_bounds{42.25, 45.80};
    std::set<int> excluded_nodes{5, 15};
    int max_node_id = 54;
    eval::DecisionRule rule{};
    double confidence = 0.90;
    double log_base = 10.0;
    eval::GroundTruth truth{};

    RunConfig();
};

void validate(const RunConfig& config);

ibrl::DatasetFilter dataset_filter(const RunConfig& config);

// Key=value rendering of the effective configuration, echoed into output
// directories for provenance.
std::string describe(const RunConfig& config);

// Which parts of the analysis to compute.
inline constexpr unsigned kStageEntropy = 1u;
inline constexpr unsigned kStageEllipse = 2u;
inline constexpr unsigned kStageCompare =
    4u | kStageEntropy | kStageEllipse;

struct EllipseClassification {
    int node_id;
    std::int64_t timestamp;
    double temperature;
    double humidity;
    double dist_sq;
    bool anomalous;
};

struct EllipseResult {
    ellipse::EllipseModel model;
    double threshold;
    std::vector<EllipseClassification> points; // sorted by (node, timestamp)
};

struct AnalysisResult {
    // Sorted by (node_id, window_index); anomalous[i] is the rule's decision
    // for entropy_points[i].
    std::vector<eval::EntropyPoint> entropy_points;
    std::vector<std::uint8_t> anomalous;
    std::vector<eval::NodeSummary> node_summaries;
    std::optional<EllipseResult> ellipse;
    std::optional<eval::ComparisonReport> comparison;
};

// Runs the requested stages over filtered records. Throws Error(empty_data)
// when a requested stage has nothing to analyze.
AnalysisResult run_analysis(const std::vector<ibrl::RawRecord>& records,
                            const RunConfig& config, unsigned stages);

} // namespace eads::pipeline
