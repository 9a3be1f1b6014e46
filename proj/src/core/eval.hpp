#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace eads::eval {

// Per-node, per-window entropy pair with the raw counts behind it. The
// violation counts ride along because a single-sample window always scores
// H = 0 even when its one reading violates; reports surface them so such
// windows stay visible.
struct EntropyPoint {
    int node_id;
    std::int64_t window_index;
    double h_temp;
    double h_hum;
    int n_temp;
    int n_hum;
    int violations_temp;
    int violations_hum;
};

enum class Combinator { both_exceed, either_exceeds };

struct DecisionRule {
    double tau = 0.0;
    Combinator combinator = Combinator::both_exceed;
};

// true = anomalous. both_exceed: h_temp > tau AND h_hum > tau.
bool decide(const EntropyPoint& p, const DecisionRule& rule);

struct NodeSummary {
    int node_id;
    int windows_flagged;
    int windows_total;
    bool flagged; // at least one window decided anomalous
};

// points must be non-empty and share one node_id.
NodeSummary summarize_node(std::span<const EntropyPoint> points,
                           const DecisionRule& rule);

// Groups by node_id (input sorted by node) and summarizes each group.
std::vector<NodeSummary> summarize(std::span<const EntropyPoint> points,
                                   const DecisionRule& rule);

struct GroundTruth {
    std::set<int> fully_anomalous{37};
    std::set<int> partially_anomalous{14};
};

struct Evaluation {
    int true_positives = 0;
    int false_positives = 0;
    int true_negatives = 0;
    int false_negatives = 0;
    // Fully-anomalous nodes whose flagged-window coverage is not total.
    std::vector<int> incomplete_fully_anomalous;
};

// Node-level confusion counts; positive truth is membership in either
// ground-truth set.
Evaluation evaluate(std::span<const NodeSummary> summaries,
                    const GroundTruth& truth);

struct ClassifiedPoint {
    int node_id;
    bool anomalous;
};

struct NodeComparison {
    int node_id;
    int entropy_windows_flagged;
    int entropy_windows_total;
    bool entropy_flagged;
    std::int64_t ellipse_points_flagged;
    std::int64_t ellipse_points_total;
    bool ellipse_flagged; // at least one raw point outside the ellipse
    bool truth_positive;
};

struct ComparisonReport {
    std::set<int> entropy_flagged;
    std::set<int> ellipse_flagged;
    std::vector<NodeComparison> per_node; // ascending node_id
    Evaluation entropy_eval;
    Evaluation ellipse_eval;
};

// Both methods must cover the same node set; a mismatch is a configuration
// error.
ComparisonReport compare(std::span<const NodeSummary> entropy_summaries,
                         std::span<const ClassifiedPoint> ellipse_points,
                         const GroundTruth& truth);

} // namespace eads::eval
