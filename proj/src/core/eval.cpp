#include "core/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "core/error.hpp"

namespace eads::eval {

bool decide(const EntropyPoint& p, const DecisionRule& rule) {
    if (!std::isfinite(rule.tau) || rule.tau < 0.0)
        throw_invalid("decision threshold tau must be finite and >= 0");
    const bool temp_exceeds = p.h_temp > rule.tau;
    const bool hum_exceeds = p.h_hum > rule.tau;
    return rule.combinator == Combinator::both_exceed
               ? (temp_exceeds && hum_exceeds)
               : (temp_exceeds || hum_exceeds);
}

NodeSummary summarize_node(std::span<const EntropyPoint> points,
                           const DecisionRule& rule) {
    if (points.empty())
        throw_empty("cannot summarize a node with no entropy points");
    NodeSummary summary{points.front().node_id, 0,
                        static_cast<int>(points.size()), false};
    for (const EntropyPoint& p : points) {
        if (p.node_id != summary.node_id)
            throw_invalid("entropy points of one summary must share a node id");
        if (decide(p, rule))
            ++summary.windows_flagged;
    }
    summary.flagged = summary.windows_flagged >= 1;
    return summary;
}

std::vector<NodeSummary> summarize(std::span<const EntropyPoint> points,
                                   const DecisionRule& rule) {
    std::vector<NodeSummary> summaries;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= points.size(); ++i) {
        if (i == points.size() || points[i].node_id != points[start].node_id) {
            summaries.push_back(
                summarize_node(points.subspan(start, i - start), rule));
            start = i;
        }
    }
    return summaries;
}

Evaluation evaluate(std::span<const NodeSummary> summaries,
                    const GroundTruth& truth) {
    for (int id : truth.fully_anomalous)
        if (truth.partially_anomalous.contains(id))
            throw_invalid("ground-truth sets must be disjoint");

    Evaluation eval;
    for (const NodeSummary& s : summaries) {
        const bool positive = truth.fully_anomalous.contains(s.node_id) ||
                              truth.partially_anomalous.contains(s.node_id);
        if (positive && s.flagged)
            ++eval.true_positives;
        else if (positive && !s.flagged)
            ++eval.false_negatives;
        else if (!positive && s.flagged)
            ++eval.false_positives;
        else
            ++eval.true_negatives;
        if (truth.fully_anomalous.contains(s.node_id) &&
            s.windows_flagged != s.windows_total)
            eval.incomplete_fully_anomalous.push_back(s.node_id);
    }
    return eval;
}

ComparisonReport compare(std::span<const NodeSummary> entropy_summaries,
                         std::span<const ClassifiedPoint> ellipse_points,
                         const GroundTruth& truth) {
    struct EllipseCounts {
        std::int64_t flagged = 0;
        std::int64_t total = 0;
    };
    std::map<int, EllipseCounts> per_node_ellipse;
    for (const ClassifiedPoint& p : ellipse_points) {
        auto& counts = per_node_ellipse[p.node_id];
        ++counts.total;
        if (p.anomalous) ++counts.flagged;
    }

    std::map<int, const NodeSummary*> per_node_entropy;
    for (const NodeSummary& s : entropy_summaries)
        per_node_entropy[s.node_id] = &s;

    if (per_node_entropy.size() != per_node_ellipse.size())
        throw_invalid("entropy and ellipse node sets differ (" +
                      std::to_string(per_node_entropy.size()) + " vs " +
                      std::to_string(per_node_ellipse.size()) + " nodes)");
    for (const auto& [node_id, counts] : per_node_ellipse)
        if (!per_node_entropy.contains(node_id))
            throw_invalid("node " + std::to_string(node_id) +
                          " has ellipse points but no entropy windows");

    ComparisonReport report;
    std::vector<NodeSummary> ellipse_summaries;
    for (const auto& [node_id, summary] : per_node_entropy) {
        const EllipseCounts& ellipse = per_node_ellipse.at(node_id);
        NodeComparison row{};
        row.node_id = node_id;
        row.entropy_windows_flagged = summary->windows_flagged;
        row.entropy_windows_total = summary->windows_total;
        row.entropy_flagged = summary->flagged;
        row.ellipse_points_flagged = ellipse.flagged;
        row.ellipse_points_total = ellipse.total;
        row.ellipse_flagged = ellipse.flagged >= 1;
        row.truth_positive = truth.fully_anomalous.contains(node_id) ||
                             truth.partially_anomalous.contains(node_id);
        report.per_node.push_back(row);

        if (row.entropy_flagged) report.entropy_flagged.insert(node_id);
        if (row.ellipse_flagged) report.ellipse_flagged.insert(node_id);
        ellipse_summaries.push_back({node_id,
                                     static_cast<int>(ellipse.flagged),
                                     static_cast<int>(ellipse.total),
                                     row.ellipse_flagged});
    }
    report.entropy_eval = evaluate(entropy_summaries, truth);
    report.ellipse_eval = evaluate(ellipse_summaries, truth);
    return report;
}

} // namespace eads::eval
