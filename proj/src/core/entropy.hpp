#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace eads::entropy {

// Window entropy of boundary violations.
//
// Every reading in a window is classified against a fixed normal range
// (0 = in range, 1 = violation). The running sum of those indicators forms a
// cumulative state sequence; the multiplicities of its distinct values define
// a probability distribution whose Shannon entropy (base-10 logarithm) is the
// window's irregularity score. H = 0 means a single state for the whole
// window; H = log10(n) means every reading opened a new state.
//
// All functions are pure; callers may evaluate windows concurrently.

// Normal interval for one physical parameter, inclusive at both ends.
struct BoundaryRange {
    double lower;
    double upper;

    // Throws Error(invalid_argument) unless both values are finite and
    // lower <= upper.
    BoundaryRange(double lower, double upper);
};

// One 0/1 entry per acquisition, in acquisition order.
using IndicatorSequence = std::vector<std::uint8_t>;

// Non-decreasing running sums, consecutive steps of 0 or 1.
using CumulativeStateSequence = std::vector<int>;

// Distinct cumulative values in order of first appearance, with their
// multiplicities. sum(counts) equals the window's acquisition count.
struct StateHistogram {
    std::vector<int> states;
    std::vector<int> counts;

    int total() const noexcept;
};

// 0 when lower <= x <= upper, 1 otherwise. Non-finite x is a corrupt
// acquisition and is rejected.
int classify_reading(double x, const BoundaryRange& bounds);

IndicatorSequence classify_window(std::span<const double> samples,
                                  const BoundaryRange& bounds);

int count_violations(const IndicatorSequence& indicators) noexcept;

// Running sum with an implicit 0 before the first element.
// Throws Error(empty_data) on an empty window.
CumulativeStateSequence cumulative_states(const IndicatorSequence& indicators);

StateHistogram accumulate(const CumulativeStateSequence& states);

// counts[k] / sum(counts); the result sums to 1 within 1e-12.
std::vector<double> probabilities(const StateHistogram& hist);

// H = -sum p_k log(p_k). A single-element vector yields exactly 0.
double entropy(const std::vector<double>& probs, double log_base = 10.0);

// The whole chain: classify, cumulate, accumulate, normalize, sum.
double window_entropy(std::span<const double> samples,
                      const BoundaryRange& bounds, double log_base = 10.0);

} // namespace eads::entropy
