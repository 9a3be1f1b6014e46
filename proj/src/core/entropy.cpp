#include "core/entropy.hpp"

#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace eads::entropy {

BoundaryRange::BoundaryRange(double lo, double up) : lower(lo), upper(up) {
    if (!std::isfinite(lo) || !std::isfinite(up))
        throw_invalid("boundary range must be finite");
    if (lo > up)
        throw_invalid("boundary range lower bound exceeds upper bound");
}

int StateHistogram::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

int classify_reading(double x, const BoundaryRange& bounds) {
    if (!std::isfinite(x))
        throw_invalid("non-finite reading rejected");
    return (bounds.lower <= x && x <= bounds.upper) ? 0 : 1;
}

IndicatorSequence classify_window(std::span<const double> samples,
                                  const BoundaryRange& bounds) {
    IndicatorSequence bits;
    bits.reserve(samples.size());
    for (double x : samples)
        bits.push_back(static_cast<std::uint8_t>(classify_reading(x, bounds)));
    return bits;
}

int count_violations(const IndicatorSequence& indicators) noexcept {
    return std::accumulate(indicators.begin(), indicators.end(), 0);
}

CumulativeStateSequence cumulative_states(const IndicatorSequence& indicators) {
    if (indicators.empty())
        throw_empty("cannot cumulate an empty window");
    CumulativeStateSequence values;
    values.reserve(indicators.size());
    int running = 0;
    for (std::uint8_t bit : indicators) {
        running += bit;
        values.push_back(running);
    }
    return values;
}

StateHistogram accumulate(const CumulativeStateSequence& states) {
    StateHistogram hist;
    // The sequence is non-decreasing, so equal values sit in runs and
    // first-appearance order is just run order.
    for (int value : states) {
        if (hist.states.empty() || hist.states.back() != value) {
            hist.states.push_back(value);
            hist.counts.push_back(1);
        } else {
            ++hist.counts.back();
        }
    }
    return hist;
}

std::vector<double> probabilities(const StateHistogram& hist) {
    const int n = hist.total();
    if (n < 1)
        throw_empty("histogram has no observations");
    std::vector<double> probs;
    probs.reserve(hist.counts.size());
    for (int count : hist.counts)
        probs.push_back(static_cast<double>(count) / n);
    return probs;
}

double entropy(const std::vector<double>& probs, double log_base) {
    if (probs.empty())
        throw_empty("empty probability vector");
    if (!(log_base > 0.0) || log_base == 1.0)
        throw_invalid("logarithm base must be positive and != 1");
    // K = 1 means p = {1}; return exact 0 instead of -1 * log(1).
    if (probs.size() == 1)
        return 0.0;
    double h = 0.0;
    if (log_base == 10.0) {
        for (double p : probs)
            h -= p * std::log10(p);
    } else {
        const double scale = 1.0 / std::log(log_base);
        for (double p : probs)
            h -= p * std::log(p) * scale;
    }
    return h;
}

double window_entropy(std::span<const double> samples,
                      const BoundaryRange& bounds, double log_base) {
    if (samples.empty())
        throw_empty("empty acquisition window");
    return entropy(
        probabilities(accumulate(cumulative_states(classify_window(samples, bounds)))),
        log_base);
}

} // namespace eads::entropy
