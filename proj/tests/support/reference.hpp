#pragma once

// Straight-line reference implementations, kept deliberately independent of
// the library code they check: indicators and running sums materialized as
// plain arrays, multiplicities counted with a double loop, entropy summed
// term by term with ln(p)/ln(base).

#include <cmath>
#include <cstddef>
#include <vector>

namespace reference {

inline std::vector<int> cumulative(const std::vector<int>& indicators) {
    std::vector<int> s(indicators.size());
    int running = 0;
    for (std::size_t i = 0; i < indicators.size(); ++i) {
        running += indicators[i];
        s[i] = running;
    }
    return s;
}

struct Histogram {
    std::vector<int> states;
    std::vector<int> counts;
};

inline Histogram count_multiplicities(const std::vector<int>& values) {
    Histogram hist;
    for (int value : values) {
        bool found = false;
        for (std::size_t k = 0; k < hist.states.size(); ++k) {
            if (hist.states[k] == value) {
                ++hist.counts[k];
                found = true;
                break;
            }
        }
        if (!found) {
            hist.states.push_back(value);
            hist.counts.push_back(1);
        }
    }
    return hist;
}

inline int distinct_count(const std::vector<int>& values) {
    int distinct = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j)
            if (values[j] == values[i]) {
                seen = true;
                break;
            }
        if (!seen) ++distinct;
    }
    return distinct;
}

// Lengths of maximal constant runs, in order.
inline std::vector<int> run_lengths(const std::vector<int>& values) {
    std::vector<int> runs;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == 0 || values[i] != values[i - 1])
            runs.push_back(1);
        else
            ++runs.back();
    }
    return runs;
}

inline double entropy_of_counts(const std::vector<int>& counts,
                                double log_base = 10.0) {
    double n = 0;
    for (int c : counts) n += c;
    double h = 0.0;
    for (int c : counts) {
        const double p = c / n;
        h -= p * std::log(p) / std::log(log_base);
    }
    return h;
}

inline std::vector<int> classify(const std::vector<double>& samples, double lo,
                                 double hi) {
    std::vector<int> indicators(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        indicators[i] = (lo <= samples[i] && samples[i] <= hi) ? 0 : 1;
    return indicators;
}

inline double window_entropy(const std::vector<double>& samples, double lo,
                             double hi, double log_base = 10.0) {
    return entropy_of_counts(
        count_multiplicities(cumulative(classify(samples, lo, hi))).counts,
        log_base);
}

inline double window_entropy_of_indicators(const std::vector<int>& indicators,
                                           double log_base = 10.0) {
    return entropy_of_counts(count_multiplicities(cumulative(indicators)).counts,
                             log_base);
}

} // namespace reference
