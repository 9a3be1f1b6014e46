#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace eads::windowing {

enum class Series { temperature, humidity, light, voltage };

const char* series_name(Series s) noexcept;

struct TimedReading {
    std::int64_t timestamp; // seconds, naive local time
    double value;
};

struct SeriesKey {
    int node_id;
    Series series;

    auto operator<=>(const SeriesKey&) const = default;
};

// Tumbling windows anchored at period_start. width defaults to the
// ten-minute analysis interval.
struct WindowSpec {
    std::int64_t period_start;
    std::int64_t period_end; // exclusive
    std::int64_t width = 600;

    WindowSpec(std::int64_t start, std::int64_t end, std::int64_t width = 600);
};

struct AcquisitionWindow {
    SeriesKey key;
    std::int64_t index; // ordinal from period_start
    std::vector<double> samples; // ordered by timestamp, ties by input order
};

struct PartitionResult {
    std::vector<AcquisitionWindow> windows; // empty windows omitted, indices increasing
    std::size_t out_of_period = 0;          // excluded readings, reported not raised
};

// Assigns each reading to the half-open bin
// [period_start + i*width, period_start + (i+1)*width). Input need not be
// sorted; sorting is stable so duplicate timestamps keep input order.
PartitionResult partition(std::vector<TimedReading> readings,
                          const SeriesKey& key, const WindowSpec& spec);

// Number of window slots covering [period_start, period_end).
std::int64_t window_slot_count(const WindowSpec& spec) noexcept;

} // namespace eads::windowing
