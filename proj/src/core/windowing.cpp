#include "core/windowing.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace eads::windowing {

const char* series_name(Series s) noexcept {
    switch (s) {
        case Series::temperature: return "temperature";
        case Series::humidity: return "humidity";
        case Series::light: return "light";
        case Series::voltage: return "voltage";
    }
    return "unknown";
}

WindowSpec::WindowSpec(std::int64_t start, std::int64_t end, std::int64_t w)
    : period_start(start), period_end(end), width(w) {
    if (start >= end)
        throw_invalid("analysis period start must precede its end");
    if (w <= 0)
        throw_invalid("window width must be positive");
}

PartitionResult partition(std::vector<TimedReading> readings,
                          const SeriesKey& key, const WindowSpec& spec) {
    std::stable_sort(readings.begin(), readings.end(),
                     [](const TimedReading& a, const TimedReading& b) {
                         return a.timestamp < b.timestamp;
                     });

    PartitionResult result;
    for (const TimedReading& r : readings) {
        if (r.timestamp < spec.period_start || r.timestamp >= spec.period_end) {
            ++result.out_of_period;
            continue;
        }
        const std::int64_t index = (r.timestamp - spec.period_start) / spec.width;
        if (result.windows.empty() || result.windows.back().index != index)
            result.windows.push_back({key, index, {}});
        result.windows.back().samples.push_back(r.value);
    }
    return result;
}

std::int64_t window_slot_count(const WindowSpec& spec) noexcept {
    const std::int64_t span = spec.period_end - spec.period_start;
    return (span + spec.width - 1) / spec.width;
}

} // namespace eads::windowing
