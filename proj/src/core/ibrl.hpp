#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/windowing.hpp"

namespace eads::ibrl {

// Reader for the Intel Berkeley Research Laboratory sensor log: one record
// per line, whitespace separated,
//   date time epoch moteid temperature humidity light voltage
// Trailing sensor fields may be missing; a non-numeric field anywhere makes
// the line malformed. Malformed lines are counted, never fatal.

struct RawRecord {
    std::int64_t timestamp; // date+time floored to seconds
    std::int64_t epoch;
    int mote_id;
    std::optional<double> temperature;
    std::optional<double> humidity;
    std::optional<double> light;
    std::optional<double> voltage;
};

struct DatasetFilter {
    std::int64_t period_start; // inclusive
    std::int64_t period_end;   // exclusive
    std::set<int> excluded_nodes{5, 15};
    int max_node_id = 54;
};

struct IngestReport {
    std::uint64_t lines_read = 0;
    std::uint64_t lines_malformed = 0;
    std::uint64_t records_out_of_period = 0;
    std::uint64_t records_excluded_node = 0;
    std::uint64_t records_kept = 0;

    // The four categories partition lines_read.
    bool conserves() const noexcept {
        return lines_read == lines_malformed + records_out_of_period +
                                 records_excluded_node + records_kept;
    }
};

std::string summary_line(const IngestReport& report);

std::optional<RawRecord> parse_line(std::string_view line);

struct LoadResult {
    std::vector<RawRecord> records; // kept records, input order
    IngestReport report;
};

// Single pass over the stream. Category precedence per line:
// malformed, then excluded node (id outside [1, max] or listed), then
// out of period, then kept.
LoadResult load_records(std::istream& source, const DatasetFilter& filter);

// Throws Error(io) when the file cannot be opened.
LoadResult load_file(const std::string& path, const DatasetFilter& filter);

using SeriesMap =
    std::map<windowing::SeriesKey, std::vector<windowing::TimedReading>>;

// One stream per (mote, series) with a present value, each sorted by
// timestamp (ties keep record order).
SeriesMap group_series(const std::vector<RawRecord>& records);

// Records carrying both a temperature and a humidity value, as 2-D points
// for the elliptical baseline.
struct SensorPoint {
    int node_id;
    std::int64_t timestamp;
    double temperature;
    double humidity;
};

std::vector<SensorPoint> paired_points(const std::vector<RawRecord>& records);

std::pair<SeriesMap, IngestReport> load_dataset(std::istream& source,
                                                const DatasetFilter& filter);

} // namespace eads::ibrl
