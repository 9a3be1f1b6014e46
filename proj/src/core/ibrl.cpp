#include "core/ibrl.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include "core/civil_time.hpp"
#include "core/error.hpp"

namespace eads::ibrl {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

bool parse_double(std::string_view s, double& out) noexcept {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_i64(std::string_view s, std::int64_t& out) noexcept {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

void validate_filter(const DatasetFilter& filter) {
    if (filter.period_start >= filter.period_end)
        throw_invalid("dataset period start must precede its end");
    if (filter.max_node_id < 1)
        throw_invalid("max node id must be at least 1");
    for (int id : filter.excluded_nodes)
        if (id < 1 || id > filter.max_node_id)
            throw_invalid("excluded node " + std::to_string(id) +
                          " outside [1, " + std::to_string(filter.max_node_id) + "]");
}

} // namespace

std::optional<RawRecord> parse_line(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_fields(line);
    // date, time, epoch and moteid are mandatory; up to four sensor values follow.
    if (fields.size() < 4 || fields.size() > 8) return std::nullopt;

    RawRecord rec{};
    if (!civil::parse_date_time(fields[0], fields[1], rec.timestamp))
        return std::nullopt;
    if (!parse_i64(fields[2], rec.epoch) || rec.epoch < 0) return std::nullopt;
    std::int64_t mote = 0;
    if (!parse_i64(fields[3], mote) || mote < 1 || mote > 0x7fffffff)
        return std::nullopt;
    rec.mote_id = static_cast<int>(mote);

    std::optional<double>* sensors[] = {&rec.temperature, &rec.humidity,
                                        &rec.light, &rec.voltage};
    for (std::size_t i = 4; i < fields.size(); ++i) {
        double value = 0.0;
        if (!parse_double(fields[i], value)) return std::nullopt;
        *sensors[i - 4] = value;
    }
    return rec;
}

LoadResult load_records(std::istream& source, const DatasetFilter& filter) {
    validate_filter(filter);
    LoadResult result;
    std::string line;
    while (std::getline(source, line)) {
        ++result.report.lines_read;
        auto rec = parse_line(line);
        if (!rec) {
            ++result.report.lines_malformed;
            continue;
        }
        if (rec->mote_id > filter.max_node_id ||
            filter.excluded_nodes.contains(rec->mote_id)) {
            ++result.report.records_excluded_node;
            continue;
        }
        if (rec->timestamp < filter.period_start ||
            rec->timestamp >= filter.period_end) {
            ++result.report.records_out_of_period;
            continue;
        }
        ++result.report.records_kept;
        result.records.push_back(*rec);
    }
    if (source.bad())
        throw_io("read failure on input stream");
    return result;
}

LoadResult load_file(const std::string& path, const DatasetFilter& filter) {
    std::ifstream in(path);
    if (!in)
        throw_io("cannot open '" + path + "'");
    return load_records(in, filter);
}

SeriesMap group_series(const std::vector<RawRecord>& records) {
    using windowing::Series;
    SeriesMap map;
    auto add = [&](int node, Series s, std::int64_t ts,
                   const std::optional<double>& value) {
        if (value)
            map[{node, s}].push_back({ts, *value});
    };
    for (const RawRecord& rec : records) {
        add(rec.mote_id, Series::temperature, rec.timestamp, rec.temperature);
        add(rec.mote_id, Series::humidity, rec.timestamp, rec.humidity);
        add(rec.mote_id, Series::light, rec.timestamp, rec.light);
        add(rec.mote_id, Series::voltage, rec.timestamp, rec.voltage);
    }
    for (auto& [key, readings] : map)
        std::stable_sort(readings.begin(), readings.end(),
                         [](const windowing::TimedReading& a,
                            const windowing::TimedReading& b) {
                             return a.timestamp < b.timestamp;
                         });
    return map;
}

std::vector<SensorPoint> paired_points(const std::vector<RawRecord>& records) {
    std::vector<SensorPoint> points;
    for (const RawRecord& rec : records)
        if (rec.temperature && rec.humidity)
            points.push_back(
                {rec.mote_id, rec.timestamp, *rec.temperature, *rec.humidity});
    return points;
}

std::pair<SeriesMap, IngestReport> load_dataset(std::istream& source,
                                                const DatasetFilter& filter) {
    LoadResult loaded = load_records(source, filter);
    return {group_series(loaded.records), loaded.report};
}

std::string summary_line(const IngestReport& r) {
    return "lines_read=" + std::to_string(r.lines_read) +
           " lines_malformed=" + std::to_string(r.lines_malformed) +
           " records_out_of_period=" + std::to_string(r.records_out_of_period) +
           " records_excluded_node=" + std::to_string(r.records_excluded_node) +
           " records_kept=" + std::to_string(r.records_kept);
}

} // namespace eads::ibrl
