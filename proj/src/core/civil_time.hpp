#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eads::civil {

// Naive civil time: seconds since 1970-01-01 00:00:00 with no timezone
// attached. Sensor logs are interpreted as-is, the way they were recorded.

std::int64_t days_from_civil(int year, int month, int day) noexcept;
void civil_from_days(std::int64_t days, int& year, int& month, int& day) noexcept;

// Accepts "YYYY-MM-DD HH:MM:SS", "YYYY-MM-DDTHH:MM:SS" and an optional
// fractional-second suffix, which is truncated. Throws Error on anything else.
std::int64_t parse_timestamp(std::string_view text);

// Combines the two whitespace-separated fields of a log record.
// Returns false instead of throwing; the ingest loop treats failures as
// malformed lines.
bool parse_date_time(std::string_view date, std::string_view time,
                     std::int64_t& out_seconds) noexcept;

// "YYYY-MM-DDTHH:MM:SS"
std::string format_timestamp(std::int64_t seconds);

} // namespace eads::civil
