#include "core/civil_time.hpp"

#include <charconv>
#include <cstdio>

#include "core/error.hpp"

namespace eads::civil {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

bool parse_int(std::string_view s, int& out) noexcept {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

int days_in_month(int year, int month) noexcept {
    static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[month - 1];
}

// date "YYYY-MM-DD", time "HH:MM:SS[.frac]"
bool parse_parts(std::string_view date, std::string_view time,
                 std::int64_t& out_seconds) noexcept {
    if (date.size() != 10 || date[4] != '-' || date[7] != '-') return false;
    int year = 0, month = 0, day = 0;
    if (!parse_int(date.substr(0, 4), year) ||
        !parse_int(date.substr(5, 2), month) ||
        !parse_int(date.substr(8, 2), day))
        return false;
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        return false;

    if (auto dot = time.find('.'); dot != std::string_view::npos) {
        std::string_view frac = time.substr(dot + 1);
        if (frac.empty()) return false;
        for (char c : frac)
            if (c < '0' || c > '9') return false;
        time = time.substr(0, dot);
    }
    if (time.size() != 8 || time[2] != ':' || time[5] != ':') return false;
    int hh = 0, mm = 0, ss = 0;
    if (!parse_int(time.substr(0, 2), hh) ||
        !parse_int(time.substr(3, 2), mm) ||
        !parse_int(time.substr(6, 2), ss))
        return false;
    if (hh < 0 || hh > 23 || mm < 0 || mm > 59 || ss < 0 || ss > 59) return false;

    out_seconds = days_from_civil(year, month, day) * kSecondsPerDay +
                  hh * 3600 + mm * 60 + ss;
    return true;
}

} // namespace

// Howard Hinnant's civil calendar algorithms.
std::int64_t days_from_civil(int year, int month, int day) noexcept {
    year -= month <= 2;
    const std::int64_t era = (year >= 0 ? year : year - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(year - era * 400);
    const unsigned doy =
        (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2) / 5 +
        static_cast<unsigned>(day) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, int& month, int& day) noexcept {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
    year = static_cast<int>(y + (month <= 2));
}

bool parse_date_time(std::string_view date, std::string_view time,
                     std::int64_t& out_seconds) noexcept {
    return parse_parts(date, time, out_seconds);
}

std::int64_t parse_timestamp(std::string_view text) {
    if (text.size() < 11)
        throw_invalid("unparseable timestamp '" + std::string(text) + "'");
    std::int64_t seconds = 0;
    char sep = text[10];
    if ((sep != ' ' && sep != 'T') ||
        !parse_parts(text.substr(0, 10), text.substr(11), seconds))
        throw_invalid("unparseable timestamp '" + std::string(text) + "'");
    return seconds;
}

std::string format_timestamp(std::int64_t seconds) {
    std::int64_t days = seconds / kSecondsPerDay;
    std::int64_t rem = seconds % kSecondsPerDay;
    if (rem < 0) {
        rem += kSecondsPerDay;
        --days;
    }
    int year = 0, month = 0, day = 0;
    civil_from_days(days, year, month, day);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", year, month,
                  day, static_cast<int>(rem / 3600),
                  static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60));
    return buf;
}

} // namespace eads::civil
