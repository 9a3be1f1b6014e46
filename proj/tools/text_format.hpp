#pragma once

#include <charconv>
#include <cstdint>
#include <string>

// Locale-independent number rendering so emitted files are byte-identical
// across runs and machines.

namespace eads_cli {

inline std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

inline std::string format_int(std::int64_t value) {
    return std::to_string(value);
}

} // namespace eads_cli
