#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "text_format.hpp"

namespace eads_cli {

// Comma-separated writer: header row first, '.' decimal point, one line per
// row. Throws std::runtime_error on write failure.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    CsvWriter& field(const std::string& value);
    CsvWriter& field(double value) { return field(format_double(value)); }
    CsvWriter& field(std::int64_t value) { return field(format_int(value)); }
    CsvWriter& field(int value) { return field(format_int(value)); }
    void end_row();

    // Flushes and verifies the stream; call before relying on the file.
    void close();

private:
    std::ofstream out_;
    std::string path_;
    bool row_open_ = false;
};

} // namespace eads_cli
