#include "csv.hpp"

#include <stdexcept>

namespace eads_cli {

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::binary), path_(path) {
    if (!out_)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

CsvWriter::~CsvWriter() = default;

CsvWriter& CsvWriter::field(const std::string& value) {
    if (row_open_) out_ << ',';
    out_ << value;
    row_open_ = true;
    return *this;
}

void CsvWriter::end_row() {
    out_ << '\n';
    row_open_ = false;
}

void CsvWriter::close() {
    out_.flush();
    if (!out_)
        throw std::runtime_error("write failure on '" + path_ + "'");
    out_.close();
}

} // namespace eads_cli
