#include "kh/csvio.hpp"

#include <cstdio>

#include "kh/errors.hpp"

namespace kh {

std::string CsvWriter::fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& scenario_json,
                     const std::vector<std::string>& columns)
    : out_(path), ncols_(columns.size()) {
    if (!out_) throw ValidationError("cannot write artifact " + path);
    out_ << "# scenario: " << scenario_json << "\n";
    for (size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != ncols_) throw ValidationError("csv row arity mismatch");
    for (size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << fmt(values[i]);
    out_ << "\n";
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_) throw ValidationError("csv row arity mismatch");
    for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\n"; }

}  // namespace kh
