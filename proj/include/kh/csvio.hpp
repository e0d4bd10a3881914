#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace kh {

// Deterministic artifact writer: 12 significant digits, fixed column order,
// the resolved scenario as a leading comment line.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& scenario_json,
              const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& cells);
    void comment(const std::string& line);
    static std::string fmt(double v);

private:
    std::ofstream out_;
    size_t ncols_;
};

}  // namespace kh
