#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace mlab::csv {

// Shortest decimal that round-trips to the same double.
std::string num(double x);

class Writer {
public:
    Writer(const std::filesystem::path& path, const std::vector<std::string>& header);
    Writer& cell(const std::string& s);
    Writer& cell(double x) { return cell(num(x)); }
    void end_row();

private:
    std::ofstream out_;
    std::size_t columns_;
    std::vector<std::string> row_;
};

// Minimal reader for the files written above (no quoting).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::size_t column(const std::string& name) const;
};
Table read(const std::filesystem::path& path);

}  // namespace mlab::csv
