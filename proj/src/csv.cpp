#include "mlab/csv.hpp"

#include <charconv>
#include <sstream>

#include "mlab/errors.hpp"

namespace mlab::csv {

std::string num(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Writer::Writer(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
    if (!out_) throw ConfigError("cannot write " + path.string());
    for (const auto& h : header) cell(h);
    end_row();
}

Writer& Writer::cell(const std::string& s) {
    row_.push_back(s);
    return *this;
}

void Writer::end_row() {
    if (row_.size() != columns_) throw ContractViolation("csv: row width does not match header");
    for (std::size_t i = 0; i < row_.size(); ++i) out_ << (i ? "," : "") << row_[i];
    out_ << '\n';
    row_.clear();
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw ContractViolation("csv: no column " + name);
}

Table read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    Table t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cells.push_back(c);
        if (first) t.header = std::move(cells);
        else t.rows.push_back(std::move(cells));
        first = false;
    }
    return t;
}

}  // namespace mlab::csv
