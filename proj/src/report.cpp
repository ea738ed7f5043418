#include "gdptrend/report.hpp"

#include <cmath>
#include <cstdio>

namespace gdptrend::report {

std::string format_number(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

namespace {
std::string join(const std::vector<std::string>& cells, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}
}  // namespace

std::string render(const Table& table, Format format, bool with_title) {
    std::string out;
    if (format == Format::Csv) {
        if (with_title && !table.title.empty()) out += "# " + table.title + "\n";
        out += join(table.header, ",") + "\n";
        for (const auto& row : table.rows) out += join(row, ",") + "\n";
        return out;
    }
    if (with_title && !table.title.empty()) out += "### " + table.title + "\n\n";
    out += "| " + join(table.header, " | ") + " |\n|";
    for (std::size_t i = 0; i < table.header.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& row : table.rows) out += "| " + join(row, " | ") + " |\n";
    return out;
}

}  // namespace gdptrend::report
