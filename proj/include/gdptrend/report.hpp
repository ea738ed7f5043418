#pragma once

#include <string>
#include <vector>

namespace gdptrend::report {

enum class Format { Csv, Markdown };

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/** @brief printf %.{precision}g, with -0 printed as 0. */
[[nodiscard]] std::string format_number(double value, int precision);

/** @brief CSV (optionally preceded by a `# title` line) or a markdown pipe table. */
[[nodiscard]] std::string render(const Table& table, Format format, bool with_title = true);

}  // namespace gdptrend::report
