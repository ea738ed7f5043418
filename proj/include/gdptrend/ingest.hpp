#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gdptrend/series.hpp"

namespace gdptrend::ingest {

enum class Layout { Long, Wide };

/** @brief Country-keyed annual series sharing one variable and unit. Input order is kept. */
class PanelDataset {
public:
    PanelDataset() = default;
    PanelDataset(std::string source, std::string variable, std::string unit, std::string provenance = {});

    /** @brief Throws UnitMismatch on foreign labels, InvalidArgument on a duplicate country. */
    void add(AnnualSeries series);

    [[nodiscard]] const std::string& source() const noexcept { return source_; }
    [[nodiscard]] const std::string& variable() const noexcept { return variable_; }
    [[nodiscard]] const std::string& unit() const noexcept { return unit_; }
    [[nodiscard]] const std::string& provenance() const noexcept { return provenance_; }
    [[nodiscard]] const std::vector<AnnualSeries>& series() const noexcept { return series_; }
    [[nodiscard]] std::size_t size() const noexcept { return series_.size(); }
    [[nodiscard]] bool empty() const noexcept { return series_.empty(); }

    /** @brief nullptr when absent. */
    [[nodiscard]] const AnnualSeries* find(std::string_view country) const noexcept;
    [[nodiscard]] std::vector<std::string> countries() const;

private:
    std::string source_ = "user";
    std::string variable_ = "real-gdp-per-capita";
    std::string unit_;
    std::string provenance_;
    std::vector<AnnualSeries> series_;
};

struct PanelOptions {
    std::string source = "user";
    std::string variable = "real-gdp-per-capita";
    std::string unit = "1990 International Geary-Khamis dollars";
    std::string provenance;
};

/**
 * @brief Parse `country,year,value` (long) or `year,<country>...` (wide) text.
 *
 * A UTF-8 BOM, CRLF line ends and trailing blank lines are accepted. Values
 * are plain or scientific decimals; anything else is MalformedCsv with the
 * 1-based line number (header = 1).
 */
[[nodiscard]] PanelDataset parse_annual_csv(std::string_view text, Layout layout,
                                            const PanelOptions& options = {});

/** @brief Long when the header is exactly `country,year,value`, wide otherwise. */
[[nodiscard]] Layout detect_layout(std::string_view text);

/** @brief Header `year,month,value`; rows must already be chronological. */
[[nodiscard]] MonthlySeries parse_monthly_csv(std::string_view text, std::string variable = "series");

/** @brief Years before switch_year from `early`, the rest from `late`. */
[[nodiscard]] PanelDataset splice(const PanelDataset& early, const PanelDataset& late, Year switch_year);

struct CoverageWarning {
    std::string country;
    double coverage;  // share of window years present
    std::string message;
};

[[nodiscard]] std::vector<CoverageWarning> validate_panel(const PanelDataset& panel, YearWindow required_window,
                                                          double min_coverage);

/** @brief Long-layout text that parses back to the same observations. */
[[nodiscard]] std::string to_long_csv(const PanelDataset& panel);

/** @brief Whole file as bytes; Io error naming the path on failure. */
[[nodiscard]] std::string read_file(const std::filesystem::path& path);

[[nodiscard]] PanelDataset load_annual_csv(const std::filesystem::path& path, PanelOptions options = {});
[[nodiscard]] MonthlySeries load_monthly_csv(const std::filesystem::path& path, std::string variable);

}  // namespace gdptrend::ingest
