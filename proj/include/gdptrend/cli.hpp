#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gdptrend/report.hpp"
#include "gdptrend/series.hpp"

namespace gdptrend::cli {

/** @brief Everything a subcommand needs. Empty file paths resolve inside data_dir. */
struct RunConfig {
    std::filesystem::path data_dir;
    std::filesystem::path early_file;
    std::filesystem::path late_file;
    std::filesystem::path deflator_file;
    std::filesystem::path cpi_annual_file;
    std::filesystem::path cpi_file;
    std::filesystem::path rate_file;
    std::filesystem::path bea_file;

    report::Format format = report::Format::Csv;
    std::string out;  // file (tables) or directory (figures); empty = stdout / cwd
    int precision = 6;

    YearWindow break_window{1941, 1949};
    Year switch_year = 1950;
    Year target_year = 2011;
    Year base_year = 1950;

    std::vector<int> lags{4, 3, 2, 1};
    std::optional<int> adf_lags;
    YearWindow early_test_window{1870, 1940};
    YearWindow late_test_window{1950, 2008};

    std::string country = "US";
    double cpi_scale = 1.4;
    bool use_cpi_as_deflator = false;
    bool monthly = true;  // bias: include the CPI/rate comparison

    int ma_window = 12;
    bool fig4_smooth = true;   // MA before scaling
    bool fig5_smooth = false;  // cumulative of raw CPI
    std::size_t forecast_months = 60;

    /** @brief Throws InvalidArgument on incoherent years or scale. */
    void validate() const;

    [[nodiscard]] std::filesystem::path resolve(const std::filesystem::path& given, const char* fallback) const;
};

struct Output {
    std::vector<report::Table> tables;
    std::vector<std::string> diagnostics;  // per-country problems, reported on stderr
};

[[nodiscard]] Output cmd_trends(const RunConfig& config);
[[nodiscard]] Output cmd_unitroot(const RunConfig& config);
[[nodiscard]] Output cmd_tables(const RunConfig& config);
[[nodiscard]] Output cmd_bias(const RunConfig& config);

struct Figure {
    std::string file_name;
    report::Table table;
};

/** @brief fig1 .. fig5 data, one row per timestamp. */
[[nodiscard]] std::vector<Figure> figure_tables(const RunConfig& config);

/** @brief Exit status: 0 success, 2 input/config error, 3 numerical failure. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdptrend::cli
