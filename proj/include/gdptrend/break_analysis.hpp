#pragma once

#include <span>
#include <string>
#include <vector>

#include "gdptrend/ingest.hpp"
#include "gdptrend/series.hpp"
#include "gdptrend/trend.hpp"

namespace gdptrend::breaks {

/** @brief Two-segment trend summary for one country. */
struct BreakReport {
    std::string country;
    trend::TrendFit early_fit;
    trend::TrendFit late_fit;
    double slope_ratio;               // late / early
    double crossing_year_late_trend;  // year the late trend is zero
    Year target_year;
    double extrapolated_level_at_target;  // early trend at target_year
    double observed_level_at_target;
    double level_ratio;  // observed / extrapolated
    Year final_year;
    double deviation_from_late_trend;  // at final_year, relative
};

enum class TrendPosition { Below, OnTrend, Above };

/** @brief |deviation| <= band counts as on trend. */
[[nodiscard]] TrendPosition classify_deviation(double deviation, double band = 0.02) noexcept;
[[nodiscard]] const char* to_string(TrendPosition p) noexcept;

struct SegmentFits {
    trend::TrendFit early;
    trend::TrendFit late;
};

/** @brief Trends on years < break_window.start and years > break_window.end. */
[[nodiscard]] SegmentFits fit_segments(const AnnualSeries& series, YearWindow break_window);

/**
 * @brief Segments as in fit_segments; early: years < break_window.start; late: years > break_window.end.
 *
 * With the default break window [1941, 1949] that is <= 1940 and >= 1950.
 * Throws InsufficientSegmentData (fewer than 2 points in a segment) or
 * MissingTargetYear.
 */
[[nodiscard]] BreakReport analyze_country(const AnnualSeries& series, YearWindow break_window, Year target_year);

struct PanelDiagnostic {
    std::string country;
    std::string message;
};

struct PanelReport {
    std::vector<BreakReport> reports;  // input order
    std::vector<PanelDiagnostic> diagnostics;
};

[[nodiscard]] PanelReport panel_report(const ingest::PanelDataset& panel, YearWindow break_window, Year target_year);

struct CrossingRow {
    std::string country;
    double crossing_year;
    bool anomaly;  // outside the plausible window
};

[[nodiscard]] std::vector<CrossingRow> crossing_summary(std::span<const BreakReport> reports,
                                                        YearWindow plausible = {1900, 1950});

}  // namespace gdptrend::breaks
