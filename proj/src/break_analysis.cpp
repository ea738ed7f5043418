#include "gdptrend/break_analysis.hpp"

#include <cmath>

#include "gdptrend/error.hpp"

namespace gdptrend::breaks {

TrendPosition classify_deviation(double deviation, double band) noexcept {
    if (deviation > band) return TrendPosition::Above;
    if (deviation < -band) return TrendPosition::Below;
    return TrendPosition::OnTrend;
}

const char* to_string(TrendPosition p) noexcept {
    switch (p) {
        case TrendPosition::Below: return "below";
        case TrendPosition::OnTrend: return "on trend";
        case TrendPosition::Above: return "above";
    }
    return "?";
}

namespace {

trend::TrendFit segment_fit(const AnnualSeries& series, YearWindow window, const char* which) {
    if (slice(series, window).size() < 2) {
        throw Error(ErrorKind::InsufficientSegmentData,
                    series.country() + ": fewer than 2 observations in the " + which + " segment");
    }
    return trend::fit_linear_trend(series, window);
}

}  // namespace

SegmentFits fit_segments(const AnnualSeries& series, YearWindow break_window) {
    if (series.empty()) throw Error(ErrorKind::InsufficientSegmentData, series.country() + ": empty series");
    const Year first = series.first_year();
    const Year last = series.last_year();
    if (first >= break_window.start) {
        throw Error(ErrorKind::InsufficientSegmentData, series.country() + ": no data before the break");
    }
    if (last <= break_window.end) {
        throw Error(ErrorKind::InsufficientSegmentData, series.country() + ": no data after the break");
    }
    return {segment_fit(series, {first, break_window.start - 1}, "early"),
            segment_fit(series, {break_window.end + 1, last}, "late")};
}

BreakReport analyze_country(const AnnualSeries& series, YearWindow break_window, Year target_year) {
    if (target_year < break_window.end) {
        throw Error(ErrorKind::InvalidArgument, "target year " + std::to_string(target_year) +
                                                    " precedes the end of the break window");
    }
    const auto fits = fit_segments(series, break_window);
    BreakReport r;
    r.country = series.country();
    r.early_fit = fits.early;
    r.late_fit = fits.late;

    const auto observed = series.value_at(target_year);
    if (!observed) {
        throw Error(ErrorKind::MissingTargetYear,
                    series.country() + ": no observation in " + std::to_string(target_year));
    }
    r.slope_ratio = r.late_fit.slope / r.early_fit.slope;
    r.crossing_year_late_trend = trend::zero_crossing_year(r.late_fit);
    r.target_year = target_year;
    r.extrapolated_level_at_target = trend::extrapolate(r.early_fit, target_year);
    r.observed_level_at_target = *observed;
    r.level_ratio = r.observed_level_at_target / r.extrapolated_level_at_target;
    r.final_year = series.last_year();
    r.deviation_from_late_trend = trend::deviation_from_trend(series, r.late_fit, r.final_year);
    return r;
}

PanelReport panel_report(const ingest::PanelDataset& panel, YearWindow break_window, Year target_year) {
    PanelReport out;
    for (const auto& s : panel.series()) {
        try {
            out.reports.push_back(analyze_country(s, break_window, target_year));
        } catch (const Error& e) {
            out.diagnostics.push_back({s.country(), e.what()});
        }
    }
    return out;
}

std::vector<CrossingRow> crossing_summary(std::span<const BreakReport> reports, YearWindow plausible) {
    std::vector<CrossingRow> rows;
    for (const auto& r : reports) {
        const double y = r.crossing_year_late_trend;
        const bool inside = y >= plausible.start && y <= plausible.end;
        rows.push_back({r.country, y, !inside});
    }
    return rows;
}

}  // namespace gdptrend::breaks
