#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gdptrend/break_analysis.hpp"
#include "gdptrend/series.hpp"
#include "gdptrend/trend.hpp"

namespace gdptrend::bias {

/** @brief reference - target(match_year). MissingMatchYear when absent. */
[[nodiscard]] double shift_constant(const AnnualSeries& target, double reference_value, Year match_year);

/** @brief Adds `shift` to every value. */
[[nodiscard]] AnnualSeries apply_shift(const AnnualSeries& series, double shift);

/** @brief deflator(target) / deflator(base). */
[[nodiscard]] double deflator_growth(const AnnualSeries& deflator, Year base_year, Year target_year);

/** @brief (growth + overestimation) / growth. NonpositiveGrowth when growth <= 0. */
[[nodiscard]] double bias_factor(double deflator_growth, double overestimation_ratio);

[[nodiscard]] MonthlySeries scale_series(const MonthlySeries& series, double factor);

/** @brief Restricts both series to their overlapping months; NoOverlap if there are none. */
[[nodiscard]] std::pair<MonthlySeries, MonthlySeries> common_range(const MonthlySeries& a, const MonthlySeries& b);

/** @brief Running sum that is exactly 0 at the first month (first value not counted). */
[[nodiscard]] MonthlySeries anchored_cumulative(const MonthlySeries& series);

enum class Direction { Upward, Downward };  // a crosses b from below / from above

struct CrossingEvent {
    double time;  // fractional year
    Direction direction;
    int year;        // sample at or just before the crossing
    int month;
    double fraction;  // position between that sample and the next, [0, 1)
};

/**
 * @brief Sign changes of a - b over the months both series have.
 *
 * Adjacent opposite signs are linearly interpolated; a run of exact zeros
 * between opposite signs is reported at its first sample. Touching zero
 * without a sign change is not a crossing.
 */
[[nodiscard]] std::vector<CrossingEvent> find_crossings(const MonthlySeries& a, const MonthlySeries& b);

/**
 * @brief Fractional year where a linear trend of (a - b) over the trailing
 * `months` common observations reaches zero; nullopt if the gap is not
 * closing.
 */
[[nodiscard]] std::optional<double> forecast_convergence(const MonthlySeries& a, const MonthlySeries& b,
                                                         std::size_t months);

struct BiasReport {
    std::string country;
    Year base_year;
    Year target_year;
    double base_level;       // real GDP per capita at base_year
    double shift_constant;   // 1 - normalized early trend at base_year
    double deflator_growth;  // deflator(target) / deflator(base)
    double overestimation_ratio;
    double bias_factor;       // (g + r) / g
    double alternative_bias;  // multiplicative reading: g * r / g = r
    double scaled_cpi_factor;
};

/** @brief Early trend over `years`, divided by the series value at base_year. */
[[nodiscard]] AnnualSeries normalized_trend_line(const trend::TrendFit& fit, const AnnualSeries& series,
                                                 Year base_year, YearWindow years);

/**
 * @brief Normalization, shift, deflator growth and bias factor for one country.
 *
 * The overestimation ratio is break_report.level_ratio.
 */
[[nodiscard]] BiasReport bias_pipeline(const AnnualSeries& real_gdp_pc, const AnnualSeries& deflator,
                                       const breaks::BreakReport& break_report, Year base_year, Year target_year,
                                       double scaled_cpi_factor = 1.4);

}  // namespace gdptrend::bias
