#pragma once

#include <optional>
#include <span>

#include "gdptrend/series.hpp"

namespace gdptrend::trend {

/** @brief Closed-form OLS of v on t. */
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;  // value at t = 0
    std::size_t n = 0;
    double r_squared = 0.0;
    double residual_std = 0.0;
    double slope_stderr = 0.0;
};

/**
 * @brief Ordinary least squares line through (t, v).
 *
 * Uses compensated, centered sums. A constant v gives r_squared = 0 and
 * residual_std = 0; with n = 2 the line is exact and both spreads are 0.
 * Throws InsufficientData (n < 2) or DegenerateTime (all t equal).
 */
[[nodiscard]] LineFit fit_line(std::span<const double> t, std::span<const double> v);

/** @brief Linear trend value = slope * (year - time_origin) + intercept. */
struct TrendFit {
    double slope = 0.0;
    double intercept = 0.0;
    Year time_origin = 0;
    YearWindow window{0, 0};
    std::size_t n_obs = 0;
    double r_squared = 0.0;
    double residual_std = 0.0;
    double slope_stderr = 0.0;

    [[nodiscard]] double fitted(double year) const noexcept {
        return slope * (year - static_cast<double>(time_origin)) + intercept;
    }
};

/** @brief OLS trend over the observations inside `window`; origin defaults to window.start. */
[[nodiscard]] TrendFit fit_linear_trend(const AnnualSeries& series, YearWindow window,
                                        std::optional<Year> time_origin = std::nullopt);

[[nodiscard]] double extrapolate(const TrendFit& fit, double year) noexcept;

/** @brief slope / level; ZeroLevel when level is 0. */
[[nodiscard]] double growth_rate(const TrendFit& fit, double level);

/** @brief Calendar year where the trend line is zero; FlatTrend when slope is 0. */
[[nodiscard]] double zero_crossing_year(const TrendFit& fit);

/** @brief (observed - trend) / trend at `year`; positive means above trend. */
[[nodiscard]] double deviation_from_trend(const AnnualSeries& series, const TrendFit& fit, Year year);

}  // namespace gdptrend::trend
