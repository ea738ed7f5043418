#include "gdptrend/trend.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gdptrend/error.hpp"
#include "gdptrend/numeric.hpp"

namespace gdptrend::trend {

namespace {
double mean(std::span<const double> x) {
    CompensatedSum s;
    for (double v : x) s.add(v);
    return s.value() / static_cast<double>(x.size());
}
}  // namespace

LineFit fit_line(std::span<const double> t, std::span<const double> v) {
    if (t.size() != v.size()) throw Error(ErrorKind::InvalidArgument, "t and v differ in length");
    const std::size_t n = t.size();
    if (n < 2) throw Error(ErrorKind::InsufficientData, "need at least 2 points, got " + std::to_string(n));

    const double t_bar = mean(t);
    const double v_bar = mean(v);
    CompensatedSum sxx, sxy, syy;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = t[i] - t_bar;
        const double dv = v[i] - v_bar;
        sxx.add(dt * dt);
        sxy.add(dt * dv);
        syy.add(dv * dv);
    }
    if (sxx.value() <= 0.0) throw Error(ErrorKind::DegenerateTime, "all observations share one time point");

    LineFit fit;
    fit.n = n;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = v_bar - fit.slope * t_bar;

    CompensatedSum ssr;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = v[i] - (fit.intercept + fit.slope * t[i]);
        ssr.add(e * e);
    }
    const double sst = syy.value();
    if (sst > 0.0) {
        fit.r_squared = std::clamp(1.0 - ssr.value() / sst, 0.0, 1.0);
        if (n > 2) {
            fit.residual_std = std::sqrt(ssr.value() / static_cast<double>(n - 2));
            fit.slope_stderr = fit.residual_std / std::sqrt(sxx.value());
        }
    }
    return fit;
}

TrendFit fit_linear_trend(const AnnualSeries& series, YearWindow window, std::optional<Year> time_origin) {
    const Year origin = time_origin.value_or(window.start);
    std::vector<double> t;
    std::vector<double> v;
    for (const auto& o : series.observations()) {
        if (!window.contains(o.year)) continue;
        t.push_back(static_cast<double>(o.year - origin));
        v.push_back(o.value);
    }
    if (t.size() < 2) {
        throw Error(ErrorKind::InsufficientData, series.country() + ": " + std::to_string(t.size()) +
                                                     " observation(s) in " + std::to_string(window.start) +
                                                     "-" + std::to_string(window.end));
    }
    const LineFit line = fit_line(t, v);
    TrendFit fit;
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.time_origin = origin;
    fit.window = window;
    fit.n_obs = line.n;
    fit.r_squared = line.r_squared;
    fit.residual_std = line.residual_std;
    fit.slope_stderr = line.slope_stderr;
    return fit;
}

double extrapolate(const TrendFit& fit, double year) noexcept { return fit.fitted(year); }

double growth_rate(const TrendFit& fit, double level) {
    if (level == 0.0) throw Error(ErrorKind::ZeroLevel, "growth rate at zero level");
    return fit.slope / level;
}

double zero_crossing_year(const TrendFit& fit) {
    if (fit.slope == 0.0) throw Error(ErrorKind::FlatTrend, "flat trend never crosses zero");
    return static_cast<double>(fit.time_origin) - fit.intercept / fit.slope;
}

double deviation_from_trend(const AnnualSeries& series, const TrendFit& fit, Year year) {
    const auto observed = series.value_at(year);
    if (!observed) {
        throw Error(ErrorKind::MissingYear, series.country() + ": no observation in " + std::to_string(year));
    }
    const double expected = extrapolate(fit, year);
    if (expected == 0.0) {
        throw Error(ErrorKind::ZeroTrendValue, series.country() + ": trend is zero in " + std::to_string(year));
    }
    return (*observed - expected) / expected;
}

}  // namespace gdptrend::trend
